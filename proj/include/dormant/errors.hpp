#ifndef DORMANT_ERRORS_HPP
#define DORMANT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dormant {

/*
 * Error vocabulary shared by the whole library.  The CLI maps these onto
 * exit statuses: usage/domain errors -> 1, hypothesis_error -> 2,
 * numeric_instability_error -> 3.
 */

// A formula was asked for outside the range where it is proven, or an
// arithmetic hypothesis it depends on (divisibility of the sign exponent,
// p > 2(g-1), ...) fails.
class hypothesis_error : public std::domain_error {
public:
    explicit hypothesis_error(const std::string& msg) : std::domain_error(msg) {}
};

// A floating-point evaluation failed its own consistency guard (residual
// imaginary part too large, value not close enough to an integer, ...).
class numeric_instability_error : public std::runtime_error {
public:
    explicit numeric_instability_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Inversion of a Laurent series whose leading coefficient is not a unit.
class singular_series_error : public std::domain_error {
public:
    explicit singular_series_error(const std::string& msg) : std::domain_error(msg) {}
};

} // namespace dormant

#endif
