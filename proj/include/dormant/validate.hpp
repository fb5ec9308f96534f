#ifndef DORMANT_VALIDATE_HPP
#define DORMANT_VALIDATE_HPP

#include "dormant/polynomial.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace dormant {

/*
 * Self-validation over a (genus, prime) grid: every identity the library
 * exposes is recomputed along independent paths and compared.  A failure
 * is an internal inconsistency (or a performance regression), never a
 * property of the inputs.
 */

struct ValidationFailure {
    std::string case_id; // e.g. "g3p7:path_agreement"
    std::string expected;
    std::string got;
};

struct ValidationOutcome {
    unsigned max_genus = 0;
    unsigned long max_prime = 0;
    std::size_t cases_run = 0;
    std::vector<ValidationFailure> failures;
    double wall_seconds = 0.0;

    bool ok() const { return failures.empty(); }
};

// Runs every check for 2 <= g <= max_genus over odd primes p <= max_prime
// with p > 2(g-1).  Genera with no admissible prime contribute no cases.
ValidationOutcome validate_suite(unsigned max_genus, unsigned long max_prime);

// Frozen degree polynomials for g = 2..10, transcribed term by term from
// the published closed forms; validate_suite compares degree_polynomial
// against these.
struct GoldenEntry {
    unsigned g;
    Polynomial poly;
};
const std::vector<GoldenEntry>& golden_degree_table();

} // namespace dormant

#endif
