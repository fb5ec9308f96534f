#ifndef DORMANT_BERNOULLI_HPP
#define DORMANT_BERNOULLI_HPP

#include "dormant/rational.hpp"

#include <cstddef>
#include <vector>

namespace dormant {

/*
 * Table of Bernoulli numbers B_0, B_1, ... (convention B_1 = -1/2),
 * computed exactly by the defining recurrence
 *
 *   B_0 = 1,   B_j = -1/(j+1) * sum_{m=0}^{j-1} C(j+1, m) B_m   (j >= 1),
 *
 * extendable on demand.  B_j = 0 for odd j >= 3.
 */
class BernoulliTable {
public:
    explicit BernoulliTable(std::size_t count = 2) { extend(count); }

    // Ensure B_0 .. B_{count-1} are available.
    void extend(std::size_t count);

    std::size_t size() const { return b_.size(); }
    const Rational& operator[](std::size_t j) const { return b_.at(j); }
    const std::vector<Rational>& values() const { return b_; }

private:
    std::vector<Rational> b_;
};

// Convenience: the first `count` Bernoulli numbers (count >= 1).
std::vector<Rational> bernoulli_numbers(std::size_t count);

} // namespace dormant

#endif
