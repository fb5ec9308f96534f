#include "dormant/bernoulli.hpp"

#include <stdexcept>

namespace dormant {

void BernoulliTable::extend(std::size_t count) {
    if (b_.empty())
        b_.push_back(Rational(1)); // B_0
    for (std::size_t j = b_.size(); j < count; ++j) {
        Rational acc;
        for (std::size_t m = 0; m < j; ++m)
            acc += Rational(binomial(j + 1, m)) * b_[m];
        b_.push_back(-acc / Rational(static_cast<long>(j) + 1));
    }
}

std::vector<Rational> bernoulli_numbers(std::size_t count) {
    if (count == 0)
        throw std::invalid_argument("bernoulli_numbers: count must be positive");
    BernoulliTable t(count);
    return t.values();
}

} // namespace dormant
