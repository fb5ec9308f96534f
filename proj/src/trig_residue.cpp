#include "dormant/trig_residue.hpp"

#include "dormant/bernoulli.hpp"
#include "dormant/errors.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace dormant {

LaurentSeries<Rational> cot_series(long order) {
    if (order < -1)
        throw std::invalid_argument("cot_series: order must be >= -1");
    // Coefficients for exponents -1 .. order; odd exponents 2j-1 carry
    // (-1)^j 4^j B_{2j} / (2j)!, even exponents vanish.
    std::size_t top_j = static_cast<std::size_t>((order + 1) / 2);
    BernoulliTable bern(2 * top_j + 1);
    std::vector<Rational> c(static_cast<std::size_t>(order + 2));
    c[0] = Rational(1); // 1/x
    for (std::size_t j = 1; j <= top_j; ++j) {
        Rational v = Rational(ipow(4, j), factorial(2 * j)) * bern[2 * j];
        if (j % 2 == 1)
            v = -v;
        c[2 * j] = v; // exponent 2j - 1
    }
    return LaurentSeries<Rational>(-1, std::move(c));
}

LaurentSeries<Polynomial> cot_scaled_series(long order) {
    LaurentSeries<Rational> base = cot_series(order);
    std::vector<Polynomial> c;
    c.reserve(static_cast<std::size_t>(order + 2));
    for (long e = -1; e <= order; ++e) {
        Rational r = base.coeff(e);
        if (r.is_zero())
            c.push_back(Polynomial("k"));
        else // x^{2j-1} term of cot(kx), times the outer k: factor k^{2j}
            c.push_back(Polynomial::monomial("k", static_cast<std::size_t>(e + 1), r));
    }
    return LaurentSeries<Polynomial>(-1, std::move(c));
}

LaurentSeries<Rational> inv_sin_power_series(unsigned n, long order) {
    if (n == 0)
        throw std::invalid_argument("inv_sin_power_series: n must be positive");
    if (order < -2 * static_cast<long>(n))
        throw std::invalid_argument("inv_sin_power_series: order below valuation");
    // (1 + cot^2)^n: each factor costs two truncation orders, so start the
    // cotangent at order + 2n - 1 to end exactly at `order`.
    LaurentSeries<Rational> cot = cot_series(order + 2 * static_cast<long>(n) - 1);
    LaurentSeries<Rational> base = (cot * cot).plus_constant(Rational(1));
    LaurentSeries<Rational> acc = base;
    for (unsigned i = 1; i < n; ++i)
        acc = acc * base;
    return acc;
}

VPolynomial v_polynomial_raw(unsigned n, long extra_truncation) {
    if (extra_truncation < 0)
        throw std::invalid_argument("v_polynomial_raw: negative truncation padding");
    if (n == 0) // sum of k-1 ones
        return VPolynomial{0, Polynomial("k", {Rational(-1), Rational(1)})};

    long order = 2 * static_cast<long>(n) + 2 + extra_truncation;
    LaurentSeries<Polynomial> kcot = cot_scaled_series(order);
    LaurentSeries<Polynomial> inv_sin = promote(inv_sin_power_series(n, order), "k");
    LaurentSeries<Polynomial> prod = kcot * inv_sin;
    Polynomial v = -prod.coeff(-1); // V(n,.) = -Res_{x=0} k cot(kx) / sin^{2n} x

    if (v.degree() != 2 * static_cast<long>(n))
        throw std::logic_error("v_polynomial_raw: unexpected degree");
    return VPolynomial{n, std::move(v)};
}

VPolynomial v_polynomial(unsigned n) {
    static std::map<unsigned, VPolynomial> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, v_polynomial_raw(n)).first;
    return it->second;
}

double v_numeric(unsigned n, unsigned long k, double rel_tol) {
    if (k < 2)
        throw std::invalid_argument("v_numeric: k must be >= 2");
    double achievable = 10.0 * static_cast<double>(k) *
                        std::numeric_limits<double>::epsilon();
    if (!(rel_tol >= achievable))
        throw std::invalid_argument("v_numeric: requested tolerance below achievable bound");
    const double pi = std::acos(-1.0);
    double sum = 0.0;
    for (unsigned long theta = 1; theta < k; ++theta) {
        double s = std::sin(pi * static_cast<double>(theta) / static_cast<double>(k));
        double s2 = s * s;
        double term = 1.0;
        for (unsigned i = 0; i < n; ++i)
            term /= s2;
        sum += term;
    }
    return sum;
}

} // namespace dormant
