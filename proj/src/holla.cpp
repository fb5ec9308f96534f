#include "dormant/errors.hpp"
#include "dormant/formulas.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <cmath>
#include <cstdlib>
#include <string>
#include <vector>

namespace dormant {

namespace {

/*
 * One evaluation of the Vafa-Intriligator sum at a fixed binary precision.
 * Complex is a boost cpp_complex instantiation; Real its component type.
 * Returns true and stores the value when the result passes the guards
 * (imaginary residue and distance to the nearest integer both <= 1e-6
 * relative to the magnitude).
 */
template <typename Complex>
bool try_holla_sum(unsigned long n, long b, unsigned r, unsigned g, long sign_exp,
                   double& out) {
    using Real = typename boost::multiprecision::component_type<Complex>::type;
    const Real two_pi = 2 * boost::math::constants::pi<Real>();

    std::vector<Complex> roots(n);
    for (unsigned long t = 0; t < n; ++t) {
        Real arg = two_pi * t / n;
        roots[t] = Complex(cos(arg), sin(arg));
    }

    // Integer powers by repeated squaring; negative exponents via one
    // division (every base here is a product of magnitude-1 numbers).
    auto cpow = [](Complex base, long e) {
        unsigned long m = static_cast<unsigned long>(e < 0 ? -e : e);
        Complex acc = 1;
        while (m != 0) {
            if (m & 1)
                acc *= base;
            m >>= 1;
            if (m != 0)
                base *= base;
        }
        return e < 0 ? Complex(1) / acc : acc;
    };

    // Ordered tuples of distinct root indices via an odometer with a
    // used-mask; r < n is guaranteed by the caller.
    std::vector<unsigned long> idx(r, 0);
    std::vector<bool> used(n, false);
    Complex sum = 0;
    long prod_exp = static_cast<long>(b) - static_cast<long>(g) + 1;

    unsigned level = 0;
    std::vector<unsigned long> pos(r, 0);
    while (true) {
        if (pos[level] == n) {
            if (level == 0)
                break;
            --level;
            used[idx[level]] = false;
            ++pos[level];
            continue;
        }
        if (used[pos[level]]) {
            ++pos[level];
            continue;
        }
        idx[level] = pos[level];
        if (level + 1 < r) {
            used[idx[level]] = true;
            ++level;
            pos[level] = 0;
            continue;
        }
        // Complete tuple: accumulate its term.
        Complex prod = 1, denom = 1;
        for (unsigned i = 0; i < r; ++i)
            prod *= roots[idx[i]];
        for (unsigned i = 0; i < r; ++i)
            for (unsigned j = 0; j < r; ++j)
                if (i != j)
                    denom *= roots[idx[i]] - roots[idx[j]];
        sum += cpow(prod, prod_exp) / cpow(denom, static_cast<long>(g) - 1);
        ++pos[level];
    }

    // Prefactor n^{r(g-1)} / r! and the sign.
    Real pref = pow(Real(n), static_cast<int>(r * (g - 1)));
    for (unsigned i = 2; i <= r; ++i)
        pref /= i;
    sum *= pref;
    if (sign_exp % 2 != 0)
        sum = -sum;

    double re = static_cast<double>(sum.real());
    double im = static_cast<double>(sum.imag());
    double mag = std::abs(re) < 1.0 ? 1.0 : std::abs(re);
    if (std::abs(im) > 1e-6 * mag)
        return false;
    double nearest = std::round(re);
    if (std::abs(re - nearest) > 1e-6 * mag)
        return false;
    out = re;
    return true;
}

} // namespace

double holla_vi_degree(unsigned long n, long d, unsigned r, unsigned g,
                       unsigned precision_bits) {
    if (n == 0 || r == 0 || r >= n)
        throw std::invalid_argument("holla_vi_degree: need 0 < r < n");
    if (g < 2)
        throw std::invalid_argument("holla_vi_degree: genus must be >= 2");

    QuotProfile q = generic_quot_invariants(n, d, r, g);

    // Sign exponent (r-1)(br - (g-1)r^2)/n must be an integer.
    long lr = static_cast<long>(r), lg = static_cast<long>(g), ln = static_cast<long>(n);
    long num = (lr - 1) * (q.b * lr - (lg - 1) * lr * lr);
    if (num % ln != 0)
        throw hypothesis_error("holla_vi_degree: sign exponent (r-1)(br-(g-1)r^2) "
                               "is not divisible by n");
    long sign_exp = num / ln;

    unsigned bits = 128;
    while (bits < precision_bits && bits < 1024)
        bits *= 2;

    double out = 0;
    for (; bits <= 1024; bits *= 2) {
        bool ok = false;
        switch (bits) {
        case 128:
            ok = try_holla_sum<boost::multiprecision::cpp_complex<128,
                     boost::multiprecision::backends::digit_base_2>>(n, q.b, r, g, sign_exp, out);
            break;
        case 256:
            ok = try_holla_sum<boost::multiprecision::cpp_complex<256,
                     boost::multiprecision::backends::digit_base_2>>(n, q.b, r, g, sign_exp, out);
            break;
        case 512:
            ok = try_holla_sum<boost::multiprecision::cpp_complex<512,
                     boost::multiprecision::backends::digit_base_2>>(n, q.b, r, g, sign_exp, out);
            break;
        default:
            ok = try_holla_sum<boost::multiprecision::cpp_complex<1024,
                     boost::multiprecision::backends::digit_base_2>>(n, q.b, r, g, sign_exp, out);
            break;
        }
        if (ok)
            return out;
    }
    throw numeric_instability_error("holla_vi_degree: sum failed the integrality "
                                    "guard at all precisions up to 1024 bits");
}

} // namespace dormant
