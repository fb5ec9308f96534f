#include "dormant/formulas.hpp"

#include "dormant/cyclotomic.hpp"
#include "dormant/errors.hpp"
#include "dormant/trig_residue.hpp"

#include <stdexcept>
#include <string>

namespace dormant {

namespace {

void check_range(const GenusPrime& gp, RangePolicy policy) {
    if (policy == RangePolicy::enforce && !gp.in_range())
        throw hypothesis_error("degree formulas are proven only for p > 2(g-1); "
                               "got g = " + std::to_string(gp.g) +
                               ", p = " + std::to_string(gp.p));
}

} // namespace

GenusPrime::GenusPrime(unsigned genus, unsigned long prime) : g(genus), p(prime) {
    if (g < 2)
        throw std::invalid_argument("GenusPrime: genus must be >= 2");
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw std::invalid_argument("GenusPrime: characteristic must be an odd prime");
}

Rational degree(const GenusPrime& gp, RangePolicy policy) {
    check_range(gp, policy);
    Rational v = v_polynomial(gp.g - 1).poly.evaluate(Rational(Integer(gp.p)));
    return Rational(ipow(gp.p, gp.g - 1), ipow(2, 2 * gp.g - 1)) * v;
}

Rational degree_via_zeta(const GenusPrime& gp, RangePolicy policy) {
    check_range(gp, policy);
    Rational z = zeta_sum_exact(gp.g, gp.p);
    Rational d = Rational(ipow(gp.p, gp.g - 1), Integer(2)) * z;
    return (gp.g % 2 == 0) ? -d : d; // sign (-1)^{g-1}
}

Rational quot_degree(const GenusPrime& gp, RangePolicy policy) {
    check_range(gp, policy);
    Rational v = v_polynomial(gp.g - 1).poly.evaluate(Rational(Integer(gp.p)));
    return Rational(ipow(gp.p, 2 * gp.g - 1), ipow(2, 2 * gp.g - 1)) * v;
}

Rational bundle_count(const GenusPrime& gp, RangePolicy policy) {
    check_range(gp, policy);
    Rational v = v_polynomial(gp.g - 1).poly.evaluate(Rational(Integer(gp.p)));
    return Rational(2) * Rational(ipow(gp.p, gp.g - 1)) * v;
}

Rational verlinde_dimension(unsigned g, unsigned long k) {
    if (g < 2)
        throw std::invalid_argument("verlinde_dimension: genus must be >= 2");
    Rational v = v_polynomial(g - 1).poly.evaluate(Rational(Integer(k + 2)));
    return Rational(ipow(k + 2, g - 1), ipow(2, g - 1)) * v;
}

Polynomial degree_polynomial(unsigned g) {
    if (g < 2)
        throw std::invalid_argument("degree_polynomial: genus must be >= 2");
    Polynomial v = v_polynomial(g - 1).poly.with_indeterminate("p");
    Polynomial shift = Polynomial::monomial("p", g - 1,
                                            Rational(Integer(1), ipow(2, 2 * g - 1)));
    Polynomial d = shift * v;
    if (d.degree() != 3 * static_cast<long>(g) - 3)
        throw std::logic_error("degree_polynomial: unexpected degree");
    return d;
}

QuotProfile generic_quot_invariants(unsigned long n, long d, unsigned r, unsigned g) {
    if (n == 0 || r == 0 || r >= n)
        throw std::invalid_argument("generic_quot_invariants: need 0 < r < n");
    if (g < 2)
        throw std::invalid_argument("generic_quot_invariants: genus must be >= 2");
    long ln = static_cast<long>(n);
    long lr = static_cast<long>(r);
    long lg = static_cast<long>(g);

    long b = ((-d) % ln + ln) % ln; // d = a*n - b with 0 <= b < n
    long a = (d + b) / ln;

    long base = lr * (ln - lr) * (lg - 1);
    long epsilon = ((lr * d - base) % ln + ln) % ln;
    long s_r = base + epsilon;
    long e_max = (d * lr - s_r) / ln; // exact: r*d - s_r = epsilon' + ... divisible
    if (e_max * ln != d * lr - s_r)
        throw std::logic_error("generic_quot_invariants: stratum index not integral");
    return QuotProfile{n, d, r, a, b, epsilon, s_r, e_max};
}

QuotProfile frobenius_pushforward_profile(const GenusPrime& gp, RangePolicy policy) {
    check_range(gp, policy);
    long d = static_cast<long>(gp.p - 2) * (static_cast<long>(gp.g) - 1);
    return generic_quot_invariants(gp.p, d, 2, gp.g);
}

} // namespace dormant
