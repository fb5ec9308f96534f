#ifndef DORMANT_FORMULAS_HPP
#define DORMANT_FORMULAS_HPP

#include "dormant/polynomial.hpp"
#include "dormant/rational.hpp"

namespace dormant {

/*
 * The quantities attached to a smooth projective curve of genus g over an
 * algebraically closed field of characteristic p (an odd prime):
 *
 *   degree(g, p)       generic number of dormant indigenous bundles,
 *                      = p^{g-1} / 2^{2g-1} * V(g-1, p)
 *   quot_degree        degree of the associated Quot scheme, = p^g * degree
 *   bundle_count       dormant torally indigenous count, = 2^{2g} * degree
 *   verlinde_dimension dim of the level-k rank-2 conformal block space,
 *                      = (k+2)^{g-1} / 2^{g-1} * V(g-1, k+2)
 *
 * with V(n, k) the sine-power sum from trig_residue.  The degree formulas
 * are proven for p > 2(g-1); outside that range they are formula values
 * only and are guarded by RangePolicy.
 */

struct GenusPrime {
    unsigned g;      // genus, >= 2
    unsigned long p; // odd prime characteristic

    GenusPrime(unsigned genus, unsigned long prime);

    // The proven hypothesis p > 2(g-1).
    bool in_range() const { return p > 2 * (static_cast<unsigned long>(g) - 1); }
};

enum class RangePolicy {
    enforce,            // throw hypothesis_error outside the proven range
    allow_out_of_range, // compute anyway; caller labels the result
};

Rational degree(const GenusPrime& gp, RangePolicy policy = RangePolicy::enforce);

// Same quantity through the cyclotomic trace: (-1)^{g-1} p^{g-1} / 2 *
// Tr(x^{g-1} (x-1)^{-(2g-2)}).  Independent of the residue path end to end.
Rational degree_via_zeta(const GenusPrime& gp, RangePolicy policy = RangePolicy::enforce);

Rational quot_degree(const GenusPrime& gp, RangePolicy policy = RangePolicy::enforce);
Rational bundle_count(const GenusPrime& gp, RangePolicy policy = RangePolicy::enforce);

// Level k >= 0; defined for any genus >= 2 with no primality constraint.
Rational verlinde_dimension(unsigned g, unsigned long k);

// degree(g, .) as an exact polynomial in the indeterminate "p";
// its degree is exactly 3g-3.
Polynomial degree_polynomial(unsigned g);

/*
 * Invariants of the generic Quot scheme of rank-r degree-(-d) subsheaves of
 * a trivial rank-n bundle on a genus-g curve, in the normalization d = an-b
 * with 0 <= b < n.
 */
struct QuotProfile {
    unsigned long n;
    long d;
    unsigned r;
    long a, b;
    long epsilon; // r*d - r(n-r)(g-1) mod n, in [0, n)
    long s_r;     // r(n-r)(g-1) + epsilon
    long e_max;   // (d*r - s_r)/n, top stratum index
};

QuotProfile generic_quot_invariants(unsigned long n, long d, unsigned r, unsigned g);

// The profile realized by the Frobenius pushforward situation:
// n = p, r = 2, d = (p-2)(g-1); requires p > 2(g-1) so that e_max = 0.
QuotProfile frobenius_pushforward_profile(const GenusPrime& gp,
                                          RangePolicy policy = RangePolicy::enforce);

/*
 * Vafa-Intriligator / Holla closed form for the Quot scheme degree:
 *
 *   (-1)^{(r-1)(br - (g-1)r^2)/n} * n^{r(g-1)} / r! *
 *     sum over ordered r-tuples of distinct n-th roots of unity of
 *       (rho_1 ... rho_r)^{b-g+1} / prod_{i != j} (rho_i - rho_j)^{g-1}
 *
 * evaluated in complex interval-free multiprecision floats of the given
 * binary precision (128, 256, 512 or 1024 bits; anything else rounds up).
 * The sign exponent must be an integer (hypothesis_error otherwise).  The
 * sum must come out near-real and near-integer (relative 1e-6); on failure
 * the precision is doubled before giving up with numeric_instability_error.
 */
double holla_vi_degree(unsigned long n, long d, unsigned r, unsigned g,
                       unsigned precision_bits = 128);

} // namespace dormant

#endif
