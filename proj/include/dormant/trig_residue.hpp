#ifndef DORMANT_TRIG_RESIDUE_HPP
#define DORMANT_TRIG_RESIDUE_HPP

#include "dormant/laurent.hpp"
#include "dormant/polynomial.hpp"
#include "dormant/rational.hpp"

namespace dormant {

/*
 * Closed forms for the trigonometric character sums
 *
 *   V(n, k) = sum_{theta=1}^{k-1} 1 / sin^{2n}(pi theta / k)
 *
 * via the residue identity V(n, k) = -Res_{x=0} [ k cot(kx) / sin^{2n} x ].
 * The residue of a rational-in-k Laurent product is the coefficient of
 * x^{-1}, so V(n, .) is a polynomial in k of degree 2n with only even
 * powers; it vanishes at k = 1 and has leading coefficient
 * (2n)!! / (2n+1)!! = 4^n n!^2 / (2n+1)!.
 */

struct VPolynomial {
    unsigned n;      // half the sine exponent
    Polynomial poly; // in the indeterminate "k"
};

// Laurent expansion of cot(x) at 0 through x^order (order >= -1):
//   cot x = 1/x + sum_{j>=1} (-1)^j 4^j B_{2j} / (2j)! x^{2j-1}.
LaurentSeries<Rational> cot_series(long order);

// Laurent expansion of k*cot(kx) in x, with polynomial-in-k coefficients:
// the x^{2j-1} coefficient of cot picks up a factor k^{2j}.
LaurentSeries<Polynomial> cot_scaled_series(long order);

// Expansion of 1/sin^{2n}(x) = (1 + cot^2 x)^n for n >= 1, exact through
// x^order.  The cotangent factor is expanded far enough (order + 2n - 1)
// that the pessimistic truncation of the n-fold product lands on `order`.
LaurentSeries<Rational> inv_sin_power_series(unsigned n, long order);

// V(n, .) as an exact polynomial in k.  extra_truncation pads the working
// truncation order beyond the minimal 2n+2 (the result must not change;
// used to exercise truncation stability).
VPolynomial v_polynomial_raw(unsigned n, long extra_truncation = 0);

// Memoized front end for v_polynomial_raw(n, 0); thread-safe.
VPolynomial v_polynomial(unsigned n);

// Direct floating-point evaluation of V(n, k) by summing the k-1 terms
// (k >= 2).  rel_tol is the accuracy the caller requires; requests below
// the documented achievable bound of 10*k*epsilon are rejected.
double v_numeric(unsigned n, unsigned long k, double rel_tol = 1e-8);

} // namespace dormant

#endif
