#ifndef DORMANT_CYCLOTOMIC_HPP
#define DORMANT_CYCLOTOMIC_HPP

#include "dormant/rational.hpp"

#include <vector>

namespace dormant {

/*
 * Exact arithmetic in the cyclotomic field Q(zeta_p) = Q[x]/(Phi_p) for an
 * odd prime p, elements stored on the power basis 1, x, ..., x^{p-2}.
 *
 * This is the independent evaluation path for the trigonometric sums: with
 * zeta = exp(2 pi i / p) one has (zeta^t - 1)^2 = -4 zeta^t sin^2(pi t / p),
 * so sums of 1/sin^{2(g-1)} over the nontrivial p-th roots of unity become
 * traces of x^{g-1} (x-1)^{-(2g-2)}, computable with no series expansion
 * and no floating point.
 */
class CyclotomicElement {
public:
    // Zero element of Q[x]/(Phi_p); p must be an odd prime.
    explicit CyclotomicElement(unsigned long p);

    // Reduce an arbitrary-degree coefficient vector (coeffs[e] multiplies
    // x^e) modulo Phi_p, using x^p = 1 and 1 + x + ... + x^{p-1} = 0.
    static CyclotomicElement from_power_basis(unsigned long p, std::vector<Rational> coeffs);

    static CyclotomicElement one(unsigned long p);
    static CyclotomicElement generator(unsigned long p); // the class of x

    // Inverse of (x - 1), via the extended Euclidean algorithm in Q[x]
    // (invertible since Phi_p(1) = p != 0).
    static CyclotomicElement inverse_of_x_minus_one(unsigned long p);

    unsigned long conductor() const { return p_; }
    const std::vector<Rational>& coeffs() const { return c_; } // size p-1

    friend CyclotomicElement operator*(const CyclotomicElement& a, const CyclotomicElement& b);
    CyclotomicElement pow(unsigned long e) const; // repeated squaring

    // Field trace to Q: sum over all embeddings; on the power basis
    // Tr(sum a_i x^i) = (p-1) a_0 - sum_{i>=1} a_i.
    Rational trace() const;

private:
    unsigned long p_;
    std::vector<Rational> c_;
};

// Tr( x^{g-1} (x-1)^{-(2g-2)} ) for g >= 2; equals
// (-1)^{g-1} V(g-1, p) / 4^{g-1} where V is the sine-power sum.
Rational zeta_sum_exact(unsigned g, unsigned long p);

// The same sum over the literal complex roots of unity in double precision.
// Guards that the residual imaginary part is <= 1e-9 relative to the sum of
// term magnitudes; returns the real part.
double zeta_sum_numeric(unsigned g, unsigned long p);

} // namespace dormant

#endif
