#include "dormant/cyclotomic.hpp"

#include "dormant/errors.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <utility>

namespace dormant {

namespace {

void check_odd_prime(unsigned long p) {
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw std::invalid_argument("cyclotomic: p must be an odd prime");
}

// Plain dense polynomials over Q, lowest degree first, for the one-off
// extended Euclid below.  Kept file-local: the library's Polynomial type
// deliberately has no division.
using QPoly = std::vector<Rational>;

void qtrim(QPoly& a) {
    while (!a.empty() && a.back().is_zero())
        a.pop_back();
}

QPoly qsub_scaled(QPoly a, const QPoly& b, const Rational& s, std::size_t shift) {
    // a - s * x^shift * b
    if (a.size() < b.size() + shift)
        a.resize(b.size() + shift);
    for (std::size_t i = 0; i < b.size(); ++i)
        a[i + shift] -= s * b[i];
    qtrim(a);
    return a;
}

QPoly qmul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty())
        return {};
    QPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    qtrim(r);
    return r;
}

// a = q*b + r with deg r < deg b; returns {q, r}.
std::pair<QPoly, QPoly> qdivmod(QPoly a, const QPoly& b) {
    QPoly q;
    qtrim(a);
    while (a.size() >= b.size() && !b.empty()) {
        std::size_t shift = a.size() - b.size();
        Rational s = a.back() / b.back();
        if (q.size() < shift + 1)
            q.resize(shift + 1);
        q[shift] += s;
        a = qsub_scaled(std::move(a), b, s, shift);
    }
    return {std::move(q), std::move(a)};
}

} // namespace

CyclotomicElement::CyclotomicElement(unsigned long p) : p_(p) {
    check_odd_prime(p);
    c_.resize(p - 1);
}

CyclotomicElement CyclotomicElement::from_power_basis(unsigned long p,
                                                      std::vector<Rational> coeffs) {
    CyclotomicElement r(p);
    // Fold exponents with x^p = 1 (valid modulo Phi_p, which divides x^p - 1) ...
    std::vector<Rational> folded(p);
    for (std::size_t e = 0; e < coeffs.size(); ++e)
        folded[e % p] += coeffs[e];
    // ... then eliminate x^{p-1} = -(1 + x + ... + x^{p-2}).
    for (std::size_t i = 0; i + 1 < p; ++i)
        r.c_[i] = folded[i] - folded[p - 1];
    return r;
}

CyclotomicElement CyclotomicElement::one(unsigned long p) {
    CyclotomicElement r(p);
    r.c_[0] = Rational(1);
    return r;
}

CyclotomicElement CyclotomicElement::generator(unsigned long p) {
    CyclotomicElement r(p);
    r.c_[1] = Rational(1);
    return r;
}

CyclotomicElement CyclotomicElement::inverse_of_x_minus_one(unsigned long p) {
    check_odd_prime(p);
    // Extended Euclid on (Phi_p, x - 1): maintain r_i = s_i Phi_p + t_i (x-1);
    // the last nonzero remainder is the constant Phi_p(1)-related unit.
    QPoly phi(p, Rational(1));            // 1 + x + ... + x^{p-1}
    QPoly xm1 = {Rational(-1), Rational(1)}; // x - 1

    QPoly r0 = phi, r1 = xm1;
    QPoly t0 = {}, t1 = {Rational(1)};
    while (!r1.empty() && r1.size() > 1) {
        auto [q, rem] = qdivmod(r0, r1);
        QPoly tnext = qsub_scaled(t0, qmul(q, t1), Rational(1), 0);
        r0 = std::move(r1);
        r1 = std::move(rem);
        t0 = std::move(t1);
        t1 = std::move(tnext);
    }
    if (r1.empty())
        throw std::logic_error("cyclotomic: x - 1 divides Phi_p"); // unreachable
    // r1 is a nonzero constant c with c = s Phi_p + t1 (x-1); u = t1 / c.
    Rational inv_c = Rational(1) / r1[0];
    for (auto& t : t1)
        t *= inv_c;
    return from_power_basis(p, std::move(t1));
}

CyclotomicElement operator*(const CyclotomicElement& a, const CyclotomicElement& b) {
    if (a.p_ != b.p_)
        throw std::invalid_argument("cyclotomic: conductor mismatch");
    std::vector<Rational> prod(2 * a.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero())
            continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            prod[i + j] += a.c_[i] * b.c_[j];
    }
    return CyclotomicElement::from_power_basis(a.p_, std::move(prod));
}

CyclotomicElement CyclotomicElement::pow(unsigned long e) const {
    CyclotomicElement acc = one(p_);
    CyclotomicElement base = *this;
    while (e > 0) {
        if (e & 1)
            acc = acc * base;
        e >>= 1;
        if (e > 0)
            base = base * base;
    }
    return acc;
}

Rational CyclotomicElement::trace() const {
    // Tr(1) = p-1 and Tr(x^i) = -1 for 1 <= i <= p-2.
    Rational t = Rational(static_cast<long>(p_) - 1) * c_[0];
    for (std::size_t i = 1; i < c_.size(); ++i)
        t -= c_[i];
    return t;
}

Rational zeta_sum_exact(unsigned g, unsigned long p) {
    if (g < 2)
        throw std::invalid_argument("zeta_sum_exact: genus must be >= 2");
    check_odd_prime(p);
    CyclotomicElement u = CyclotomicElement::inverse_of_x_minus_one(p);
    CyclotomicElement e = CyclotomicElement::generator(p).pow(g - 1) * u.pow(2 * g - 2);
    return e.trace();
}

double zeta_sum_numeric(unsigned g, unsigned long p) {
    if (g < 2)
        throw std::invalid_argument("zeta_sum_numeric: genus must be >= 2");
    check_odd_prime(p);
    const double pi = std::acos(-1.0);
    std::complex<double> sum = 0.0;
    double scale = 0.0; // sum of term magnitudes, for the imaginary guard
    for (unsigned long t = 1; t < p; ++t) {
        double arg = 2.0 * pi * static_cast<double>(t) / static_cast<double>(p);
        std::complex<double> zeta = std::polar(1.0, arg);
        std::complex<double> term =
            std::pow(zeta, static_cast<double>(g - 1)) /
            std::pow(zeta - 1.0, static_cast<double>(2 * g - 2));
        sum += term;
        scale += std::abs(term);
    }
    // The exact sum is rational, hence real; cancellation of the imaginary
    // parts is judged relative to the magnitude of what was summed.
    if (std::abs(sum.imag()) > 1e-9 * std::max(1.0, scale))
        throw numeric_instability_error("zeta_sum_numeric: imaginary residue too large");
    return sum.real();
}

} // namespace dormant
