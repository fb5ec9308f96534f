#ifndef DORMANT_POLYNOMIAL_HPP
#define DORMANT_POLYNOMIAL_HPP

#include "dormant/rational.hpp"

#include <string>
#include <vector>

namespace dormant {

/*
 * Dense univariate polynomial over Rational with a named indeterminate
 * (one of "k", "p", "x", "w").
 *
 * Invariants: the coefficient vector carries no trailing zeros, so
 * degree() == coefficient count - 1 (the zero polynomial has degree -1).
 * Constants compare equal regardless of indeterminate; mixed-indeterminate
 * arithmetic is rejected unless one operand is constant.
 */
class Polynomial {
public:
    explicit Polynomial(std::string indeterminate = "x");
    Polynomial(std::string indeterminate, std::vector<Rational> coeffs);

    static Polynomial constant(const Rational& c, const std::string& indeterminate = "x");
    // c * var^exponent
    static Polynomial monomial(const std::string& indeterminate, std::size_t exponent,
                               const Rational& c = Rational(1));

    const std::string& indeterminate() const { return var_; }
    // -1 for the zero polynomial
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    // coefficient of var^e; zero beyond the degree
    Rational coeff(std::size_t e) const;
    const std::vector<Rational>& coefficients() const { return c_; }

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& s, const Polynomial& a);
    Polynomial operator-() const;

    friend bool operator==(const Polynomial& a, const Polynomial& b);
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    // Exact Horner evaluation.
    Rational evaluate(const Rational& x) const;

    // Same coefficients under a different indeterminate name.
    Polynomial with_indeterminate(const std::string& indeterminate) const;

    // Render over a common denominator: "(p^3 - p)/24", "p^2 + 2", "-5/3", "0".
    // parse(to_string()) reproduces the polynomial exactly.
    std::string to_string() const;
    static Polynomial parse(const std::string& text);

private:
    void trim();

    std::string var_;
    std::vector<Rational> c_; // c_[e] multiplies var_^e
};

} // namespace dormant

#endif
