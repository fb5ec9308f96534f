#ifndef DORMANT_RATIONAL_HPP
#define DORMANT_RATIONAL_HPP

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace dormant {

using Integer = mpz_class;

/*
 * Exact arbitrary-precision rational number.
 *
 * Canonical form is maintained at all times: lowest terms, positive
 * denominator, zero represented as 0/1.  All arithmetic is exact; there is
 * no implicit conversion to floating point (use to_double() explicitly).
 */
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}                     // NOLINT: implicit by design
    Rational(const Integer& n) : v_(n) {}           // NOLINT: implicit by design
    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}
    Rational(const Integer& num, const Integer& den) {
        if (den == 0)
            throw std::invalid_argument("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    // Accepts "n" or "n/d" with optional sign; rejects everything else.
    static Rational parse(const std::string& text) {
        mpq_class q;
        try {
            q = mpq_class(text, 10);
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("Rational: cannot parse \"" + text + "\"");
        }
        if (q.get_den() == 0)
            throw std::invalid_argument("Rational: zero denominator in \"" + text + "\"");
        q.canonicalize();
        Rational r;
        r.v_ = std::move(q);
        return r;
    }

    const Integer& num() const { return v_.get_num(); }
    const Integer& den() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero())
            throw std::invalid_argument("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { Rational r; r.v_ = -v_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    // "n" when the denominator is 1, "n/d" otherwise.
    std::string to_string() const { return v_.get_str(); }

    double to_double() const { return v_.get_d(); }

private:
    mpq_class v_;
};

inline Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }

// base^exp for integer exp; negative exponents require a nonzero base.
inline Rational pow(const Rational& base, long exp) {
    if (exp < 0) {
        if (base.is_zero())
            throw std::invalid_argument("pow: zero base with negative exponent");
        return pow(Rational(1) / base, -exp);
    }
    Integer n, d;
    mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), static_cast<unsigned long>(exp));
    mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), static_cast<unsigned long>(exp));
    return Rational(n, d);
}

inline Integer ipow(const Integer& base, unsigned long exp) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline Integer ipow(unsigned long base, unsigned long exp) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

inline Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline bool is_prime(unsigned long n) {
    mpz_class m(n);
    return mpz_probab_prime_p(m.get_mpz_t(), 50) != 0;
}

} // namespace dormant

#endif
