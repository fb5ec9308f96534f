#include "dormant/polynomial.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>

namespace dormant {

namespace {

void check_indeterminate(const std::string& var) {
    if (var != "k" && var != "p" && var != "x" && var != "w")
        throw std::invalid_argument("Polynomial: unsupported indeterminate \"" + var + "\"");
}

// Result indeterminate for a binary operation: constants are agnostic and
// adopt the other operand's name; two genuine indeterminates must agree.
const std::string& joint_indeterminate(const Polynomial& a, const Polynomial& b) {
    if (a.is_constant() && !b.is_constant())
        return b.indeterminate();
    if (!a.is_constant() && !b.is_constant() &&
        a.indeterminate() != b.indeterminate())
        throw std::invalid_argument("Polynomial: indeterminate mismatch (" +
                                    a.indeterminate() + " vs " + b.indeterminate() + ")");
    return a.indeterminate();
}

} // namespace

Polynomial::Polynomial(std::string indeterminate) : var_(std::move(indeterminate)) {
    check_indeterminate(var_);
}

Polynomial::Polynomial(std::string indeterminate, std::vector<Rational> coeffs)
    : var_(std::move(indeterminate)), c_(std::move(coeffs)) {
    check_indeterminate(var_);
    trim();
}

Polynomial Polynomial::constant(const Rational& c, const std::string& indeterminate) {
    return Polynomial(indeterminate, {c});
}

Polynomial Polynomial::monomial(const std::string& indeterminate, std::size_t exponent,
                                const Rational& c) {
    std::vector<Rational> v(exponent + 1);
    v[exponent] = c;
    return Polynomial(indeterminate, std::move(v));
}

void Polynomial::trim() {
    while (!c_.empty() && c_.back().is_zero())
        c_.pop_back();
}

Rational Polynomial::coeff(std::size_t e) const {
    return e < c_.size() ? c_[e] : Rational(0);
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    var_ = joint_indeterminate(*this, o);
    if (c_.size() < o.c_.size())
        c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] += o.c_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    return *this += -o;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& c : r.c_)
        c = -c;
    return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    std::string var = joint_indeterminate(a, b);
    if (a.is_zero() || b.is_zero())
        return Polynomial(var);
    std::vector<Rational> prod(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero())
            continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            prod[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(var), std::move(prod));
}

Polynomial operator*(const Rational& s, const Polynomial& a) {
    Polynomial r(a);
    for (auto& c : r.c_)
        c *= s;
    r.trim();
    return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.c_ != b.c_)
        return false;
    return a.is_constant() || b.is_constant() || a.var_ == b.var_;
}

Rational Polynomial::evaluate(const Rational& x) const {
    Rational acc;
    for (std::size_t i = c_.size(); i-- > 0;)
        acc = acc * x + c_[i];
    return acc;
}

Polynomial Polynomial::with_indeterminate(const std::string& indeterminate) const {
    return Polynomial(indeterminate, c_);
}

std::string Polynomial::to_string() const {
    if (is_zero())
        return "0";
    if (is_constant())
        return c_[0].to_string();

    // Common denominator D so that D * this has integer coefficients.
    Integer den = 1;
    for (const auto& c : c_)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.den().get_mpz_t());

    std::string body;
    for (std::size_t e = c_.size(); e-- > 0;) {
        if (c_[e].is_zero())
            continue;
        Rational scaled = Rational(den) * c_[e];
        Integer n = scaled.num(); // scaled is an integer by construction
        bool negative = n < 0;
        if (body.empty())
            body += negative ? "-" : "";
        else
            body += negative ? " - " : " + ";
        Integer a = n;
        if (negative)
            a = -a;
        std::string term;
        if (e == 0) {
            term = a.get_str();
        } else {
            if (a != 1)
                term = a.get_str() + "*";
            term += var_;
            if (e > 1)
                term += "^" + std::to_string(e);
        }
        body += term;
    }
    if (den == 1)
        return body;
    return "(" + body + ")/" + den.get_str();
}

namespace {

// Recursive-descent parser for the to_string() format (whitespace-tolerant).
struct PolyParser {
    const std::string& s;
    std::size_t i = 0;

    explicit PolyParser(const std::string& text) : s(text) {}

    [[noreturn]] void fail(const std::string& why) const {
        throw std::invalid_argument("Polynomial: cannot parse \"" + s + "\": " + why);
    }

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
            ++i;
    }

    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }

    Integer integer() {
        skip_ws();
        std::size_t start = i;
        if (i < s.size() && (s[i] == '+' || s[i] == '-'))
            ++i;
        std::size_t digits = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
            ++i;
        if (i == digits)
            fail("expected an integer");
        return Integer(s.substr(start, i - start));
    }

    bool peek_var() {
        skip_ws();
        return i < s.size() &&
               (s[i] == 'k' || s[i] == 'p' || s[i] == 'x' || s[i] == 'w');
    }

    // term := integer [* var [^ exp]] | var [^ exp]
    void term(int sign, std::string& var, std::vector<Rational>& coeffs) {
        Integer a = 1;
        bool have_coeff = false;
        skip_ws();
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            a = integer();
            have_coeff = true;
        }
        std::size_t e = 0;
        if (!have_coeff || eat('*') || peek_var()) {
            skip_ws();
            if (!peek_var())
                fail("expected an indeterminate");
            std::string name(1, s[i]);
            ++i;
            if (var.empty())
                var = name;
            else if (var != name)
                fail("mixed indeterminates");
            e = 1;
            if (eat('^')) {
                Integer exp = integer();
                if (exp < 0 || exp > 1000000)
                    fail("exponent out of range");
                e = exp.get_ui();
            }
        }
        if (coeffs.size() <= e)
            coeffs.resize(e + 1);
        if (sign < 0)
            a = -a;
        coeffs[e] += Rational(a);
    }

    // body := [-] term (('+'|'-') term)*
    void body(std::string& var, std::vector<Rational>& coeffs) {
        int sign = eat('-') ? -1 : 1;
        term(sign, var, coeffs);
        for (;;) {
            if (eat('+'))
                sign = 1;
            else if (eat('-'))
                sign = -1;
            else
                break;
            term(sign, var, coeffs);
        }
    }
};

} // namespace

Polynomial Polynomial::parse(const std::string& text) {
    PolyParser ps(text);
    std::string var;
    std::vector<Rational> coeffs;
    Integer den = 1;

    if (ps.eat('(')) {
        ps.body(var, coeffs);
        if (!ps.eat(')'))
            ps.fail("expected ')'");
        if (!ps.eat('/'))
            ps.fail("expected '/' after ')'");
        den = ps.integer();
        if (den == 0)
            ps.fail("zero denominator");
    } else {
        ps.body(var, coeffs);
        // A bare "n/d" constant: body consumed n, a slash may follow.
        if (ps.eat('/')) {
            if (!var.empty())
                ps.fail("unparenthesized body with denominator");
            den = ps.integer();
            if (den == 0)
                ps.fail("zero denominator");
        }
    }
    ps.skip_ws();
    if (ps.i != ps.s.size())
        ps.fail("trailing characters");

    Rational scale = Rational(Integer(1), den);
    for (auto& c : coeffs)
        c *= scale;
    return Polynomial(var.empty() ? "x" : var, std::move(coeffs));
}

} // namespace dormant
