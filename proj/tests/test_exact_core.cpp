#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dormant/bernoulli.hpp"
#include "dormant/laurent.hpp"
#include "dormant/polynomial.hpp"
#include "dormant/rational.hpp"

#include <random>
#include <vector>

using namespace dormant;

TEST_CASE("rational canonical form") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(-6, -4) == Rational(3, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(0).den() == 1);
    CHECK(Rational(-3, 6).num() == -1);
    CHECK(Rational(-3, 6).den() == 2);
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("rational arithmetic and comparisons") {
    Rational a(1, 2), b(1, 3);
    CHECK(a + b == Rational(5, 6));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 6));
    CHECK(a / b == Rational(3, 2));
    CHECK(-a == Rational(-1, 2));
    CHECK(a > b);
    CHECK(b < a);
    CHECK(a != b);
    CHECK(Rational(7).is_integer());
    CHECK(!a.is_integer());
    CHECK(a.sign() == 1);
    CHECK((-a).sign() == -1);
    CHECK(Rational(0).sign() == 0);
    CHECK_THROWS_AS(a / Rational(0), std::invalid_argument);
}

TEST_CASE("rational string round-trip") {
    CHECK(Rational(5).to_string() == "5");
    CHECK(Rational(-2, 3).to_string() == "-2/3");
    CHECK(Rational::parse("-2/3") == Rational(-2, 3));
    CHECK(Rational::parse("10/4") == Rational(5, 2));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);

    std::mt19937 rng(20260816);
    std::uniform_int_distribution<long> num(-1000000, 1000000);
    std::uniform_int_distribution<long> den(1, 1000000);
    for (int i = 0; i < 200; ++i) {
        Rational r(num(rng), den(rng));
        CHECK(Rational::parse(r.to_string()) == r);
    }
}

TEST_CASE("rational powers and integer helpers") {
    CHECK(pow(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(pow(Rational(2, 3), 0) == Rational(1));
    CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
    CHECK_THROWS_AS(pow(Rational(0), -1), std::invalid_argument);
    CHECK(ipow(2, 10) == 1024);
    CHECK(factorial(6) == 720);
    CHECK(binomial(10, 3) == 120);
    CHECK(is_prime(97));
    CHECK(!is_prime(91)); // 7 * 13
    CHECK(!is_prime(1));
}

TEST_CASE("bernoulli numbers: frozen values") {
    BernoulliTable b(31);
    CHECK(b[0] == Rational(1));
    CHECK(b[1] == Rational(-1, 2));
    CHECK(b[2] == Rational(1, 6));
    CHECK(b[4] == Rational(-1, 30));
    CHECK(b[6] == Rational(1, 42));
    CHECK(b[8] == Rational(-1, 30));
    CHECK(b[10] == Rational(5, 66));
    CHECK(b[12] == Rational(-691, 2730));
    CHECK(b[20] == Rational(-174611, 330));
    CHECK(b[30] == Rational(8615841276005L, 14322));
}

namespace {

// Independent oracle: Akiyama-Tanigawa transform (yields the B_1 = +1/2
// convention; every other index agrees with the recurrence).
std::vector<Rational> akiyama_tanigawa(std::size_t count) {
    std::vector<Rational> bern(count), row(count);
    for (std::size_t m = 0; m < count; ++m) {
        row[m] = Rational(1, static_cast<long>(m) + 1);
        for (std::size_t j = m; j >= 1; --j)
            row[j - 1] = Rational(static_cast<long>(j)) * (row[j - 1] - row[j]);
        bern[m] = row[0];
    }
    return bern;
}

} // namespace

TEST_CASE("bernoulli numbers: independent oracle and parity") {
    const std::size_t count = 51;
    BernoulliTable b(count);
    std::vector<Rational> oracle = akiyama_tanigawa(count);
    for (std::size_t j = 0; j < count; ++j) {
        if (j == 1)
            CHECK(b[j] == -oracle[j]);
        else
            CHECK(b[j] == oracle[j]);
    }
    for (std::size_t j = 3; j < count; j += 2)
        CHECK(b[j].is_zero());
    CHECK(bernoulli_numbers(3).size() == 3);
    CHECK_THROWS_AS(bernoulli_numbers(0), std::invalid_argument);
}

TEST_CASE("polynomial basics") {
    Polynomial zero("p");
    CHECK(zero.is_zero());
    CHECK(zero.degree() == -1);
    CHECK(zero.to_string() == "0");

    Polynomial f("p", {Rational(-1), Rational(0), Rational(0), Rational(1)}); // p^3 - 1
    CHECK(f.degree() == 3);
    CHECK(f.coeff(0) == Rational(-1));
    CHECK(f.coeff(3) == Rational(1));
    CHECK(f.coeff(7) == Rational(0));
    CHECK(f.evaluate(Rational(2)) == Rational(7));

    // Trailing zeros are trimmed on construction.
    Polynomial g("p", {Rational(1), Rational(0), Rational(0)});
    CHECK(g.degree() == 0);
    CHECK(g.is_constant());

    CHECK_THROWS_AS(Polynomial("q"), std::invalid_argument);
}

TEST_CASE("polynomial arithmetic and indeterminate discipline") {
    Polynomial f("p", {Rational(1), Rational(1)});  // p + 1
    Polynomial g("p", {Rational(-1), Rational(1)}); // p - 1
    CHECK(f * g == Polynomial("p", {Rational(-1), Rational(0), Rational(1)}));
    CHECK(f + g == Polynomial("p", {Rational(0), Rational(2)}));
    CHECK(f - f == Polynomial("p"));
    CHECK(Rational(3) * f == Polynomial("p", {Rational(3), Rational(3)}));

    // Constants are indeterminate-agnostic; genuine mismatches throw.
    Polynomial ck = Polynomial::constant(Rational(5), "k");
    CHECK(ck == Polynomial::constant(Rational(5), "p"));
    CHECK(f + ck == Polynomial("p", {Rational(6), Rational(1)}));
    Polynomial k("k", {Rational(0), Rational(1)});
    CHECK_THROWS_AS(f + k, std::invalid_argument);
    CHECK_THROWS_AS(f * k, std::invalid_argument);

    CHECK(k.with_indeterminate("p") == Polynomial("p", {Rational(0), Rational(1)}));

    // Horner evaluation against a hand-expanded value.
    Polynomial h("x", {Rational(1, 2), Rational(-2), Rational(0), Rational(3, 7)});
    Rational x(5, 3);
    Rational expected = Rational(1, 2) - Rational(2) * x + Rational(3, 7) * x * x * x;
    CHECK(h.evaluate(x) == expected);
}

TEST_CASE("polynomial rendering and parsing") {
    Polynomial f("p", {Rational(0), Rational(-1, 24), Rational(0), Rational(1, 24)});
    CHECK(f.to_string() == "(p^3 - p)/24");
    CHECK(Polynomial::parse("(p^3 - p)/24") == f);

    CHECK(Polynomial::parse("p^2 + 2") ==
          Polynomial("p", {Rational(2), Rational(0), Rational(1)}));
    CHECK(Polynomial::parse("-5/3") == Polynomial::constant(Rational(-5, 3)));
    CHECK(Polynomial::parse("0") == Polynomial("x"));
    CHECK(Polynomial::parse("2*k^2 - k + 1") ==
          Polynomial("k", {Rational(1), Rational(-1), Rational(2)}));
    CHECK(Polynomial::parse(" ( x^2 - 1 ) / 4 ") ==
          Polynomial("x", {Rational(-1, 4), Rational(0), Rational(1, 4)}));

    CHECK_THROWS_AS(Polynomial::parse("p^2 + q"), std::invalid_argument);
    CHECK_THROWS_AS(Polynomial::parse("(p^2"), std::invalid_argument);
    CHECK_THROWS_AS(Polynomial::parse("p/0"), std::invalid_argument);
    CHECK_THROWS_AS(Polynomial::parse("p + k"), std::invalid_argument);
    CHECK_THROWS_AS(Polynomial::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Polynomial::parse("3 + "), std::invalid_argument);

    // Round-trip on random polynomials with fractional coefficients.
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> num(-50, 50);
    std::uniform_int_distribution<long> den(1, 40);
    std::uniform_int_distribution<int> deg(0, 9);
    for (int i = 0; i < 200; ++i) {
        std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
        for (auto& x : c)
            x = Rational(num(rng), den(rng));
        Polynomial r("w", std::move(c));
        CHECK(Polynomial::parse(r.to_string()) == r);
    }
}

namespace {

bool is_one_series(const LaurentSeries<Rational>& s) {
    for (long e = s.valuation(); e <= s.truncation_order(); ++e)
        if (s.coeff(e) != (e == 0 ? Rational(1) : Rational(0)))
            return false;
    return true;
}

} // namespace

TEST_CASE("laurent series: construction and normal form") {
    LaurentSeries<Rational> s(-2, {Rational(0), Rational(3), Rational(0), Rational(1)});
    CHECK(s.valuation() == -1); // leading zero stripped
    CHECK(s.truncation_order() == 1);
    CHECK(s.coeff(-1) == Rational(3));
    CHECK(s.coeff(-5) == Rational(0)); // known zero below the valuation
    CHECK_THROWS_AS(s.coeff(2), std::out_of_range);

    LaurentSeries<Rational> z(-3, {Rational(0), Rational(0)});
    CHECK(z.is_zero());
    CHECK(z.valuation() == z.truncation_order());

    CHECK_THROWS_AS(LaurentSeries<Rational>(0, {}), std::invalid_argument);
}

TEST_CASE("laurent series: product truncation is pessimistic and exact") {
    // (x^{-1} - x/3 + O(x^4))^2 = x^{-2} - 2/3 + x^2/9 + O(x^3)
    LaurentSeries<Rational> s(-1, {Rational(1), Rational(0), Rational(-1, 3),
                                   Rational(0), Rational(0)});
    CHECK(s.truncation_order() == 3);
    LaurentSeries<Rational> sq = s * s;
    CHECK(sq.valuation() == -2);
    CHECK(sq.truncation_order() == 2); // min(-1+3, -1+3)
    CHECK(sq.coeff(-2) == Rational(1));
    CHECK(sq.coeff(-1) == Rational(0));
    CHECK(sq.coeff(0) == Rational(-2, 3));
    CHECK(sq.coeff(1) == Rational(0));
    CHECK(sq.coeff(2) == Rational(1, 9));

    // (1 - x) * sum x^i == 1 through the common truncation; the factor is
    // padded with known zeros so the product truncation stays useful.
    const long trunc = 12;
    std::vector<Rational> geo(trunc + 1, Rational(1));
    LaurentSeries<Rational> g(0, std::move(geo));
    std::vector<Rational> padded(trunc + 1, Rational(0));
    padded[0] = Rational(1);
    padded[1] = Rational(-1);
    LaurentSeries<Rational> omx(0, std::move(padded));
    CHECK(is_one_series(omx * g));
}

TEST_CASE("laurent series: addition, constants, scaling") {
    LaurentSeries<Rational> a(-1, {Rational(1), Rational(2), Rational(3)}); // trunc 1
    LaurentSeries<Rational> b(0, {Rational(5), Rational(-2)});              // trunc 1
    LaurentSeries<Rational> sum = a + b;
    CHECK(sum.valuation() == -1);
    CHECK(sum.truncation_order() == 1);
    CHECK(sum.coeff(0) == Rational(7));
    CHECK(sum.coeff(1) == Rational(1));

    LaurentSeries<Rational> c = a.plus_constant(Rational(10));
    CHECK(c.truncation_order() == a.truncation_order());
    CHECK(c.coeff(0) == Rational(12));

    // A constant added beyond the truncation window is invisible.
    LaurentSeries<Rational> deep(-4, {Rational(1), Rational(1)}); // trunc -3
    LaurentSeries<Rational> still = deep.plus_constant(Rational(1));
    CHECK(still == deep);

    LaurentSeries<Rational> half = a.scaled(Rational(1, 2));
    CHECK(half.coeff(-1) == Rational(1, 2));
    CHECK((-a).coeff(-1) == Rational(-1));

    // Cancellation re-normalizes the valuation.
    LaurentSeries<Rational> cancel = a + (-a);
    CHECK(cancel.is_zero());
}

TEST_CASE("laurent series: inversion") {
    // 1/sin(x) from sin(x) = x - x^3/6 + x^5/120 + O(x^6):
    // x^{-1} + x/6 + 7 x^3/360 + O(x^4).
    LaurentSeries<Rational> sine(1, {Rational(1), Rational(0), Rational(-1, 6),
                                     Rational(0), Rational(1, 120)});
    CHECK(sine.truncation_order() == 5);
    LaurentSeries<Rational> inv = sine.invert();
    CHECK(inv.valuation() == -1);
    CHECK(inv.truncation_order() == 3); // 5 - 2*1
    CHECK(inv.coeff(-1) == Rational(1));
    CHECK(inv.coeff(0) == Rational(0));
    CHECK(inv.coeff(1) == Rational(1, 6));
    CHECK(inv.coeff(2) == Rational(0));
    CHECK(inv.coeff(3) == Rational(7, 360));
    CHECK(is_one_series(sine * inv));

    CHECK_THROWS_AS(LaurentSeries<Rational>(0, {Rational(0)}).invert(),
                    singular_series_error);

    // Random series: s * s.invert() == 1 within the common truncation.
    std::mt19937 rng(99);
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 6);
    std::uniform_int_distribution<long> val(-3, 3);
    for (int i = 0; i < 60; ++i) {
        std::vector<Rational> c(9);
        c[0] = Rational(1 + (i % 5), den(rng)); // nonzero leading coefficient
        for (std::size_t j = 1; j < c.size(); ++j)
            c[j] = Rational(num(rng), den(rng));
        LaurentSeries<Rational> s(val(rng), std::move(c));
        CHECK(is_one_series(s * s.invert()));
    }
}

TEST_CASE("laurent series over polynomial coefficients") {
    // (1 + k x)(1 - k x) = 1 - k^2 x^2, coefficients in Q[k].
    Polynomial one = Polynomial::constant(Rational(1), "k");
    Polynomial k = Polynomial::monomial("k", 1);
    std::vector<Polynomial> a = {one, k, Polynomial("k"), Polynomial("k")};
    std::vector<Polynomial> b = {one, -k, Polynomial("k"), Polynomial("k")};
    LaurentSeries<Polynomial> sa(0, std::move(a));
    LaurentSeries<Polynomial> sb(0, std::move(b));
    LaurentSeries<Polynomial> prod = sa * sb;
    CHECK(prod.coeff(0) == one);
    CHECK(prod.coeff(1) == Polynomial("k"));
    CHECK(prod.coeff(2) == -(k * k));

    // Inversion demands a constant (unit) leading coefficient.
    std::vector<Polynomial> bad = {k, one};
    CHECK_THROWS_AS(LaurentSeries<Polynomial>(0, std::move(bad)).invert(),
                    singular_series_error);

    // promote() lifts rational coefficients into Q[k].
    LaurentSeries<Rational> r(-1, {Rational(2), Rational(0), Rational(5)});
    LaurentSeries<Polynomial> lifted = promote(r, "k");
    CHECK(lifted.valuation() == -1);
    CHECK(lifted.truncation_order() == 1);
    CHECK(lifted.coeff(-1) == Polynomial::constant(Rational(2), "k"));
    CHECK(lifted.coeff(1) == Polynomial::constant(Rational(5), "k"));
}
