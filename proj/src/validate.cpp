#include "dormant/validate.hpp"

#include "dormant/bernoulli.hpp"
#include "dormant/formulas.hpp"
#include "dormant/rational.hpp"
#include "dormant/report.hpp"
#include "dormant/trig_residue.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <initializer_list>
#include <stdexcept>
#include <utility>

namespace dormant {

namespace {

struct GoldenTerm {
    unsigned exponent;
    long num;
    long den;
};

// scale_den and p_shift carry the printed prefactor 1/scale_den * p^p_shift.
Polynomial make_golden(unsigned p_shift, long scale_den,
                       std::initializer_list<GoldenTerm> terms) {
    Polynomial acc("p");
    for (const auto& t : terms)
        acc += Polynomial::monomial("p", t.exponent + p_shift, Rational(t.num, t.den));
    return Rational(1, scale_den) * acc;
}

} // namespace

const std::vector<GoldenEntry>& golden_degree_table() {
    static const std::vector<GoldenEntry> table = {
        {2, make_golden(0, 24, {{3, 1, 1}, {1, -1, 1}})},
        {3, make_golden(0, 1440, {{6, 1, 1}, {4, 10, 1}, {2, -11, 1}})},
        {4, make_golden(0, 120960, {{9, 2, 1}, {7, 21, 1}, {5, 168, 1}, {3, -191, 1}})},
        {5, make_golden(0, 7257600,
                        {{12, 3, 1}, {10, 40, 1}, {8, 294, 1}, {6, 2160, 1}, {4, -2497, 1}})},
        {6, make_golden(0, 2048,
                        {{15, 2, 93555},
                         {13, 1, 2835},
                         {11, 26, 8505},
                         {9, 164, 8505},
                         {7, 128, 945},
                         {5, -14797, 93555}})},
        {7, make_golden(0, 8192,
                        {{18, 1382, 638512875},
                         {16, 4, 93555},
                         {14, 31, 70875},
                         {12, 556, 178605},
                         {10, 3832, 212625},
                         {8, 256, 2079},
                         {6, -92427157, 638512875}})},
        {8, make_golden(7, 32768,
                        {{14, 4, 18243225},
                         {12, 1382, 273648375},
                         {10, 4, 66825},
                         {8, 311, 637875},
                         {6, 1184, 382725},
                         {4, 1888, 111375},
                         {2, 1024, 9009},
                         {0, -36740617, 273648375}})},
        {9, make_golden(8, 131072,
                        {{16, 3617, 162820783125},
                         {14, 32, 54729675},
                         {12, 226648, 28733079375},
                         {10, 2144, 29469825},
                         {8, 4946, 9568125},
                         {6, 268864, 88409475},
                         {4, 17067584, 1064188125},
                         {2, 2048, 19305},
                         {0, -61430943169, 488462349375}})},
        {10, make_golden(9, 524288,
                         {{18, 87734, 38979295480125},
                          {16, 3617, 54273594375},
                          {14, 92, 91216125},
                          {12, 2092348, 201131555625},
                          {10, 4042, 49116375},
                          {8, 18716, 35083125},
                          {6, 119654944, 40226311125},
                          {4, 16229632, 1064188125},
                          {2, 32768, 328185},
                          {0, -23133945892303, 194896477400625}})},
    };
    return table;
}

ValidationOutcome validate_suite(unsigned max_genus, unsigned long max_prime) {
    if (max_genus < 2)
        throw std::invalid_argument("validate_suite: max_genus must be >= 2");

    using clock = std::chrono::steady_clock;
    auto suite_start = clock::now();
    auto seconds_since = [](clock::time_point t0) {
        return std::chrono::duration<double>(clock::now() - t0).count();
    };

    ValidationOutcome out;
    out.max_genus = max_genus;
    out.max_prime = max_prime;

    auto record = [&out](const std::string& id, bool pass,
                         std::string expected, std::string got) {
        ++out.cases_run;
        if (!pass)
            out.failures.push_back({id, std::move(expected), std::move(got)});
    };

    for (unsigned g = 2; g <= max_genus; ++g) {
        std::vector<unsigned long> primes;
        for (unsigned long p = 3; p <= max_prime; p += 2)
            if (is_prime(p) && p > 2 * (static_cast<unsigned long>(g) - 1))
                primes.push_back(p);
        if (primes.empty())
            continue;
        std::string gid = "g" + std::to_string(g);

        // Genus-level structure.
        Polynomial dpoly = degree_polynomial(g);
        record(gid + ":polynomial_degree", dpoly.degree() == 3 * static_cast<long>(g) - 3,
               std::to_string(3 * static_cast<long>(g) - 3), std::to_string(dpoly.degree()));
        for (const auto& entry : golden_degree_table())
            if (entry.g == g)
                record(gid + ":golden_table", dpoly == entry.poly,
                       entry.poly.to_string(), dpoly.to_string());

        unsigned n = g - 1;
        VPolynomial v = v_polynomial(n);
        bool even_only = true;
        for (long e = 1; e <= v.poly.degree(); e += 2)
            if (!v.poly.coeff(static_cast<std::size_t>(e)).is_zero())
                even_only = false;
        record(gid + ":v_even_powers", even_only, "only even powers of k", "odd term present");
        record(gid + ":v_vanishes_at_1", v.poly.evaluate(Rational(1)).is_zero(), "0",
               v.poly.evaluate(Rational(1)).to_string());
        // Leading coefficient (-1)^{n+1} 4^n B_{2n} / (2n)! = 2 zeta(2n) / pi^{2n}.
        BernoulliTable bern(2 * n + 1);
        Rational lead = Rational(ipow(4, n), factorial(2 * n)) * bern[2 * n];
        if (n % 2 == 0)
            lead = -lead;
        record(gid + ":v_leading_coeff",
               v.poly.coeff(static_cast<std::size_t>(2 * n)) == lead, lead.to_string(),
               v.poly.coeff(static_cast<std::size_t>(2 * n)).to_string());

        for (unsigned long p : primes) {
            auto cell_start = clock::now();
            std::string id = gid + "p" + std::to_string(p);
            DegreeReport rep = make_degree_report(GenusPrime(g, p));
            for (const auto& c : rep.checks)
                record(id + ":" + c.name, c.pass, "pass", "fail");

            // Vafa-Intriligator closed form against the exact Quot degree,
            // where the tuple sum stays small.
            if (g <= 3 && p <= 13) {
                double vi = holla_vi_degree(p, static_cast<long>(p - 2) * (g - 1), 2, g);
                double exact = rep.quot_degree.to_double();
                bool close = std::abs(vi - exact) <= 1e-6 * std::max(1.0, std::abs(exact));
                record(id + ":holla_agreement", close, rep.quot_degree.to_string(),
                       std::to_string(vi));
            }

            double cell = seconds_since(cell_start);
            record(id + ":cell_budget", cell <= 1.0, "<= 1.0 s",
                   std::to_string(cell) + " s");
        }
    }

    out.wall_seconds = seconds_since(suite_start);
    return out;
}

} // namespace dormant
