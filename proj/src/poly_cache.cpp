#include "dormant/poly_cache.hpp"

#include "dormant/formulas.hpp"
#include "dormant/rational.hpp"

#include <json.hpp>

#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace dormant {

std::size_t cache_polynomials(const std::filesystem::path& path, unsigned max_genus) {
    if (max_genus < 2)
        throw std::invalid_argument("cache_polynomials: max_genus must be >= 2");

    nlohmann::json root;
    for (unsigned g = 2; g <= max_genus; ++g) {
        Polynomial d = degree_polynomial(g);
        Integer den = 1;
        for (const auto& c : d.coefficients())
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.den().get_mpz_t());

        nlohmann::json entry;
        entry["g"] = g;
        entry["indeterminate"] = d.indeterminate();
        entry["den"] = den.get_str();
        nlohmann::json coeffs;
        for (std::size_t e = 0; e < d.coefficients().size(); ++e) {
            const Rational& c = d.coefficients()[e];
            if (c.is_zero())
                continue;
            coeffs[std::to_string(e)] = (Rational(den) * c).num().get_str();
        }
        entry["coeffs"] = coeffs;
        root[std::to_string(g)] = entry;
    }

    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cache_polynomials: cannot open " + path.string());
    out << root.dump(2) << "\n";
    if (!out)
        throw std::runtime_error("cache_polynomials: write failed for " + path.string());
    return max_genus - 1;
}

std::map<unsigned, Polynomial> load_polynomial_cache(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("load_polynomial_cache: cannot open " + path.string());
    nlohmann::json root = nlohmann::json::parse(in);

    std::map<unsigned, Polynomial> result;
    for (const auto& [key, entry] : root.items()) {
        unsigned g = entry.at("g").get<unsigned>();
        std::string var = entry.at("indeterminate").get<std::string>();
        Rational den = Rational::parse(entry.at("den").get<std::string>());
        if (den.is_zero())
            throw std::runtime_error("load_polynomial_cache: zero denominator");
        std::vector<Rational> coeffs;
        for (const auto& [exp_str, num_str] : entry.at("coeffs").items()) {
            std::size_t e = std::stoul(exp_str);
            if (coeffs.size() <= e)
                coeffs.resize(e + 1);
            coeffs[e] = Rational::parse(num_str.get<std::string>()) / den;
        }
        result.emplace(g, Polynomial(var, std::move(coeffs)));
        (void)key;
    }
    return result;
}

} // namespace dormant
