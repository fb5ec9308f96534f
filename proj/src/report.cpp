#include "dormant/report.hpp"

#include "dormant/trig_residue.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace dormant {

bool DegreeReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass)
            return false;
    return true;
}

DegreeReport make_degree_report(const GenusPrime& gp, RangePolicy policy) {
    DegreeReport r{gp,
                   degree(gp, policy),
                   quot_degree(gp, policy),
                   bundle_count(gp, policy),
                   verlinde_dimension(gp.g, gp.p - 2),
                   degree_via_zeta(gp, policy),
                   degree_polynomial(gp.g),
                   !gp.in_range(),
                   {}};

    Rational pg(ipow(gp.p, gp.g));
    r.checks.push_back({"path_agreement", r.degree == r.zeta_form});
    r.checks.push_back({"quot_relation", r.quot_degree == pg * r.degree});
    r.checks.push_back({"bundle_relation",
                        r.bundle_count == Rational(ipow(2, 2 * gp.g)) * r.degree});
    r.checks.push_back({"verlinde_relation",
                        r.degree == r.verlinde_dim / Rational(ipow(2, gp.g))});
    r.checks.push_back({"integrality", r.degree.is_integer() && r.degree.sign() > 0});
    r.checks.push_back({"polynomial_evaluation",
                        r.polynomial.evaluate(Rational(Integer(gp.p))) == r.degree});

    // Third path: float degree from the direct sine sum, relative 1e-8.
    double direct = std::ldexp(std::pow(static_cast<double>(gp.p), gp.g - 1.0),
                               -(2 * static_cast<int>(gp.g) - 1)) *
                    v_numeric(gp.g - 1, gp.p);
    double exact = r.degree.to_double();
    r.checks.push_back({"float_agreement",
                        std::abs(direct - exact) <= 1e-8 * std::max(1.0, std::abs(exact))});
    return r;
}

std::string to_json(const DegreeReport& r) {
    nlohmann::json j;
    j["g"] = r.input.g;
    j["p"] = r.input.p;
    j["degree"] = r.degree.to_string();
    j["quot_degree"] = r.quot_degree.to_string();
    j["bundle_count"] = r.bundle_count.to_string();
    j["verlinde_dim"] = r.verlinde_dim.to_string();
    j["zeta_form"] = r.zeta_form.to_string();
    j["polynomial"] = r.polynomial.to_string();
    if (r.out_of_range)
        j["note"] = "formula value, unproven range";
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"name", c.name}, {"pass", c.pass}});
    j["checks"] = checks;
    return j.dump(2);
}

std::string to_text(const DegreeReport& r) {
    std::ostringstream os;
    os << "g = " << r.input.g << ", p = " << r.input.p << "\n";
    if (r.out_of_range)
        os << "note: formula value, unproven range\n";
    os << "degree        = " << r.degree.to_string() << "\n"
       << "quot_degree   = " << r.quot_degree.to_string() << "\n"
       << "bundle_count  = " << r.bundle_count.to_string() << "\n"
       << "verlinde_dim  = " << r.verlinde_dim.to_string() << "\n"
       << "zeta_form     = " << r.zeta_form.to_string() << "\n"
       << "polynomial    = " << r.polynomial.to_string() << "\n"
       << "checks:\n";
    for (const auto& c : r.checks)
        os << "  " << c.name << ": " << (c.pass ? "pass" : "FAIL") << "\n";
    return os.str();
}

} // namespace dormant
