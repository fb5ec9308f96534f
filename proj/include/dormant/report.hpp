#ifndef DORMANT_REPORT_HPP
#define DORMANT_REPORT_HPP

#include "dormant/formulas.hpp"
#include "dormant/polynomial.hpp"
#include "dormant/rational.hpp"

#include <string>
#include <vector>

namespace dormant {

/*
 * Bundle of every quantity the library can attach to one (g, p) pair,
 * together with the cross-checks tying them to each other.  The checks are
 * recomputed from scratch inside make_degree_report; a failing check means
 * an internal inconsistency, not bad input.
 */

struct CheckResult {
    std::string name;
    bool pass;
};

struct DegreeReport {
    GenusPrime input;
    Rational degree;
    Rational quot_degree;
    Rational bundle_count;
    Rational verlinde_dim; // level p-2
    Rational zeta_form;    // the same degree through the cyclotomic trace
    Polynomial polynomial; // degree(g, .) in "p"
    bool out_of_range = false; // computed under allow_out_of_range
    std::vector<CheckResult> checks;

    bool all_pass() const;
};

DegreeReport make_degree_report(const GenusPrime& gp,
                                RangePolicy policy = RangePolicy::enforce);

// Schema-stable JSON: every exact value rendered as a string ("5", "2/3"),
// never as a JSON number.
std::string to_json(const DegreeReport& report);
std::string to_text(const DegreeReport& report);

} // namespace dormant

#endif
