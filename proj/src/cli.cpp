#include "dormant/cli.hpp"

#include "dormant/errors.hpp"
#include "dormant/formulas.hpp"
#include "dormant/poly_cache.hpp"
#include "dormant/report.hpp"
#include "dormant/validate.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <filesystem>

namespace dormant {

namespace {

// One labeled exact value, honoring --format and the out-of-range note.
void emit_value(std::ostream& out, const std::string& format, const GenusPrime& gp,
                const std::string& key, const Rational& value) {
    if (format == "json") {
        nlohmann::json j;
        j["g"] = gp.g;
        j["p"] = gp.p;
        j[key] = value.to_string();
        if (!gp.in_range())
            j["note"] = "formula value, unproven range";
        out << j.dump(2) << "\n";
        return;
    }
    if (!gp.in_range())
        out << "note: formula value, unproven range\n";
    out << value.to_string() << "\n";
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"dormant indigenous bundle counts on genus-g curves in characteristic p"};
    app.require_subcommand(1);

    unsigned genus = 2;
    unsigned long prime = 3;
    unsigned long level = 0;
    std::string format = "text";
    bool allow_oor = false;
    unsigned max_genus = 10;
    unsigned long max_prime = 31;
    std::string cache_path;
    unsigned long vi_n = 0;
    long vi_d = 0;
    unsigned vi_r = 1;
    unsigned precision = 128;

    auto format_opt = [&](CLI::App* sub) {
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
    };
    auto gp_opts = [&](CLI::App* sub) {
        sub->add_option("--genus,-g", genus, "curve genus (>= 2)")->required();
        sub->add_option("--prime,-p", prime, "odd prime characteristic")->required();
        sub->add_flag("--allow-out-of-range", allow_oor,
                      "evaluate outside the proven range p > 2(g-1); "
                      "the output is labeled as a formula value");
        format_opt(sub);
    };

    CLI::App* c_degree = app.add_subcommand(
        "degree", "generic dormant indigenous bundle count, with cross-checks");
    gp_opts(c_degree);

    CLI::App* c_quot = app.add_subcommand("quot-degree", "degree of the Quot scheme");
    gp_opts(c_quot);

    CLI::App* c_bundle =
        app.add_subcommand("bundle-count", "dormant torally indigenous bundle count");
    gp_opts(c_bundle);

    CLI::App* c_verlinde =
        app.add_subcommand("verlinde", "rank-2 level-k conformal block dimension");
    c_verlinde->add_option("--genus,-g", genus, "curve genus (>= 2)")->required();
    c_verlinde->add_option("--level,-k", level, "level k (>= 0)")->required();
    format_opt(c_verlinde);

    CLI::App* c_poly =
        app.add_subcommand("polynomial", "degree(g, .) as an exact polynomial in p");
    CLI::Option* poly_genus = c_poly->add_option("--genus,-g", genus, "curve genus (>= 2)");
    CLI::Option* poly_cache = c_poly->add_option(
        "--cache-path", cache_path, "write polynomials for g = 2..max-genus to this file");
    c_poly->add_option("--max-genus", max_genus, "largest genus to cache (default 10)");
    format_opt(c_poly);

    CLI::App* c_vi = app.add_subcommand(
        "vi", "Quot degree from the Vafa-Intriligator / Holla closed form");
    c_vi->add_option("--n", vi_n, "rank of the trivial bundle")->required();
    c_vi->add_option("--d", vi_d, "negated subsheaf degree parameter")->required();
    c_vi->add_option("--r", vi_r, "subsheaf rank (0 < r < n)")->required();
    c_vi->add_option("--genus,-g", genus, "curve genus (>= 2)")->required();
    c_vi->add_option("--precision", precision,
                     "working precision in bits (128/256/512/1024)");
    format_opt(c_vi);

    CLI::App* c_validate =
        app.add_subcommand("validate", "re-derive every identity over a (g, p) grid");
    c_validate->add_option("--max-genus", max_genus, "largest genus (default 10)");
    c_validate->add_option("--max-prime", max_prime, "largest prime (default 31)");
    format_opt(c_validate);

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("dormantdeg");
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 1;
    }

    try {
        RangePolicy policy =
            allow_oor ? RangePolicy::allow_out_of_range : RangePolicy::enforce;

        if (app.got_subcommand(c_degree)) {
            DegreeReport rep = make_degree_report(GenusPrime(genus, prime), policy);
            if (format == "json")
                out << to_json(rep) << "\n";
            else
                out << to_text(rep);
            return 0;
        }
        if (app.got_subcommand(c_quot)) {
            GenusPrime gp(genus, prime);
            emit_value(out, format, gp, "quot_degree", quot_degree(gp, policy));
            return 0;
        }
        if (app.got_subcommand(c_bundle)) {
            GenusPrime gp(genus, prime);
            emit_value(out, format, gp, "bundle_count", bundle_count(gp, policy));
            return 0;
        }
        if (app.got_subcommand(c_verlinde)) {
            Rational v = verlinde_dimension(genus, level);
            if (format == "json") {
                nlohmann::json j;
                j["g"] = genus;
                j["level"] = level;
                j["verlinde_dim"] = v.to_string();
                out << j.dump(2) << "\n";
            } else {
                out << v.to_string() << "\n";
            }
            return 0;
        }
        if (app.got_subcommand(c_poly)) {
            if (poly_cache->count() > 0) {
                std::size_t written =
                    cache_polynomials(std::filesystem::path(cache_path), max_genus);
                if (format == "json") {
                    nlohmann::json j;
                    j["written"] = written;
                    j["path"] = cache_path;
                    out << j.dump(2) << "\n";
                } else {
                    out << "wrote " << written << " polynomial(s) to " << cache_path << "\n";
                }
                return 0;
            }
            if (poly_genus->count() == 0) {
                err << "polynomial: need --genus or --cache-path\n";
                return 1;
            }
            Polynomial d = degree_polynomial(genus);
            if (format == "json") {
                nlohmann::json j;
                j["g"] = genus;
                j["polynomial"] = d.to_string();
                out << j.dump(2) << "\n";
            } else {
                out << d.to_string() << "\n";
            }
            return 0;
        }
        if (app.got_subcommand(c_vi)) {
            double value = holla_vi_degree(vi_n, vi_d, vi_r, genus, precision);
            long long rounded = std::llround(value);
            if (format == "json") {
                nlohmann::json j;
                j["n"] = vi_n;
                j["d"] = vi_d;
                j["r"] = vi_r;
                j["g"] = genus;
                j["value"] = std::to_string(rounded);
                out << j.dump(2) << "\n";
            } else {
                out << rounded << "\n";
            }
            return 0;
        }
        if (app.got_subcommand(c_validate)) {
            ValidationOutcome o = validate_suite(max_genus, max_prime);
            if (format == "json") {
                nlohmann::json j;
                j["max_genus"] = o.max_genus;
                j["max_prime"] = o.max_prime;
                j["cases_run"] = o.cases_run;
                j["wall_seconds"] = o.wall_seconds;
                nlohmann::json fails = nlohmann::json::array();
                for (const auto& f : o.failures)
                    fails.push_back({{"case", f.case_id},
                                     {"expected", f.expected},
                                     {"got", f.got}});
                j["failures"] = fails;
                out << j.dump(2) << "\n";
            } else {
                out << "suite: identity-web\n"
                    << "grid: 2 <= g <= " << o.max_genus << ", odd primes p <= "
                    << o.max_prime << " with p > 2(g-1)\n"
                    << "cases run: " << o.cases_run << "\n"
                    << "failures: " << o.failures.size() << "\n";
                for (const auto& f : o.failures)
                    out << "  " << f.case_id << ": expected " << f.expected << ", got "
                        << f.got << "\n";
                out << "wall time: " << o.wall_seconds << " s\n";
            }
            return o.ok() ? 0 : 1;
        }
    } catch (const hypothesis_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const numeric_instability_error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "error: no command\n"; // unreachable: require_subcommand(1)
    return 1;
}

} // namespace dormant
