// cosys: command-line front end for coherent-system numerics on surfaces.
//
// Exit codes: 0 success, 2 config error, 3 precondition violation.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cosys/cosys.hpp"

namespace {

using namespace cosys;

constexpr int kExitConfig = 2;
constexpr int kExitPrecondition = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string rat(const json& j) { return to_string(rational_from_json(j)); }
std::string poly(const json& j) { return to_string(poly_from_json(j)); }

std::string candidate_text(const json& c) {
    return "(n'=" + c["n_sub"].dump() + ", c1'.H=" + c["s_sub"].dump() + ", chi'=" + rat(c["chi_sub"]) +
           ", k'=" + c["k_sub"].dump() + ")";
}

void print_header(std::ostream& os, const json& r) {
    const auto& t = r["system"];
    std::string name = r["surface"].value("name", std::string("surface"));
    os << "surface " << name << ", type (n=" << t["n"] << "; c1=" << t["c1"].dump() << ", c2=" << t["c2"]
       << ", k=" << t["k"] << ")\n";
}

void print_text(std::ostream& os, const json& r) {
    print_header(os, r);
    const std::string cmd = r["command"];
    if (cmd == "info") {
        os << "chi(E) = " << rat(r["euler_char"]) << "\n";
        os << "mu_H = " << rat(r["slope"]) << "\n";
        os << "P_H(m)/n = " << poly(r["hilbert_poly_normalized"]) << "\n";
        os << "generated condition: " << poly(r["generated_condition"]["witness"]) << " >= 0 is "
           << (r["generated_condition"]["holds"].get<bool>() ? "satisfied" : "violated") << "\n";
        const auto& inv = r["surface_invariants"];
        os << "H^2 = " << inv["H2"] << ", K.H = " << inv["KH"] << ", K^2 = " << inv["K2"] << ", chi(O) = "
           << inv["chi_O"] << "\n";
        os << "ampleness of H: " << (r["ample_asserted"].get<bool>() ? "asserted" : "not asserted (only H^2 > 0 checked)")
           << "\n";
    } else if (cmd == "bound") {
        os << "alpha_max = " << poly(r["alpha_max"]) << "\n";
        if (r.contains("alpha_torsion")) {
            os << "alpha_T = " << poly(r["alpha_torsion"]) << "\n";
            for (const auto& row : r["alpha_injectivity"])
                os << "alpha_I(k0=" << row["k0"] << ") = " << poly(row["alpha"]) << "\n";
            os << "alpha_I worst case = " << poly(r["alpha_injectivity_worst_case"]) << "\n";
        }
    } else if (cmd == "walls") {
        const auto& w = r["window"];
        os << "window: c1'.H in [" << w["s_min"] << ", " << w["s_max"] << "], chi' in [" << w["chi_min"] << ", "
           << w["chi_max"] << "], n' <= " << w["n_max"] << ", k' <= " << w["k_max"] << "\n";
        os << "alpha_max = " << poly(r["alpha_max"]) << "\n";
        os << r["walls"].size() << " candidate wall(s):\n";
        for (const auto& wall : r["walls"]) {
            os << "  alpha = " << poly(wall["alpha"]) << "\n";
            for (const auto& c : wall["witnesses"]) os << "    " << candidate_text(c) << "\n";
        }
        os << r["alpha_independent_destabilizers"].size() << " alpha-independent destabilizer(s)\n";
        for (const auto& c : r["alpha_independent_destabilizers"]) os << "  " << candidate_text(c) << "\n";
    } else if (cmd == "dim") {
        os << "dim M_H(n-k; c1, c2) = " << r["dim_M"] << "\n";
        os << "p = " << rat(r["p"]) << ", fiber dim k(p-k) = " << rat(r["fiber_dim"]) << "\n";
        os << "total_dim = " << rat(r["total_dim"]) << " (" << r["reading"].get<std::string>() << ")\n";
        os << "identity k*p - k^2 + dim_M: " << (r["identity_holds"].get<bool>() ? "OK" : "FAILED") << "\n";
        const auto& h = r["hypotheses"];
        os << "hypotheses:\n";
        os << "  ((n-k)K + c1).H = " << h["kc1h_value"] << " <= 0: " << h["kc1h_condition"] << "\n";
        os << "  gcd(n-k, c1.H) = 1: " << h["coprime_advisory"] << "\n";
        os << "  c2 >> 0 asserted: " << h["c2_large_asserted"] << "\n";
    } else if (cmd == "clifford") {
        const auto& c = r["conditions"];
        os << "bound (i): " << (r["bound_i"].is_null() ? "n/a" : rat(r["bound_i"]));
        if (!c["a"].is_null()) os << "  [a = " << c["a"] << "]";
        os << "\n";
        os << "  H^2 max{(n^2-1)/4, 1} = " << rat(c["h2_lhs"]) << " < " << rat(c["h2_rhs"]) << ": "
           << c["h2_condition"] << "\n";
        os << "  0 <= c1.H/n = " << rat(c["degree_value"]) << " < " << rat(c["degree_upper"]) << ": "
           << c["degree_condition"] << "\n";
        os << "  K.H <= 0: " << c["kh_nonpositive"] << "\n";
        os << "bound (ii): " << (r["bound_ii"].is_null() ? "n/a" : rat(r["bound_ii"])) << "\n";
        for (const auto& note : c["notes"]) os << "note: " << note.get<std::string>() << "\n";
    } else if (cmd == "smooth") {
        os << "generically smooth: " << r["generically_smooth"] << "\n";
        os << "Steiner resolution: 0 -> O(-1)^" << r["steiner"]["source_rank"] << " -> O^"
           << r["steiner"]["target_rank"] << " -> F -> 0\n";
    } else if (cmd == "check") {
        os << "alpha = " << poly(r["alpha"]) << " (alpha_max = " << poly(r["alpha_max"]) << ")\n";
        os << "p^alpha = " << poly(r["reduced_hilbert"]) << "\n";
        for (const auto& e : r["results"])
            os << "  " << candidate_text(e["candidate"]) << ": " << e["verdict"].get<std::string>() << "\n";
        os << "stable: " << r["stable"] << ", semistable: " << r["semistable"] << "\n";
    }
}

SubsystemCandidate parse_candidate_flag(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) parts.push_back(item);
    if (parts.size() != 4) throw ConfigError("--cand expects n,s,chi,k");
    try {
        return {std::stoll(parts[0]), std::stoll(parts[1]), parse_rational(parts[2]), std::stoll(parts[3])};
    } catch (const std::logic_error&) {
        throw ConfigError("--cand expects integers n,s,k and a rational chi");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact numerics for alpha-stable coherent systems on surfaces"};
    app.require_subcommand(1);
    std::string config_path, format_flag;
    app.add_option("--config", config_path, "JSON job config")->required();
    app.add_option("--format", format_flag, "output format")->check(CLI::IsMember({"text", "json"}));

    auto* info = app.add_subcommand("info", "Euler characteristic, slope, Hilbert polynomial");
    auto* bound = app.add_subcommand("bound", "alpha upper bound and thresholds");
    auto* walls = app.add_subcommand("walls", "enumerate candidate critical values of alpha");
    unsigned workers = 1;
    walls->add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);
    auto* dim = app.add_subcommand("dim", "dimension of the large-alpha moduli space");
    auto* clifford = app.add_subcommand("clifford", "Clifford-type bounds on h^0(E)");
    std::optional<std::int64_t> clifford_a;
    clifford->add_option("--a", clifford_a, "parameter a for bound (i); searched when absent");
    auto* smooth = app.add_subcommand("smooth", "generic smoothness predicate on P^2");
    auto* check = app.add_subcommand("check", "alpha-stability against subsystem candidates");
    std::string alpha_slope = "", alpha_const = "";
    std::vector<std::string> cand_flags;
    check->add_option("--alpha-slope", alpha_slope, "coefficient of m in alpha");
    check->add_option("--alpha-const", alpha_const, "constant term of alpha");
    check->add_option("--cand", cand_flags, "candidate n,s,chi,k (repeatable)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitConfig;
    }

    try {
        JobConfig cfg = parse_config(read_file(config_path));
        if (!format_flag.empty()) cfg.options.format = format_flag == "json" ? Format::Json : Format::Text;
        const auto& s = cfg.surface;
        const auto& t = cfg.system;

        json report;
        if (*info) {
            report = info_report(cfg);
        } else if (*bound) {
            report = bound_report(s, t);
        } else if (*walls) {
            report = walls_report(s, t, cfg.effective_window(), workers);
        } else if (*dim) {
            report = dim_report(s, t, cfg.options.assert_c2_large);
        } else if (*clifford) {
            report = clifford_report(s, t, clifford_a);
        } else if (*smooth) {
            report = smooth_report(s, t);
        } else if (*check) {
            const json section = cfg.extra.value("check", json::object());
            RationalPoly alpha;
            if (!alpha_slope.empty() || !alpha_const.empty()) {
                alpha = RationalPoly::linear(alpha_slope.empty() ? Rational(0) : parse_rational(alpha_slope),
                                             alpha_const.empty() ? Rational(0) : parse_rational(alpha_const));
            } else if (section.contains("alpha")) {
                alpha = poly_from_json(section["alpha"]);
            } else {
                throw ConfigError("check needs alpha (--alpha-slope/--alpha-const or check.alpha)");
            }
            std::vector<SubsystemCandidate> cands;
            for (const auto& f : cand_flags) cands.push_back(parse_candidate_flag(f));
            if (cands.empty() && section.contains("candidates"))
                for (const auto& c : section["candidates"]) cands.push_back(candidate_from_json(c));
            report = check_report(s, t, AlphaPoly::make(std::move(alpha)), cands, cfg.effective_window());
        }

        for (const auto& w : report.value("warnings", json::array())) std::cerr << "warning: " << w.get<std::string>() << "\n";
        if (cfg.options.format == Format::Json)
            std::cout << report.dump(2) << "\n";
        else
            print_text(std::cout, report);
        return 0;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const json::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    }
}
