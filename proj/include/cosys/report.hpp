#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cosys/io.hpp"
#include "cosys/moduli.hpp"

namespace cosys {

// Machine-readable reports. Every report embeds its inputs so it can be
// recomputed from its own serialization.

inline json report_header(const char* command, const SurfaceData& s, const SystemType& t) {
    return {{"command", command}, {"surface", surface_to_json(s)}, {"system", system_to_json(t)}};
}

inline std::vector<std::string> stability_warnings(const SurfaceData& s, const SystemType& t) {
    auto out = input_warnings(s, t.sheaf());
    if (s.degree(t.c1) <= 0)
        out.push_back("c1.H <= 0: stability results assume c1.H > 0 (no alpha-semistable system of "
                      "positive-degree alpha exists otherwise)");
    return out;
}

inline json info_report(const JobConfig& cfg) {
    const auto& s = cfg.surface;
    const auto& t = cfg.system;
    json r = report_header("info", s, t);
    auto gen = generated_necessary_condition(s, t);
    r["euler_char"] = rational_to_json(euler_char(s, t.sheaf()));
    r["slope"] = rational_to_json(slope(s, t.sheaf()));
    r["hilbert_poly_normalized"] = poly_to_json(hilbert_poly_normalized(s, t.sheaf()));
    r["generated_condition"] = {{"holds", gen.holds}, {"witness", poly_to_json(gen.witness)}};
    r["surface_invariants"] = {{"H2", s.H2()}, {"KH", s.KH()}, {"K2", s.K2()}, {"chi_O", s.chi_O()}};
    r["ample_asserted"] = cfg.options.assert_ample;
    r["warnings"] = stability_warnings(s, t);
    return r;
}

inline json bound_report(const SurfaceData& s, const SystemType& t) {
    json r = report_header("bound", s, t);
    r["alpha_max"] = poly_to_json(alpha_upper_bound(s, t));
    if (t.k >= 1) {
        r["alpha_torsion"] = poly_to_json(alpha_torsion_threshold(s, t));
        json table = json::array();
        for (std::int64_t k0 = 1; k0 <= t.k - 1; ++k0)
            table.push_back({{"k0", k0}, {"alpha", poly_to_json(alpha_injectivity_threshold(s, t, ExactKernelRank{k0}))}});
        r["alpha_injectivity"] = table;
        r["alpha_injectivity_worst_case"] = poly_to_json(alpha_injectivity_threshold(s, t, WorstCaseKernelRank{}));
    }
    r["warnings"] = stability_warnings(s, t);
    return r;
}

inline json wall_to_json(const Wall& w) {
    json wit = json::array();
    for (const auto& c : w.witnesses) wit.push_back(candidate_to_json(c));
    return {{"alpha", poly_to_json(w.alpha.poly())}, {"witnesses", wit}};
}

inline json walls_report(const SurfaceData& s, const SystemType& t, const WallSearchWindow& window,
                         unsigned workers = 1) {
    json r = report_header("walls", s, t);
    r["window"] = window_to_json(window);
    r["alpha_max"] = poly_to_json(alpha_upper_bound(s, t));
    json walls = json::array();
    for (const auto& w : enumerate_walls(s, t, window, workers)) walls.push_back(wall_to_json(w));
    r["walls"] = walls;
    json indep = json::array();
    for (const auto& c : alpha_independent_destabilizers(s, t, window, workers)) indep.push_back(candidate_to_json(c));
    r["alpha_independent_destabilizers"] = indep;
    r["warnings"] = stability_warnings(s, t);
    return r;
}

inline json dim_report(const SurfaceData& s, const SystemType& t, bool assert_c2_large) {
    json r = report_header("dim", s, t);
    auto rep = dim_GLs(s, t, assert_c2_large);
    auto lb = dimension_lower_bound(s, t);
    r["dim_M"] = rep.dim_M;
    r["p"] = rational_to_json(rep.p);
    r["fiber_dim"] = rational_to_json(rep.fiber_dim);
    r["total_dim"] = rational_to_json(rep.total_dim);
    r["identity_holds"] = rep.identity_holds;
    r["lower_bound_only"] = lb.lower_bound_only;
    r["reading"] = lb.lower_bound_only ? "lower_bound" : "exact";
    r["hypotheses"] = {{"kc1h_value", rep.hypotheses.kc1h_value},
                       {"kc1h_condition", rep.hypotheses.kc1h_condition},
                       {"coprime_advisory", rep.hypotheses.coprime_advisory},
                       {"c2_large_asserted", rep.hypotheses.c2_large_asserted}};
    r["warnings"] = rep.warnings;
    return r;
}

/// Rebuilds a dim report from a previously emitted one.
inline json recompute_dim_report(const json& emitted) {
    return dim_report(surface_from_json(emitted.at("surface")), system_from_json(emitted.at("system")),
                      emitted.at("hypotheses").at("c2_large_asserted").get<bool>());
}

inline json optional_rational(const std::optional<Rational>& q) { return q ? rational_to_json(*q) : json(nullptr); }

inline json clifford_report(const SurfaceData& s, const SystemType& t, std::optional<std::int64_t> a) {
    json r = report_header("clifford", s, t);
    auto rep = clifford_bounds(s, t, a);
    const auto& c = rep.conditions;
    r["bound_i"] = optional_rational(rep.bound_i);
    r["bound_ii"] = optional_rational(rep.bound_ii);
    r["conditions"] = {{"a", c.a ? json(*c.a) : json(nullptr)},
                       {"a_searched", c.a_searched},
                       {"kh_nonpositive", c.kh_nonpositive},
                       {"h2_condition", c.h2_condition},
                       {"h2_lhs", rational_to_json(c.h2_lhs)},
                       {"h2_rhs", rational_to_json(c.h2_rhs)},
                       {"degree_condition", c.degree_condition},
                       {"degree_value", rational_to_json(c.degree_value)},
                       {"degree_upper", rational_to_json(c.degree_upper)},
                       {"is_projective_plane", c.is_projective_plane},
                       {"notes", c.notes}};
    return r;
}

inline json smooth_report(const SurfaceData& s, const SystemType& t) {
    json r = report_header("smooth", s, t);
    auto rep = generic_smoothness_predicate(s, t);
    r["generically_smooth"] = rep.generically_smooth;
    r["required_c2"] = rep.required_c2;
    r["steiner"] = {{"source_rank", rep.steiner_source_rank}, {"target_rank", rep.steiner_target_rank}};
    return r;
}

/// Stability of (s, t) at alpha against explicit candidates, or against the
/// whole window when `candidates` is empty.
inline json check_report(const SurfaceData& s, const SystemType& t, const AlphaPoly& alpha,
                         const std::vector<SubsystemCandidate>& candidates, const WallSearchWindow& window) {
    json r = report_header("check", s, t);
    r["alpha"] = poly_to_json(alpha.poly());
    r["reduced_hilbert"] = poly_to_json(reduced_hilbert(s, t, alpha));
    r["alpha_max"] = poly_to_json(alpha_upper_bound(s, t));
    r["within_bound"] = eventually_le(alpha.poly(), alpha_upper_bound(s, t));

    auto entry = [&](const SubsystemCandidate& c) {
        return json{{"candidate", candidate_to_json(c)}, {"verdict", to_string(check_against_candidate(s, t, alpha, c))}};
    };
    json results = json::array();
    bool stable = true, semistable = true;
    if (!candidates.empty()) {
        for (const auto& c : candidates) {
            auto e = entry(c);
            results.push_back(e);
            stable = stable && e["verdict"] == "StrictlyStable";
            semistable = semistable && e["verdict"] != "Destabilized";
        }
    } else {
        r["window"] = window_to_json(window);
        for (std::uint64_t i = 0; i < window.size(); ++i) {
            auto c = window.at(i);
            if (is_ambient(s, t, c)) continue;
            auto v = check_against_candidate(s, t, alpha, c);
            if (v == Verdict::StrictlyStable) continue;
            results.push_back(entry(c));
            stable = false;
            semistable = semistable && v != Verdict::Destabilized;
        }
    }
    r["results"] = results;
    r["stable"] = stable;
    r["semistable"] = semistable;
    r["warnings"] = stability_warnings(s, t);
    return r;
}

}  // namespace cosys
