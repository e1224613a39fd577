#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "cosys/invariants.hpp"

namespace cosys {

/// Expected dimension of M_H(r; c1, c2): 2 r c2 - (r-1) c1^2 - (r^2-1) chi(O_X).
inline std::int64_t dim_moduli_sheaves(const SurfaceData& s, std::int64_t r, const DivisorClass& c1, std::int64_t c2) {
    if (r < 1) throw PreconditionError("moduli of sheaves needs rank >= 1");
    const std::int64_t c1sq = s.pairing(c1, c1);
    return 2 * r * c2 - (r - 1) * c1sq - (r * r - 1) * s.chi_O();
}

/// p = -chi(F*) = -(n-k) chi(O_X) - c1.K/2 - c1^2/2 + c2, the rank of Ext^1(F, O_X).
inline Rational ext_fiber_dim(const SurfaceData& s, const SystemType& t) {
    validate(s, t);
    const Rational c1K = s.pairing(t.c1, s.canonical());
    const Rational c1sq = s.pairing(t.c1, t.c1);
    return -Rational(t.n - t.k) * s.chi_O() - c1K / 2 - c1sq / 2 + t.c2;
}

struct GrassmannHypotheses {
    std::int64_t kc1h_value;   // ((n-k) K + c1).H
    bool kc1h_condition;       // kc1h_value <= 0
    bool coprime_advisory;     // gcd(n-k, c1.H) = 1, needed for a global Poincare sheaf
    bool c2_large_asserted;    // "c2 >> 0" has no effective threshold; user assertion only
};

struct GrassmannBundleReport {
    std::int64_t dim_M;
    Rational p;
    Rational fiber_dim;   // k (p - k)
    Rational total_dim;   // closed formula
    bool identity_holds;  // total_dim == k p - k^2 + dim_M
    GrassmannHypotheses hypotheses;
    std::vector<std::string> warnings;
};

/// Closed dimension formula for the large-alpha moduli space G_L^s(n; c1, c2, k):
/// (2n-k) c2 + (1 - n(n-k)) chi(O) - k^2 - k (c1.K/2 + c1^2/2) - (n-k-1) c1^2.
inline Rational grassmann_bundle_dimension_formula(const SurfaceData& s, const SystemType& t) {
    validate(s, t);
    const std::int64_t n = t.n, k = t.k;
    const Rational c1K = s.pairing(t.c1, s.canonical());
    const Rational c1sq = s.pairing(t.c1, t.c1);
    return Rational(2 * n - k) * t.c2 + Rational(1 - n * (n - k)) * s.chi_O() - Rational(k * k) -
           Rational(k) * (c1K / 2 + c1sq / 2) - Rational(n - k - 1) * c1sq;
}

inline GrassmannBundleReport dim_GLs(const SurfaceData& s, const SystemType& t, bool assert_c2_large = false) {
    validate(s, t);
    const std::int64_t r = t.n - t.k;
    GrassmannBundleReport rep;
    rep.dim_M = dim_moduli_sheaves(s, r, t.c1, t.c2);
    rep.p = ext_fiber_dim(s, t);
    rep.fiber_dim = Rational(t.k) * (rep.p - t.k);
    rep.total_dim = grassmann_bundle_dimension_formula(s, t);
    rep.identity_holds = rep.total_dim == rep.fiber_dim + rep.dim_M;

    const std::int64_t c1H = s.degree(t.c1);
    rep.hypotheses.kc1h_value = r * s.KH() + c1H;
    rep.hypotheses.kc1h_condition = rep.hypotheses.kc1h_value <= 0;
    rep.hypotheses.coprime_advisory = std::gcd(r, c1H) == 1;
    rep.hypotheses.c2_large_asserted = assert_c2_large;

    if (rep.dim_M < 0) rep.warnings.push_back("expected dim M_H is negative; the moduli space is empty");
    if (rep.p < t.k) rep.warnings.push_back("p < k: the Grassmannian Gr(k, p) is empty");
    if (!is_integral(rep.p)) rep.warnings.push_back("p is not an integer; c1^2 + c1.K is odd");
    if (!rep.hypotheses.kc1h_condition)
        rep.warnings.push_back("((n-k)K + c1).H > 0: the formula is only a lower bound");
    if (!rep.hypotheses.coprime_advisory)
        rep.warnings.push_back("n-k and c1.H are not coprime; only a local universal family exists");
    if (!assert_c2_large) rep.warnings.push_back("c2 >> 0 not asserted");
    return rep;
}

struct DimensionLowerBound {
    Rational value;
    bool lower_bound_only;  // true when ((n-k)K + c1).H > 0
};

/// Same value as dim_GLs().total_dim; exact when the K-condition holds.
inline DimensionLowerBound dimension_lower_bound(const SurfaceData& s, const SystemType& t) {
    auto rep = dim_GLs(s, t);
    return {rep.total_dim, !rep.hypotheses.kc1h_condition};
}

inline Integer binomial(std::int64_t n, std::int64_t r) {
    if (r < 0 || r > n) return 0;
    Integer acc = 1;
    for (std::int64_t i = 1; i <= r; ++i) acc = acc * (n - r + i) / i;
    return acc;
}

struct CliffordConditions {
    bool kh_nonpositive = false;                 // K.H <= 0
    std::optional<std::int64_t> a;               // value used for bound (i)
    bool a_searched = false;
    bool h2_condition = false;                   // H^2 max{(n^2-1)/4, 1} < (C(a+2,2) - a - 1)/a
    Rational h2_lhs, h2_rhs;
    bool degree_condition = false;               // 0 <= c1.H/n < a H^2 + K.H
    Rational degree_value, degree_upper;
    bool is_projective_plane = false;
    std::vector<std::string> notes;
};

struct CliffordReport {
    std::optional<Rational> bound_i;
    std::optional<Rational> bound_ii;
    CliffordConditions conditions;
};

inline constexpr std::int64_t kCliffordSearchLimit = 1000;

/// Clifford-type bounds on h^0(E) for large alpha:
///  (i)  h^0(E) <= n + a c1.H / 2 under the H^2 and degree conditions, K.H <= 0;
///  (ii) on P^2, h^0(E) <= c1^2/(2(n-k)) + 3 c1/2 + n with c1 the degree.
/// Without `a`, the smallest valid a in [1, 1000] is used.
/// Very ampleness of H is assumed, not checked.
inline CliffordReport clifford_bounds(const SurfaceData& s, const SystemType& t, std::optional<std::int64_t> a = {}) {
    validate(s, t);
    if (a && *a < 1) throw PreconditionError("clifford parameter a must be >= 1");
    CliffordReport rep;
    auto& cond = rep.conditions;
    const std::int64_t n = t.n, c1H = s.degree(t.c1);

    cond.kh_nonpositive = s.KH() <= 0;
    cond.h2_lhs = Rational(s.H2()) * std::max(make_rational(n * n - 1, 4), Rational(1));
    cond.degree_value = make_rational(c1H, n);

    auto evaluate = [&](std::int64_t av) {
        cond.a = av;
        cond.h2_rhs = Rational(binomial(av + 2, 2) - av - 1) / av;
        cond.h2_condition = cond.h2_lhs < cond.h2_rhs;
        cond.degree_upper = Rational(av * s.H2() + s.KH());
        cond.degree_condition = cond.degree_value >= 0 && cond.degree_value < cond.degree_upper;
        return cond.h2_condition && cond.degree_condition;
    };

    bool ok = false;
    if (a) {
        ok = evaluate(*a);
    } else {
        cond.a_searched = true;
        for (std::int64_t av = 1; av <= kCliffordSearchLimit && !ok; ++av) ok = evaluate(av);
        if (!ok) cond.notes.push_back("no a in [1, 1000] satisfies the hypotheses of bound (i)");
    }
    if (!cond.kh_nonpositive) cond.notes.push_back("K.H > 0: bound (i) does not apply");
    if (ok && cond.kh_nonpositive) rep.bound_i = Rational(n) + Rational(*cond.a) * c1H / 2;

    cond.is_projective_plane = is_projective_plane(s);
    if (cond.is_projective_plane) {
        const Rational c1 = c1H;
        rep.bound_ii = c1 * c1 / (2 * (n - t.k)) + Rational(3) * c1 / 2 + n;
    } else {
        cond.notes.push_back("bound (ii) applies only to P^2");
    }
    return rep;
}

struct SmoothnessReport {
    bool generically_smooth;
    std::int64_t steiner_source_rank;  // c1: rank of O(-1)^{c1}
    std::int64_t steiner_target_rank;  // n - k + c1: rank of O^{n-k+c1}
    std::int64_t required_c2;
};

/// On P^2 with c2 = C(c1+1, 2): decides n - k < c1 (1 + sqrt 5)/2 over the integers,
/// i.e. 2(n-k) - c1 <= 0 or (2(n-k) - c1)^2 < 5 c1^2.
inline SmoothnessReport generic_smoothness_predicate(const SurfaceData& s, const SystemType& t) {
    validate(s, t);
    if (!is_projective_plane(s)) throw PreconditionError("generic smoothness criterion is stated for P^2 only");
    const std::int64_t c1 = s.degree(t.c1);
    if (t.k < 1 || c1 < 1) throw PreconditionError("generic smoothness criterion needs k >= 1 and c1 >= 1");
    const auto required = static_cast<std::int64_t>(binomial(c1 + 1, 2));
    if (t.c2 != required)
        throw PreconditionError("generic smoothness criterion needs c2 = C(c1+1, 2) = " + std::to_string(required));
    const std::int64_t r = t.n - t.k;
    const std::int64_t lhs = 2 * r - c1;
    const bool smooth = lhs <= 0 || lhs * lhs < 5 * c1 * c1;
    return {smooth, c1, r + c1, required};
}

}  // namespace cosys
