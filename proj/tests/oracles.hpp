#pragma once

#include <set>
#include <tuple>
#include <utility>
#include <vector>

#include "cosys/walls.hpp"

namespace cosys::testing {

// Independent re-enumeration: nested loops, solve (candidate - ambient) = 0 for
// alpha from the reduced polynomials at alpha = 0 and alpha = 1, no dedup.
inline std::vector<std::pair<RationalPoly, SubsystemCandidate>> naive_walls(const SurfaceData& s, const SystemType& t,
                                                                     const WallSearchWindow& w) {
    std::vector<std::pair<RationalPoly, SubsystemCandidate>> out;
    const RationalPoly zero, one = RationalPoly::constant(1);
    const RationalPoly bound = alpha_upper_bound(s, t);
    for (std::int64_t n = 1; n <= w.n_max; ++n)
        for (std::int64_t k = 0; k <= w.k_max; ++k)
            for (std::int64_t sd = w.s_min; sd <= w.s_max; ++sd)
                for (std::int64_t chi = w.chi_min; chi <= w.chi_max; ++chi) {
                    SubsystemCandidate c{n, sd, chi, k};
                    if (n == t.n && k == t.k && sd == s.degree(t.c1) && Rational(chi) == euler_char(s, t.sheaf()))
                        continue;
                    RationalPoly d0 = candidate_reduced_hilbert(s, c, zero) - reduced_hilbert(s, t, zero);
                    RationalPoly d1 = candidate_reduced_hilbert(s, c, one) - reduced_hilbert(s, t, one);
                    Rational slope = (d1 - d0).coeff(0);  // coefficient of alpha
                    if (slope == 0) continue;
                    RationalPoly alpha = -d0 / slope;
                    if (alpha.degree() > 1 || alpha.leading() <= 0) continue;
                    if (eventual_sign(alpha - bound) > 0) continue;
                    out.emplace_back(alpha, c);
                }
    return out;
}

inline std::set<std::pair<std::vector<Rational>, std::tuple<std::int64_t, std::int64_t, Rational, std::int64_t>>> as_set(
    const std::vector<std::pair<RationalPoly, SubsystemCandidate>>& hits) {
    std::set<std::pair<std::vector<Rational>, std::tuple<std::int64_t, std::int64_t, Rational, std::int64_t>>> out;
    for (const auto& [a, c] : hits) out.insert({a.coeffs(), {c.n_sub, c.s_sub, c.chi_sub, c.k_sub}});
    return out;
}

inline std::vector<std::pair<RationalPoly, SubsystemCandidate>> flatten(const std::vector<Wall>& walls) {
    std::vector<std::pair<RationalPoly, SubsystemCandidate>> out;
    for (const auto& w : walls)
        for (const auto& c : w.witnesses) out.emplace_back(w.alpha.poly(), c);
    return out;
}

// C(n, r) by Pascal's rule, no closed form.
inline Integer pascal(int n, int r) {
    std::vector<std::vector<Integer>> row(static_cast<std::size_t>(n + 1));
    for (int i = 0; i <= n; ++i) {
        row[i].assign(static_cast<std::size_t>(i + 1), 1);
        for (int j = 1; j < i; ++j) row[i][j] = row[i - 1][j - 1] + row[i - 1][j];
    }
    return r < 0 || r > n ? Integer(0) : row[n][r];
}

}  // namespace cosys::testing
