#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

#include "cosys/stability.hpp"

namespace cosys {

/// Finite box of candidate invariants (n', c1'.H, chi', k') to search for walls.
struct WallSearchWindow {
    std::int64_t s_min, s_max;
    std::int64_t chi_min, chi_max;
    std::int64_t n_max;
    std::int64_t k_max;

    std::uint64_t size() const {
        return static_cast<std::uint64_t>(n_max) * static_cast<std::uint64_t>(k_max + 1) *
               static_cast<std::uint64_t>(s_max - s_min + 1) * static_cast<std::uint64_t>(chi_max - chi_min + 1);
    }

    /// Candidate number i in (n', k', s', chi') lexicographic order.
    SubsystemCandidate at(std::uint64_t i) const {
        const auto chis = static_cast<std::uint64_t>(chi_max - chi_min + 1);
        const auto ss = static_cast<std::uint64_t>(s_max - s_min + 1);
        const auto ks = static_cast<std::uint64_t>(k_max + 1);
        SubsystemCandidate c;
        c.chi_sub = chi_min + static_cast<std::int64_t>(i % chis);
        i /= chis;
        c.s_sub = s_min + static_cast<std::int64_t>(i % ss);
        i /= ss;
        c.k_sub = static_cast<std::int64_t>(i % ks);
        c.n_sub = 1 + static_cast<std::int64_t>(i / ks);
        return c;
    }

    friend bool operator==(const WallSearchWindow&, const WallSearchWindow&) = default;
};

inline void validate(const SystemType& t, const WallSearchWindow& w) {
    if (w.s_min > w.s_max) throw PreconditionError("window needs s_min <= s_max");
    if (w.chi_min > w.chi_max) throw PreconditionError("window needs chi_min <= chi_max");
    if (w.n_max < 1 || w.n_max > t.n) throw PreconditionError("window needs 1 <= n_max <= n");
    if (w.k_max < 0 || w.k_max > t.k) throw PreconditionError("window needs 0 <= k_max <= k");
}

/// s' in [-|c1.H| - 2, c1.H + 2], chi' in [-|chi| - 4, |chi| + 4], all ranks and k'.
inline WallSearchWindow default_window(const SurfaceData& s, const SystemType& t) {
    validate(s, t);
    const std::int64_t c1H = s.degree(t.c1);
    const Rational chi = abs(euler_char(s, t.sheaf()));
    const Integer chi_ceil = (numerator_of(chi) + denominator_of(chi) - 1) / denominator_of(chi);
    const auto chi_bound = static_cast<std::int64_t>(chi_ceil);
    return {-std::abs(c1H) - 2, c1H + 2, -chi_bound - 4, chi_bound + 4, t.n, t.k};
}

/// Critical value of alpha: alpha together with the candidates attaining equality there.
struct Wall {
    AlphaPoly alpha;
    std::vector<SubsystemCandidate> witnesses;
};

inline bool is_ambient(const SurfaceData& s, const SystemType& t, const SubsystemCandidate& c) {
    return c.n_sub == t.n && c.k_sub == t.k && c.s_sub == s.degree(t.c1) && c.chi_sub == euler_char(s, t.sheaf());
}

/// Solves candidate poly = ambient poly for alpha. Empty when k'/n' = k/n or
/// when the solution is not eventually positive. The quadratic terms always
/// cancel since both normalized polynomials lead with H^2/2.
inline std::optional<AlphaPoly> wall_of_candidate(const SurfaceData& s, const SystemType& t,
                                                  const SubsystemCandidate& cand) {
    validate(s, t);
    if (cand.n_sub < 1) throw PreconditionError("candidate rank must be positive");
    const Rational weight = make_rational(cand.k_sub, cand.n_sub) - make_rational(t.k, t.n);
    if (weight == 0) return std::nullopt;
    const Rational chi = euler_char(s, t.sheaf());
    RationalPoly rhs = RationalPoly::linear(make_rational(s.degree(t.c1), t.n) - make_rational(cand.s_sub, cand.n_sub),
                                            chi / t.n - cand.chi_sub / cand.n_sub);
    RationalPoly alpha = rhs / weight;
    if (!is_eventually_positive(alpha)) return std::nullopt;
    return AlphaPoly::make(std::move(alpha));
}

namespace detail {

/// Runs fn(lo, hi) over `workers` disjoint contiguous ranges covering [0, total)
/// and returns the per-range results in range order.
template <class Fn>
auto run_partitioned(std::uint64_t total, unsigned workers, Fn fn) {
    using Result = decltype(fn(std::uint64_t{}, std::uint64_t{}));
    workers = std::max(1u, workers);
    if (workers > total) workers = static_cast<unsigned>(std::max<std::uint64_t>(1, total));
    std::vector<Result> parts(workers);
    const std::uint64_t chunk = (total + workers - 1) / workers;
    if (workers == 1) {
        parts[0] = fn(0, total);
        return parts;
    }
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t lo = std::min(total, w * chunk), hi = std::min(total, lo + chunk);
        pool.emplace_back([&parts, &fn, w, lo, hi] { parts[w] = fn(lo, hi); });
    }
    pool.clear();
    return parts;
}

}  // namespace detail

/// All candidate walls in (0, alpha_max] from the window, ascending, with merged
/// witnesses. Output is independent of the worker count.
///
/// Emitted walls are candidate critical values: a numerical candidate need not
/// be realized by an actual subsystem.
inline std::vector<Wall> enumerate_walls(const SurfaceData& s, const SystemType& t, const WallSearchWindow& window,
                                         unsigned workers = 1) {
    validate(s, t);
    validate(t, window);
    if (t.k == 0) return {};
    const RationalPoly bound = alpha_upper_bound(s, t);

    using Hit = std::pair<AlphaPoly, SubsystemCandidate>;
    auto parts = detail::run_partitioned(window.size(), workers, [&](std::uint64_t lo, std::uint64_t hi) {
        std::vector<Hit> hits;
        for (std::uint64_t i = lo; i < hi; ++i) {
            SubsystemCandidate c = window.at(i);
            if (is_ambient(s, t, c)) continue;
            auto alpha = wall_of_candidate(s, t, c);
            if (alpha && eventually_le(alpha->poly(), bound)) hits.emplace_back(std::move(*alpha), std::move(c));
        }
        return hits;
    });

    std::vector<Hit> all;
    for (auto& p : parts) std::move(p.begin(), p.end(), std::back_inserter(all));
    std::sort(all.begin(), all.end(), [](const Hit& a, const Hit& b) {
        Order o = cmp_eventual(a.first.poly(), b.first.poly());
        if (o != Order::Equal) return o == Order::Less;
        return a.second < b.second;
    });

    std::vector<Wall> walls;
    for (auto& [alpha, cand] : all) {
        if (walls.empty() || !(walls.back().alpha == alpha)) walls.push_back({alpha, {}});
        walls.back().witnesses.push_back(std::move(cand));
    }
    return walls;
}

/// Candidates with k'/n' = k/n whose reduced polynomial exceeds the ambient one.
/// They destabilize for every alpha, so they are reported instead of walls.
inline std::vector<SubsystemCandidate> alpha_independent_destabilizers(const SurfaceData& s, const SystemType& t,
                                                                       const WallSearchWindow& window,
                                                                       unsigned workers = 1) {
    validate(s, t);
    validate(t, window);
    const RationalPoly ambient = reduced_hilbert(s, t, RationalPoly{});
    auto parts = detail::run_partitioned(window.size(), workers, [&](std::uint64_t lo, std::uint64_t hi) {
        std::vector<SubsystemCandidate> out;
        for (std::uint64_t i = lo; i < hi; ++i) {
            SubsystemCandidate c = window.at(i);
            if (c.k_sub * t.n != t.k * c.n_sub || is_ambient(s, t, c)) continue;
            if (cmp_eventual(candidate_reduced_hilbert(s, c, RationalPoly{}), ambient) == Order::Greater)
                out.push_back(std::move(c));
        }
        return out;
    });
    std::vector<SubsystemCandidate> all;
    for (auto& p : parts) std::move(p.begin(), p.end(), std::back_inserter(all));
    std::sort(all.begin(), all.end());
    return all;
}

/// Sign of (candidate - ambient) reduced polynomials evaluated pointwise.
inline std::vector<int> oracle_compare_at_samples(const SurfaceData& s, const SystemType& t, const RationalPoly& alpha,
                                                  const SubsystemCandidate& cand, const std::vector<Rational>& samples) {
    if (samples.empty()) throw PreconditionError("at least one sample point is required");
    const RationalPoly sub = candidate_reduced_hilbert(s, cand, alpha);
    const RationalPoly amb = reduced_hilbert(s, t, alpha);
    std::vector<int> out;
    out.reserve(samples.size());
    for (const auto& m0 : samples) out.push_back(sign(eval_at(sub, m0) - eval_at(amb, m0)));
    return out;
}

}  // namespace cosys
