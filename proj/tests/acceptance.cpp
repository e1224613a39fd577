// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "cli_runner.hpp"
#include "cosys/report.hpp"
#include "oracles.hpp"

using namespace cosys;
using namespace cosys::testing;

namespace {

// A criterion body appends to `fail` on each violated check; empty means pass.
using Failures = std::vector<std::string>;

#define REQUIRE(cond, what)                      \
    do {                                         \
        if (!(cond)) fail.push_back(what);       \
    } while (0)

const SurfaceData& p2() {
    static const SurfaceData s = builtin_surface("P2");
    return s;
}

const SystemType kRank2{2, {{2}}, 3, 1};
const char* kP2Config = R"({"surface": {"builtin": "P2"}, "system": {"n": 2, "c1": [2], "c2": 3, "k": 1}})";

std::string show(const RationalPoly& p) { return to_string(p); }

// Random rank-2 or rank-3 lattice with symmetric gram, entries in [-6, 6] and H^2 > 0.
SurfaceData random_surface(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::int64_t> e(-6, 6), rank(2, 3);
    for (;;) {
        const auto r = static_cast<std::size_t>(rank(rng));
        GramMatrix g(r, std::vector<std::int64_t>(r));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = i; j < r; ++j) g[i][j] = g[j][i] = e(rng);
        std::vector<std::int64_t> K(r), H(r);
        for (auto& x : K) x = e(rng);
        for (auto& x : H) x = e(rng);
        try {
            return SurfaceData(g, {K}, {H}, e(rng));
        } catch (const ConfigError&) {
        }
    }
}

Failures ac1_dimension_identity() {
    Failures fail;
    std::mt19937_64 rng(1001);
    std::uniform_int_distribution<std::int64_t> nd(2, 8), e(-6, 6), c2d(-10, 30);
    for (int i = 0; i < 1000; ++i) {
        auto s = random_surface(rng);
        const auto n = nd(rng);
        const auto k = std::uniform_int_distribution<std::int64_t>(1, n - 1)(rng);
        std::vector<std::int64_t> c1(s.rank());
        for (auto& x : c1) x = e(rng);
        SystemType t{n, {c1}, c2d(rng), k};
        // independent: k p - k^2 + dim_M with p and dim_M written out here
        const Rational chiO = s.chi_O(), c1sq = s.pairing(t.c1, t.c1), c1K = s.pairing(t.c1, s.canonical());
        const std::int64_t r = n - k;
        const Rational p = -Rational(r) * chiO - c1K / 2 - c1sq / 2 + t.c2;
        const Rational dimM = Rational(2 * r * t.c2) - Rational(r - 1) * c1sq - Rational(r * r - 1) * chiO;
        const Rational rhs = Rational(k) * p - Rational(k * k) + dimM;
        const Rational lhs = grassmann_bundle_dimension_formula(s, t);
        if (lhs != rhs) {
            fail.push_back("instance " + std::to_string(i) + ": " + to_string(lhs) + " != " + to_string(rhs));
            break;
        }
        REQUIRE(dim_GLs(s, t).identity_holds, "identity_holds false at instance " + std::to_string(i));
    }
    auto rep = dim_GLs(p2(), kRank2);
    REQUIRE(rep.total_dim == 8, "P2 pin formula side = " + to_string(rep.total_dim));
    REQUIRE(rep.fiber_dim + rep.dim_M == 8, "P2 pin fibration side != 8");
    return fail;
}

Failures ac2_epsilon_monotonicity() {
    Failures fail;
    std::mt19937_64 rng(1002);
    std::uniform_int_distribution<int> coef(-20, 20), den(1, 6), pdist(1, 12), ndist(2, 12);
    auto rp = [&] { return RationalPoly::linear(make_rational(coef(rng), den(rng)), make_rational(coef(rng), den(rng))); };
    int done = 0;
    while (done < 500) {
        const std::int64_t n = ndist(rng);
        const std::int64_t k = std::uniform_int_distribution<std::int64_t>(1, n - 1)(rng);
        RationalPoly d = rp(), q = rp(), q2 = rp();
        if (!eventually_lt(q, d)) continue;
        std::int64_t p = pdist(rng), p2 = pdist(rng);
        if (p == p2) continue;
        if (p > p2) std::swap(p, p2);
        if (eventually_lt(q2, q)) std::swap(q, q2);
        ++done;
        REQUIRE(eventually_le(epsilon(n, k, d, p, q), epsilon(n, k, d, p2, q)),
                "eps(p,q) > eps(p',q) for d=" + show(d) + " q=" + show(q));
        REQUIRE(eventually_le(epsilon(n, k, d, p, q), epsilon(n, k, d, p, q2)),
                "eps(p,q) > eps(p,q') for q=" + show(q) + " q'=" + show(q2));
    }
    return fail;
}

Failures ac3_hilbert_oracle() {
    Failures fail;
    for (std::int64_t d = -5; d <= 10; ++d) {
        auto poly = hilbert_poly_normalized(p2(), {1, {{d}}, 0});
        for (std::int64_t m = 0; m <= 5; ++m) {
            const Rational expected = make_rational((d + m + 1) * (d + m + 2), 2);
            REQUIRE(eval_at(poly, m) == expected, "P2 d=" + std::to_string(d) + " m=" + std::to_string(m));
        }
    }
    const auto q = builtin_surface("P1xP1");
    for (std::int64_t a = -4; a <= 6; ++a)
        for (std::int64_t b = -4; b <= 6; ++b)
            REQUIRE(euler_char(q, {1, {{a, b}}, 0}) == (a + 1) * (b + 1),
                    "P1xP1 a=" + std::to_string(a) + " b=" + std::to_string(b));
    return fail;
}

Failures ac4_bound_ordering() {
    Failures fail;
    std::mt19937_64 rng(1004);
    std::uniform_int_distribution<std::int64_t> nd(2, 9), c2d(-10, 30), e(-6, 6);
    const SurfaceData surfaces[] = {p2(), builtin_surface("P1xP1"), builtin_surface("Hirzebruch(1)"),
                                    builtin_surface("Hirzebruch(3)")};
    for (int i = 0; i < 300; ++i) {
        const auto& s = surfaces[static_cast<std::size_t>(i) % 4];
        const auto n = nd(rng);
        const auto k = std::uniform_int_distribution<std::int64_t>(1, n - 1)(rng);
        // admissible: stability computations assume c1.H > 0
        std::vector<std::int64_t> c1(s.rank());
        do {
            for (auto& x : c1) x = e(rng);
        } while (s.degree({c1}) <= 0);
        SystemType t{n, {c1}, c2d(rng), k};
        const auto amax = alpha_upper_bound(s, t), at = alpha_torsion_threshold(s, t);
        REQUIRE(cmp_eventual(at, amax) == Order::Less, "alpha_T >= alpha_max at instance " + std::to_string(i));
        REQUIRE(amax - at == RationalPoly::constant(make_rational(n, k) / (n - k)),
                "gap " + show(amax - at) + " at instance " + std::to_string(i));
        for (std::int64_t k0 = 1; k0 <= k - 1; ++k0)
            REQUIRE(eventually_le(alpha_injectivity_threshold(s, t, ExactKernelRank{k0}), amax),
                    "alpha_I(k0=" + std::to_string(k0) + ") > alpha_max at instance " + std::to_string(i));
    }
    return fail;
}

Failures ac5_walls() {
    Failures fail;
    const auto window = default_window(p2(), kRank2);
    const auto walls = enumerate_walls(p2(), kRank2, window, 1);
    const RationalPoly target = RationalPoly::linear(2, 2);
    const SubsystemCandidate witness{1, 0, 1, 1};
    bool found = false;
    for (const auto& w : walls)
        if (w.alpha.poly() == target)
            for (const auto& c : w.witnesses) found = found || c == witness;
    REQUIRE(found, "wall 2m+2 with witness (1,0,1,1) not emitted");

    const auto at = AlphaPoly::make(target);
    REQUIRE(check_against_candidate(p2(), kRank2, at, witness) == Verdict::Semistable, "not Semistable at the wall");
    const Rational eta = make_rational(1, 1000);
    for (const auto& side : {target - RationalPoly::constant(eta), target + RationalPoly::constant(eta)}) {
        auto v = check_against_candidate(p2(), kRank2, AlphaPoly::make(side), witness);
        REQUIRE(v != Verdict::Semistable, "non-strict verdict at alpha = " + show(side));
    }

    const auto one = run_cli("--config {CONFIG} --format json walls --workers 1", kP2Config);
    const auto eight = run_cli("--config {CONFIG} --format json walls --workers 8", kP2Config);
    REQUIRE(one.exit_code == 0 && eight.exit_code == 0, "walls CLI failed");
    REQUIRE(!one.out.empty() && one.out == eight.out, "1- and 8-worker CLI output differ");
    REQUIRE(walls_report(p2(), kRank2, window, 1).dump() == walls_report(p2(), kRank2, window, 8).dump(),
            "1- and 8-worker reports differ");

    REQUIRE(as_set(flatten(walls)) == as_set(naive_walls(p2(), kRank2, window)), "naive oracle wall set differs");
    return fail;
}

Failures ac6_eventual_order() {
    Failures fail;
    std::mt19937_64 rng(1006);
    std::uniform_int_distribution<int> coef(-10, 10), deg(0, 3);
    auto rp = [&] {
        std::vector<Rational> c(static_cast<std::size_t>(deg(rng)));
        for (auto& x : c) x = coef(rng);
        return RationalPoly(c);
    };
    for (int i = 0; i < 1000; ++i) {
        const RationalPoly p1 = rp(), p2 = rp(), diff = p1 - p2;
        // M = 1 + sum |numerator| * denominator over the coefficients of p1 - p2
        Integer M = 1;
        for (const auto& c : diff.coeffs()) M += abs(numerator_of(c)) * denominator_of(c);
        const int pointwise = sign(eval_at(diff, Rational(M)));
        const Order o = cmp_eventual(p1, p2);
        const int eventual = o == Order::Less ? -1 : o == Order::Equal ? 0 : 1;
        REQUIRE(eventual == pointwise, "cmp_eventual disagrees at M for " + show(p1) + " vs " + show(p2));
        REQUIRE((o == Order::Equal) == (p1.coeffs() == p2.coeffs()), "Equal is not coefficientwise equality");
        REQUIRE(sign(eval_at(diff, Rational(dominance_bound(diff)))) == eventual,
                "library dominance bound disagrees for " + show(diff));
    }
    return fail;
}

Failures ac7_case_analysis() {
    Failures fail;
    std::mt19937_64 rng(1007);
    std::uniform_int_distribution<std::int64_t> nd(2, 7), c1d(1, 8), c2d(-5, 30), chi(-10, 10), sd(-5, 0);
    for (int i = 0; i < 20; ++i) {
        const auto n = nd(rng);
        const SystemType t{n, {{c1d(rng)}}, c2d(rng), std::uniform_int_distribution<std::int64_t>(1, n - 1)(rng)};
        const auto n_sub = std::uniform_int_distribution<std::int64_t>(1, t.k)(rng);
        const auto k_sub = std::uniform_int_distribution<std::int64_t>(0, n_sub)(rng);
        auto w = strictness_epsilon_threshold(p2(), t, CaseC{n_sub, k_sub, sd(rng), chi(rng)});
        REQUIRE(w.verdict && w.unbounded, "Case C not unbounded at instance " + std::to_string(i));
    }
    for (const Rational delta : {Rational(0), Rational(-1), make_rational(-1, 3)}) {
        bool a_rejected = false, b_rejected = false;
        try {
            strictness_epsilon_threshold(p2(), kRank2, CaseA{1, 0, 1, delta});
        } catch (const PreconditionError&) {
            a_rejected = true;
        }
        try {
            strictness_epsilon_threshold(p2(), kRank2, CaseB{2, 1, 1, 1, delta});
        } catch (const PreconditionError&) {
            b_rejected = true;
        }
        REQUIRE(a_rejected, "Case A accepted delta = " + to_string(delta));
        REQUIRE(b_rejected, "Case B accepted delta = " + to_string(delta));
    }
    return fail;
}

Failures ac8_clifford() {
    Failures fail;
    auto rep = clifford_bounds(p2(), kRank2, 5);
    REQUIRE(rep.bound_ii && *rep.bound_ii == 7, "bound_ii != 7");
    REQUIRE(rep.bound_i && *rep.bound_i == 7, "bound_i(a=5) != 7");
    // H^2 max{(n^2-1)/4, 1} < (C(a+2,2) - a - 1)/a and 0 <= c1.H/n < a H^2 + K.H, evaluated directly
    const std::int64_t a = 5, n = 2, c1H = 2, H2 = 1, KH = -3;
    const Rational lhs = Rational(H2) * std::max(make_rational(n * n - 1, 4), Rational(1));
    const Rational rhs = Rational(pascal(a + 2, 2) - a - 1) / a;
    REQUIRE(lhs < rhs, "H^2 hypothesis fails by brute force");
    REQUIRE(make_rational(c1H, n) >= 0 && make_rational(c1H, n) < Rational(a * H2 + KH), "degree hypothesis fails");
    REQUIRE(rep.conditions.h2_condition && rep.conditions.degree_condition, "library hypothesis flags disagree");
    REQUIRE(rep.conditions.h2_lhs == lhs && rep.conditions.h2_rhs == rhs, "library hypothesis values disagree");
    return fail;
}

Failures ac9_smoothness() {
    Failures fail;
    auto squaring = [](std::int64_t r, std::int64_t c1) {
        const std::int64_t lhs = 2 * r - c1;
        return lhs <= 0 || lhs * lhs < 5 * c1 * c1;
    };
    const SystemType pins[] = {{3, {{1}}, 1, 2}, {3, {{1}}, 1, 1}, {2, {{4}}, 10, 1}};
    const bool expected[] = {true, false, true};
    for (std::size_t i = 0; i < 3; ++i) {
        const auto& t = pins[i];
        const bool got = generic_smoothness_predicate(p2(), t).generically_smooth;
        REQUIRE(got == expected[i] && got == squaring(t.n - t.k, t.c1.coords[0]), "pin " + std::to_string(i));
    }
    std::mt19937_64 rng(1009);
    std::uniform_int_distribution<std::int64_t> c1d(1, 40), rd(1, 80), kd(1, 4);
    const double golden = 1.6180339887;
    int checked = 0;
    while (checked < 200) {
        const std::int64_t c1 = c1d(rng), r = rd(rng), k = kd(rng);
        const double margin = static_cast<double>(c1) * golden - static_cast<double>(r);
        if (std::abs(margin) <= 1e-6) continue;
        SystemType t{r + k, {{c1}}, c1 * (c1 + 1) / 2, k};
        REQUIRE(generic_smoothness_predicate(p2(), t).generically_smooth == (margin > 0),
                "float oracle disagrees at n-k=" + std::to_string(r) + " c1=" + std::to_string(c1));
        ++checked;
    }
    return fail;
}

Failures ac10_cli() {
    Failures fail;
    auto dim = run_cli("--config {CONFIG} --format json dim", kP2Config);
    REQUIRE(dim.exit_code == 0, "dim exited " + std::to_string(dim.exit_code));
    if (dim.exit_code == 0) {
        const json emitted = json::parse(dim.out);
        REQUIRE(recompute_dim_report(emitted).dump() == emitted.dump(), "recomputed dim report differs");
    }
    REQUIRE(run_cli("--config {CONFIG} info", kP2Config).exit_code == 0, "info did not exit 0");
    REQUIRE(run_cli("--config {CONFIG} info", "{\"surface\": ").exit_code == 2, "malformed JSON did not exit 2");
    REQUIRE(run_cli("--config {CONFIG} info",
                    R"({"surface": {"builtin": "P2"}, "system": {"n": 2, "c1": [2], "c2": 3, "k": 2}})")
                    .exit_code == 2,
            "k >= n did not exit 2");
    REQUIRE(run_cli("--config {CONFIG} smooth",
                    R"({"surface": {"builtin": "P1xP1"}, "system": {"n": 2, "c1": [1,1], "c2": 1, "k": 1}})")
                    .exit_code == 3,
            "smooth off P2 did not exit 3");
    REQUIRE(run_cli("--config {CONFIG} smooth",
                    R"({"surface": {"builtin": "P2"}, "system": {"n": 2, "c1": [2], "c2": 4, "k": 1}})")
                    .exit_code == 3,
            "smooth with c2 != C(c1+1,2) did not exit 3");
    return fail;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Failures()>>> criteria = {
        {"AC1 dimension identity (1000 random lattices) and P2 pin", ac1_dimension_identity},
        {"AC2 epsilon monotonicity (500 instances)", ac2_epsilon_monotonicity},
        {"AC3 Hilbert polynomial oracle on P2 and P1xP1", ac3_hilbert_oracle},
        {"AC4 bound ordering (300 admissible types)", ac4_bound_ordering},
        {"AC5 wall 2m+2 on P2, re-verification, determinism, naive oracle", ac5_walls},
        {"AC6 eventual order vs pointwise sign at M (1000 pairs)", ac6_eventual_order},
        {"AC7 Case C unbounded, delta <= 0 rejected in A/B", ac7_case_analysis},
        {"AC8 Clifford pins with brute-force binomials", ac8_clifford},
        {"AC9 smoothness pins and float oracle", ac9_smoothness},
        {"AC10 CLI dim round trip and exit codes", ac10_cli},
    };
    int failed = 0;
    for (const auto& [name, run] : criteria) {
        Failures fail;
        try {
            fail = run();
        } catch (const std::exception& e) {
            fail.push_back(std::string("exception: ") + e.what());
        }
        std::cout << (fail.empty() ? "[PASS] " : "[FAIL] ") << name << "\n";
        for (const auto& f : fail) std::cout << "       " << f << "\n";
        failed += fail.empty() ? 0 : 1;
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
