#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cosys/lattice.hpp"
#include "cosys/qpoly.hpp"

namespace cosys {

/// Rank and Chern data of a torsion-free sheaf, with no sections attached.
struct SheafNumerics {
    std::int64_t n;
    DivisorClass c1;
    std::int64_t c2;
};

/// Type (n; c1, c2, k) of a coherent system (E, V) with dim V = k < n.
struct SystemType {
    std::int64_t n;
    DivisorClass c1;
    std::int64_t c2;
    std::int64_t k;

    SheafNumerics sheaf() const { return {n, c1, c2}; }

    friend bool operator==(const SystemType&, const SystemType&) = default;
};

inline void validate(const SurfaceData& s, const SheafNumerics& t) {
    if (t.n < 1) throw PreconditionError("rank must be positive");
    if (t.c1.size() != s.rank()) throw PreconditionError("c1 length does not match lattice rank");
}

inline void validate(const SurfaceData& s, const SystemType& t) {
    validate(s, t.sheaf());
    if (t.k < 0 || t.k >= t.n) throw PreconditionError("type requires 0 <= k < n");
}

/// Riemann-Roch: chi(E) = (c1^2 - c1.K)/2 - c2 + n chi(O_X).
inline Rational euler_char(const SurfaceData& s, const SheafNumerics& t) {
    validate(s, t);
    Rational c1sq = s.pairing(t.c1, t.c1);
    Rational c1K = s.pairing(t.c1, s.canonical());
    return (c1sq - c1K) / 2 - t.c2 + Rational(t.n) * s.chi_O();
}

/// Genuine classes satisfy c1^2 + c1.K even, which makes chi(E) an integer.
inline bool has_integral_euler_char(const SurfaceData& s, const SheafNumerics& t) {
    return is_integral(euler_char(s, t));
}

/// P_{H,E}(m)/n = H^2 m^2/2 + (c1.H/n - K.H/2) m + chi(E)/n.
inline RationalPoly hilbert_poly_normalized(const SurfaceData& s, const SheafNumerics& t) {
    validate(s, t);
    const Rational n = t.n;
    return RationalPoly{euler_char(s, t) / n, Rational(s.degree(t.c1)) / n - make_rational(s.KH(), 2),
                        make_rational(s.H2(), 2)};
}

/// mu_H = c1.H / n
inline Rational slope(const SurfaceData& s, const SheafNumerics& t) {
    validate(s, t);
    return make_rational(s.degree(t.c1), t.n);
}

/// Consistency diagnostics for user-supplied numerics; empty when clean.
inline std::vector<std::string> input_warnings(const SurfaceData& s, const SheafNumerics& t) {
    std::vector<std::string> out;
    if (!has_integral_euler_char(s, t))
        out.push_back("chi(E) = " + to_string(euler_char(s, t)) +
                      " is not an integer; c1^2 + c1.K must be even for a genuine class");
    return out;
}

}  // namespace cosys
