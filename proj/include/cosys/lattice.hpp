#pragma once

#include <cstdint>
#include <optional>
#include <regex>
#include <string>
#include <utility>
#include <vector>

#include "cosys/rational.hpp"

namespace cosys {

/// Integer coordinates of a divisor class in a Neron-Severi basis.
struct DivisorClass {
    std::vector<std::int64_t> coords;

    std::size_t size() const { return coords.size(); }

    friend DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
        if (a.size() != b.size()) throw PreconditionError("divisor classes of different rank");
        DivisorClass out = a;
        for (std::size_t i = 0; i < b.size(); ++i) out.coords[i] += b.coords[i];
        return out;
    }

    friend DivisorClass operator*(std::int64_t c, DivisorClass a) {
        for (auto& x : a.coords) x *= c;
        return a;
    }

    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

using GramMatrix = std::vector<std::vector<std::int64_t>>;

/// Numerical model of a smooth projective surface: intersection lattice,
/// canonical class, polarization and chi(O_X).
///
/// Only H^2 > 0 is checked; ampleness of H is an assertion made by the caller.
class SurfaceData {
public:
    SurfaceData(GramMatrix gram, DivisorClass canonical, DivisorClass polarization, std::int64_t chi_O,
                std::string name = {})
        : gram_(std::move(gram)),
          canonical_(std::move(canonical)),
          polarization_(std::move(polarization)),
          chi_O_(chi_O),
          name_(std::move(name)) {
        const auto r = gram_.size();
        if (r == 0) throw ConfigError("surface lattice must have positive rank");
        for (const auto& row : gram_)
            if (row.size() != r) throw ConfigError("gram matrix is not square");
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (gram_[i][j] != gram_[j][i]) throw ConfigError("gram matrix is not symmetric");
        if (canonical_.size() != r) throw ConfigError("canonical class has wrong length");
        if (polarization_.size() != r) throw ConfigError("polarization has wrong length");
        if (pairing(polarization_, polarization_) <= 0)
            throw ConfigError("polarization fails H^2 > 0, cannot be ample");
    }

    std::size_t rank() const { return gram_.size(); }
    const GramMatrix& gram() const { return gram_; }
    const DivisorClass& canonical() const { return canonical_; }
    const DivisorClass& polarization() const { return polarization_; }
    std::int64_t chi_O() const { return chi_O_; }
    const std::string& name() const { return name_; }

    /// a^T * gram * b
    std::int64_t pairing(const DivisorClass& a, const DivisorClass& b) const {
        if (a.size() != rank() || b.size() != rank())
            throw PreconditionError("divisor class length does not match lattice rank");
        std::int64_t acc = 0;
        for (std::size_t i = 0; i < rank(); ++i)
            for (std::size_t j = 0; j < rank(); ++j) acc += a.coords[i] * gram_[i][j] * b.coords[j];
        return acc;
    }

    std::int64_t H2() const { return pairing(polarization_, polarization_); }
    std::int64_t KH() const { return pairing(canonical_, polarization_); }
    std::int64_t K2() const { return pairing(canonical_, canonical_); }
    std::int64_t degree(const DivisorClass& c) const { return pairing(c, polarization_); }

    /// Same lattice data with a different polarization.
    SurfaceData with_polarization(DivisorClass h) const {
        return SurfaceData(gram_, canonical_, std::move(h), chi_O_, name_);
    }

    friend bool operator==(const SurfaceData&, const SurfaceData&) = default;

private:
    GramMatrix gram_;
    DivisorClass canonical_;
    DivisorClass polarization_;
    std::int64_t chi_O_;
    std::string name_;
};

inline std::int64_t pairing(const SurfaceData& s, const DivisorClass& a, const DivisorClass& b) {
    return s.pairing(a, b);
}

/// Hirzebruch surface F_e in the basis (fiber f, section s) with s^2 = -e.
inline SurfaceData hirzebruch(std::int64_t e) {
    if (e < 0) throw ConfigError("Hirzebruch index must be nonnegative");
    DivisorClass K{{-(e + 2), -2}};
    DivisorClass H = e == 0 ? DivisorClass{{1, 1}} : DivisorClass{{e + 1, 1}};
    std::string name = e == 0 ? "P1xP1" : "Hirzebruch(" + std::to_string(e) + ")";
    return SurfaceData({{0, 1}, {1, -e}}, std::move(K), std::move(H), 1, std::move(name));
}

inline SurfaceData projective_plane() { return SurfaceData({{1}}, DivisorClass{{-3}}, DivisorClass{{1}}, 1, "P2"); }

/// "P2", "P1xP1" or "Hirzebruch(e)".
inline SurfaceData builtin_surface(const std::string& name) {
    if (name == "P2") return projective_plane();
    if (name == "P1xP1") return hirzebruch(0);
    static const std::regex hirz(R"(Hirzebruch\((\d+)\))");
    std::smatch m;
    if (std::regex_match(name, m, hirz)) return hirzebruch(std::stoll(m[1].str()));
    throw ConfigError("unknown builtin surface '" + name + "'");
}

/// True when the numerical data is exactly that of P^2 with H the line class.
inline bool is_projective_plane(const SurfaceData& s) {
    return s.rank() == 1 && s.gram()[0][0] == 1 && s.canonical().coords[0] == -3 &&
           s.polarization().coords[0] == 1 && s.chi_O() == 1;
}

}  // namespace cosys
