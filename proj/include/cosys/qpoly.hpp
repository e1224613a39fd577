#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "cosys/rational.hpp"

namespace cosys {

/// Polynomial in the formal variable m with exact rational coefficients.
///
/// Coefficients are stored by ascending degree with trailing zeros stripped,
/// so the zero polynomial has no coefficients and two polynomials are equal
/// iff their coefficient vectors are equal.
class RationalPoly {
public:
    RationalPoly() = default;

    explicit RationalPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

    RationalPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { normalize(); }

    static RationalPoly constant(Rational c) { return RationalPoly(std::vector<Rational>{std::move(c)}); }

    /// slope*m + intercept
    static RationalPoly linear(Rational slope, Rational intercept) {
        return RationalPoly(std::vector<Rational>{std::move(intercept), std::move(slope)});
    }

    static RationalPoly monomial(Rational c, std::size_t degree) {
        std::vector<Rational> v(degree + 1);
        v[degree] = std::move(c);
        return RationalPoly(std::move(v));
    }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
    Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    RationalPoly& operator+=(const RationalPoly& rhs) {
        if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
        for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
        normalize();
        return *this;
    }

    RationalPoly& operator-=(const RationalPoly& rhs) {
        if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
        for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
        normalize();
        return *this;
    }

    RationalPoly& operator*=(const Rational& c) {
        for (auto& a : coeffs_) a *= c;
        normalize();
        return *this;
    }

    RationalPoly& operator/=(const Rational& c) {
        if (c == 0) throw PreconditionError("polynomial division by zero");
        for (auto& a : coeffs_) a /= c;
        return *this;
    }

    friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
    friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }
    friend RationalPoly operator*(RationalPoly a, const Rational& c) { return a *= c; }
    friend RationalPoly operator*(const Rational& c, RationalPoly a) { return a *= c; }
    friend RationalPoly operator/(RationalPoly a, const Rational& c) { return a /= c; }
    friend RationalPoly operator-(RationalPoly a) { return a *= Rational(-1); }

    friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return RationalPoly(std::move(out));
    }

    friend bool operator==(const RationalPoly& a, const RationalPoly& b) { return a.coeffs_ == b.coeffs_; }

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

enum class Order { Less, Equal, Greater };

inline const char* to_string(Order o) {
    switch (o) {
        case Order::Less: return "Less";
        case Order::Equal: return "Equal";
        case Order::Greater: return "Greater";
    }
    return "?";
}

/// Sign of p(m) for all sufficiently large m: the sign of the leading coefficient.
inline int eventual_sign(const RationalPoly& p) { return p.leading().sign(); }

/// Compares p1 and p2 as functions of m for m >> 0.
inline Order cmp_eventual(const RationalPoly& p1, const RationalPoly& p2) {
    switch (eventual_sign(p1 - p2)) {
        case -1: return Order::Less;
        case 0: return Order::Equal;
        default: return Order::Greater;
    }
}

inline bool eventually_le(const RationalPoly& p1, const RationalPoly& p2) {
    return cmp_eventual(p1, p2) != Order::Greater;
}

inline bool eventually_lt(const RationalPoly& p1, const RationalPoly& p2) {
    return cmp_eventual(p1, p2) == Order::Less;
}

/// p(m) > 0 for m >> 0. The zero polynomial is not positive.
inline bool is_eventually_positive(const RationalPoly& p) { return eventual_sign(p) > 0; }

inline Rational eval_at(const RationalPoly& p, const Rational& m0) {
    Rational acc = 0;
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * m0 + *it;
    return acc;
}

/// An integer M such that sign(p(m)) = eventual_sign(p) for every m >= M.
///
/// Cauchy bound 1 + sum_{i<d} |a_i| / |a_d|, rounded up.
inline Integer dominance_bound(const RationalPoly& p) {
    if (p.degree() <= 0) return 1;
    Rational lead = abs(p.leading());
    Rational sum = 0;
    for (int i = 0; i < p.degree(); ++i) sum += abs(p.coeff(static_cast<std::size_t>(i)));
    Rational bound = 1 + sum / lead;
    Integer floor_part = numerator_of(bound) / denominator_of(bound);
    return is_integral(bound) ? floor_part : floor_part + 1;
}

/// Text form "a2*m^2 + a1*m + a0"; zero terms omitted, negatives written with " - ".
inline std::string to_string(const RationalPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        Rational c = p.coeff(static_cast<std::size_t>(i));
        if (c == 0) continue;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        out += to_string(abs(c));
        if (i == 1) out += "*m";
        if (i >= 2) out += "*m^" + std::to_string(i);
    }
    return out;
}

}  // namespace cosys
