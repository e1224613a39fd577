#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cosys {

using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
                                  boost::multiprecision::et_off>;

/// Thrown when user-supplied configuration is malformed or inconsistent.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown when an operation is called outside its documented domain.
struct PreconditionError : std::domain_error {
    using std::domain_error::domain_error;
};

inline Rational make_rational(Integer num, Integer den) {
    if (den == 0) throw PreconditionError("rational with zero denominator");
    // the backend rejects a negative denominator
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(num, den);
}

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) { return make_rational(Integer(num), Integer(den)); }

inline Integer numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

inline int sign(const Rational& q) { return q.sign(); }

inline bool is_integral(const Rational& q) { return denominator_of(q) == 1; }

inline Rational abs(const Rational& q) { return q.sign() < 0 ? Rational(-q) : q; }

/// Returns the value as int64 when it fits.
inline std::optional<std::int64_t> to_int64(const Integer& z) {
    if (z < Integer(std::numeric_limits<std::int64_t>::min()) ||
        z > Integer(std::numeric_limits<std::int64_t>::max()))
        return std::nullopt;
    return static_cast<std::int64_t>(z);
}

/// "p/q" in lowest terms, or "p" when the denominator is one.
inline std::string to_string(const Rational& q) {
    auto num = numerator_of(q).str();
    auto den = denominator_of(q);
    if (den == 1) return num;
    return num + "/" + den.str();
}

/// Parses "p", "-p" or "p/q".
inline Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    Integer num, den{1};
    try {
        num = Integer(text.substr(0, slash));
        if (slash != std::string::npos) den = Integer(text.substr(slash + 1));
    } catch (const std::exception&) {
        throw ConfigError("not a rational number: '" + text + "'");
    }
    if (den == 0) throw ConfigError("zero denominator in '" + text + "'");
    return make_rational(num, den);
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace cosys
