#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "cosys/walls.hpp"

namespace cosys {

using json = nlohmann::json;

// Rationals travel as [numerator, denominator] in lowest terms with den > 0.
// Integers that overflow int64 are written as decimal strings.

inline json integer_to_json(const Integer& z) {
    if (auto v = to_int64(z)) return *v;
    return z.str();
}

inline Integer integer_from_json(const json& j) {
    if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
    if (j.is_string()) {
        try {
            return Integer(j.get<std::string>());
        } catch (const std::exception&) {
        }
    }
    throw ConfigError("expected an integer, got " + j.dump());
}

inline json rational_to_json(const Rational& q) {
    return json::array({integer_to_json(numerator_of(q)), integer_to_json(denominator_of(q))});
}

/// Accepts [num, den], a bare integer, or a "p/q" string.
inline Rational rational_from_json(const json& j) {
    if (j.is_array()) {
        if (j.size() != 2) throw ConfigError("rational must be a [num, den] pair");
        Integer den = integer_from_json(j[1]);
        if (den == 0) throw ConfigError("rational with zero denominator");
        return make_rational(integer_from_json(j[0]), den);
    }
    if (j.is_string()) return parse_rational(j.get<std::string>());
    return Rational(integer_from_json(j));
}

/// Ascending-degree array of [num, den] pairs.
inline json poly_to_json(const RationalPoly& p) {
    json out = json::array();
    for (const auto& c : p.coeffs()) out.push_back(rational_to_json(c));
    return out;
}

inline RationalPoly poly_from_json(const json& j) {
    if (!j.is_array()) throw ConfigError("polynomial must be an array of coefficients");
    std::vector<Rational> coeffs;
    for (const auto& c : j) coeffs.push_back(rational_from_json(c));
    return RationalPoly(std::move(coeffs));
}

namespace detail {

template <class T>
T get_field(const json& obj, const char* key) {
    if (!obj.contains(key)) throw ConfigError(std::string("missing field '") + key + "'");
    try {
        return obj.at(key).get<T>();
    } catch (const json::exception& e) {
        throw ConfigError(std::string("bad field '") + key + "': " + e.what());
    }
}

}  // namespace detail

inline json surface_to_json(const SurfaceData& s) {
    json j{{"rank", s.rank()},
           {"gram", s.gram()},
           {"K", s.canonical().coords},
           {"H", s.polarization().coords},
           {"chi_O", s.chi_O()}};
    if (!s.name().empty()) j["name"] = s.name();
    return j;
}

/// {"builtin": "P2"} (optionally with "H"), or the explicit lattice form.
inline SurfaceData surface_from_json(const json& j) {
    if (!j.is_object()) throw ConfigError("surface must be an object");
    if (j.contains("builtin")) {
        SurfaceData s = builtin_surface(detail::get_field<std::string>(j, "builtin"));
        if (j.contains("H")) s = s.with_polarization({detail::get_field<std::vector<std::int64_t>>(j, "H")});
        return s;
    }
    auto gram = detail::get_field<GramMatrix>(j, "gram");
    if (j.contains("rank") && detail::get_field<std::size_t>(j, "rank") != gram.size())
        throw ConfigError("surface rank does not match gram matrix");
    return SurfaceData(std::move(gram), {detail::get_field<std::vector<std::int64_t>>(j, "K")},
                       {detail::get_field<std::vector<std::int64_t>>(j, "H")},
                       detail::get_field<std::int64_t>(j, "chi_O"), j.value("name", std::string{}));
}

inline json system_to_json(const SystemType& t) {
    return {{"n", t.n}, {"c1", t.c1.coords}, {"c2", t.c2}, {"k", t.k}};
}

inline SystemType system_from_json(const json& j) {
    if (!j.is_object()) throw ConfigError("system must be an object");
    return {detail::get_field<std::int64_t>(j, "n"), {detail::get_field<std::vector<std::int64_t>>(j, "c1")},
            detail::get_field<std::int64_t>(j, "c2"), detail::get_field<std::int64_t>(j, "k")};
}

inline json window_to_json(const WallSearchWindow& w) {
    return {{"s_min", w.s_min}, {"s_max", w.s_max}, {"chi_min", w.chi_min},
            {"chi_max", w.chi_max}, {"n_max", w.n_max}, {"k_max", w.k_max}};
}

/// Missing fields fall back to `defaults`.
inline WallSearchWindow window_from_json(const json& j, const WallSearchWindow& defaults) {
    if (!j.is_object()) throw ConfigError("window must be an object");
    auto field = [&](const char* key, std::int64_t fallback) {
        return j.contains(key) ? detail::get_field<std::int64_t>(j, key) : fallback;
    };
    return {field("s_min", defaults.s_min), field("s_max", defaults.s_max), field("chi_min", defaults.chi_min),
            field("chi_max", defaults.chi_max), field("n_max", defaults.n_max), field("k_max", defaults.k_max)};
}

inline json candidate_to_json(const SubsystemCandidate& c) {
    return {{"n_sub", c.n_sub}, {"s_sub", c.s_sub}, {"chi_sub", rational_to_json(c.chi_sub)}, {"k_sub", c.k_sub}};
}

inline SubsystemCandidate candidate_from_json(const json& j) {
    if (j.is_array()) {
        if (j.size() != 4) throw ConfigError("candidate array must be [n_sub, s_sub, chi_sub, k_sub]");
        return {j[0].get<std::int64_t>(), j[1].get<std::int64_t>(), rational_from_json(j[2]), j[3].get<std::int64_t>()};
    }
    if (!j.contains("chi_sub")) throw ConfigError("missing field 'chi_sub'");
    return {detail::get_field<std::int64_t>(j, "n_sub"), detail::get_field<std::int64_t>(j, "s_sub"),
            rational_from_json(j.at("chi_sub")), detail::get_field<std::int64_t>(j, "k_sub")};
}

enum class Format { Text, Json };

struct JobOptions {
    Format format = Format::Text;
    bool assert_ample = false;
    bool assert_c2_large = false;
};

struct JobConfig {
    SurfaceData surface;
    SystemType system;
    std::optional<WallSearchWindow> window;
    JobOptions options;
    json extra;  // subcommand-specific sections, e.g. "check"

    WallSearchWindow effective_window() const { return window.value_or(default_window(surface, system)); }
};

/// Parses and validates a job config. Any failure, including k >= n, is a ConfigError.
inline JobConfig parse_config(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    if (!j.contains("surface")) throw ConfigError("missing 'surface'");
    if (!j.contains("system")) throw ConfigError("missing 'system'");
    SurfaceData surface = surface_from_json(j["surface"]);
    SystemType system = system_from_json(j["system"]);
    try {
        validate(surface, system);
    } catch (const PreconditionError& e) {
        throw ConfigError(std::string("invalid system: ") + e.what());
    }

    JobOptions opts;
    if (j.contains("options")) {
        const auto& o = j["options"];
        if (!o.is_object()) throw ConfigError("options must be an object");
        if (o.contains("format")) {
            auto f = detail::get_field<std::string>(o, "format");
            if (f == "json") opts.format = Format::Json;
            else if (f != "text") throw ConfigError("format must be 'text' or 'json'");
        }
        opts.assert_ample = o.value("assert_ample", false);
        opts.assert_c2_large = o.value("assert_c2_large", false);
    }

    std::optional<WallSearchWindow> window;
    if (j.contains("window")) {
        window = window_from_json(j["window"], default_window(surface, system));
        try {
            validate(system, *window);
        } catch (const PreconditionError& e) {
            throw ConfigError(std::string("invalid window: ") + e.what());
        }
    }
    json extra = json::object();
    if (j.contains("check")) extra["check"] = j["check"];
    return {std::move(surface), std::move(system), window, opts, std::move(extra)};
}

}  // namespace cosys
