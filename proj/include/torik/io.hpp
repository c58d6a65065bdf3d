#pragma once

#include <fstream>

#include <json.hpp>

#include "torik/euler.hpp"

namespace torik {
namespace io {

using nlohmann::json;

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open file: " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw input_error(path + ": " + e.what());
    }
}

namespace detail {

inline const json& member(const json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key))
        throw input_error(where + ": missing field '" + key + "'");
    return j.at(key);
}

inline Coord as_int(const json& j, const std::string& where) {
    if (!j.is_number_integer())
        throw input_error(where + ": expected an integer, got " + j.dump());
    return j.get<Coord>();
}

inline CharVec as_vec(const json& j, const std::string& where) {
    if (!j.is_array()) throw input_error(where + ": expected an integer vector, got " + j.dump());
    CharVec v;
    v.reserve(j.size());
    for (const json& e : j) v.push_back(as_int(e, where));
    return v;
}

}  // namespace detail

// Fan file: {rank: int, rays: [[int]], max_cones: [[int]]}
inline FanData parse_fan(const json& j) {
    FanData d;
    const Coord rank = detail::as_int(detail::member(j, "rank", "fan"), "fan.rank");
    if (rank < 1) throw input_error("fan.rank: must be at least 1");
    d.rank = static_cast<std::size_t>(rank);
    const json& rays = detail::member(j, "rays", "fan");
    if (!rays.is_array()) throw input_error("fan.rays: expected an array");
    for (std::size_t i = 0; i < rays.size(); ++i)
        d.rays.push_back(detail::as_vec(rays[i], "fan.rays[" + std::to_string(i) + "]"));
    const json& cones = detail::member(j, "max_cones", "fan");
    if (!cones.is_array()) throw input_error("fan.max_cones: expected an array");
    for (std::size_t i = 0; i < cones.size(); ++i) {
        const std::string where = "fan.max_cones[" + std::to_string(i) + "]";
        if (!cones[i].is_array()) throw input_error(where + ": expected an index list");
        std::vector<int> idx;
        for (const json& e : cones[i]) idx.push_back(static_cast<int>(detail::as_int(e, where)));
        d.max_cones.push_back(std::move(idx));
    }
    return d;
}

inline json fan_to_json(const FanData& d) {
    json rays = json::array();
    for (const CharVec& r : d.rays) rays.push_back(r);
    json cones = json::array();
    for (const auto& c : d.max_cones) cones.push_back(c);
    return json{{"rank", d.rank}, {"rays", rays}, {"max_cones", cones}};
}

// Divisor file: {coeffs: [int]}, aligned with the fan's ray order.
inline TCartierDivisor parse_divisor(const json& j, const Fan& fan) {
    TCartierDivisor d;
    const json& coeffs = detail::member(j, "coeffs", "divisor");
    if (!coeffs.is_array()) throw input_error("divisor.coeffs: expected an array");
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        d.coefficients.push_back(detail::as_int(coeffs[i], "divisor.coeffs[" + std::to_string(i) + "]"));
    if (d.coefficients.size() != fan.rays().size())
        throw input_error("divisor.coeffs: expected one coefficient per ray (" +
                          std::to_string(fan.rays().size()) + "), got " +
                          std::to_string(d.coefficients.size()));
    return d;
}

inline json divisor_to_json(const TCartierDivisor& d) {
    return json{{"coeffs", d.coefficients}};
}

inline LaurentPolynomial parse_terms(const json& j, std::size_t rank, const std::string& where) {
    if (!j.is_array()) throw input_error(where + ": expected a term list");
    std::vector<std::pair<Int, CharVec>> terms;
    for (std::size_t k = 0; k < j.size(); ++k) {
        const std::string tw = where + "[" + std::to_string(k) + "]";
        const Coord c = detail::as_int(detail::member(j[k], "c", tw), tw + ".c");
        CharVec m = detail::as_vec(detail::member(j[k], "m", tw), tw + ".m");
        if (m.size() != rank) throw input_error(tw + ".m: expected rank " + std::to_string(rank));
        terms.emplace_back(Int(c), std::move(m));
    }
    return LaurentPolynomial::from_terms(rank, terms);
}

// PExp file: {cones: [{cone: int, terms: [{c: int, m: [int]}]}]}, covering
// every maximal cone of the fan exactly once.
inline std::vector<LaurentPolynomial> parse_pexp(const json& j, const Fan& fan) {
    const json& cones = detail::member(j, "cones", "pexp");
    if (!cones.is_array()) throw input_error("pexp.cones: expected an array");
    std::vector<LaurentPolynomial> values(fan.cone_count(), LaurentPolynomial(fan.rank()));
    std::vector<bool> seen(fan.cone_count(), false);
    for (std::size_t i = 0; i < cones.size(); ++i) {
        const std::string where = "pexp.cones[" + std::to_string(i) + "]";
        const Coord cone = detail::as_int(detail::member(cones[i], "cone", where), where + ".cone");
        if (cone < 0 || static_cast<std::size_t>(cone) >= fan.cone_count())
            throw input_error(where + ".cone: index " + std::to_string(cone) + " out of range");
        if (seen[cone]) throw input_error(where + ".cone: duplicate entry for cone " +
                                          std::to_string(cone));
        seen[cone] = true;
        values[cone] = parse_terms(detail::member(cones[i], "terms", where), fan.rank(),
                                   where + ".terms");
    }
    for (std::size_t i = 0; i < seen.size(); ++i)
        if (!seen[i]) throw input_error("pexp.cones: missing entry for cone " + std::to_string(i));
    return values;
}

inline json laurent_to_json(const LaurentPolynomial& f) {
    json terms = json::array();
    for (const auto& [m, c] : f.terms()) {
        json t{{"m", m}};
        if (c >= std::numeric_limits<Coord>::min() && c <= std::numeric_limits<Coord>::max())
            t["c"] = static_cast<Coord>(c);
        else
            t["c"] = c.str();
        terms.push_back(std::move(t));
    }
    return json{{"terms", terms}};
}

inline json pexp_to_json(const std::vector<LaurentPolynomial>& values) {
    json cones = json::array();
    for (std::size_t i = 0; i < values.size(); ++i)
        cones.push_back(json{{"cone", i}, {"terms", laurent_to_json(values[i]).at("terms")}});
    return json{{"cones", cones}};
}

// Bundle-data file: {rank: int, cones: [{cone: int, weights: [[int]]}]}
inline FixedPointBundleData parse_bundle(const json& j, const Fan& fan) {
    FixedPointBundleData d;
    const Coord r = detail::as_int(detail::member(j, "rank", "bundle"), "bundle.rank");
    if (r < 0) throw input_error("bundle.rank: must be nonnegative");
    d.bundle_rank = static_cast<std::size_t>(r);
    const json& cones = detail::member(j, "cones", "bundle");
    if (!cones.is_array()) throw input_error("bundle.cones: expected an array");
    d.weights.assign(fan.cone_count(), {});
    std::vector<bool> seen(fan.cone_count(), false);
    for (std::size_t i = 0; i < cones.size(); ++i) {
        const std::string where = "bundle.cones[" + std::to_string(i) + "]";
        const Coord cone = detail::as_int(detail::member(cones[i], "cone", where), where + ".cone");
        if (cone < 0 || static_cast<std::size_t>(cone) >= fan.cone_count())
            throw input_error(where + ".cone: index out of range");
        if (seen[cone]) throw input_error(where + ".cone: duplicate entry");
        seen[cone] = true;
        const json& ws = detail::member(cones[i], "weights", where);
        if (!ws.is_array()) throw input_error(where + ".weights: expected an array of vectors");
        for (std::size_t k = 0; k < ws.size(); ++k) {
            CharVec w = detail::as_vec(ws[k], where + ".weights[" + std::to_string(k) + "]");
            if (w.size() != fan.rank())
                throw input_error(where + ".weights: expected rank " + std::to_string(fan.rank()));
            d.weights[cone].push_back(std::move(w));
        }
    }
    for (std::size_t i = 0; i < seen.size(); ++i)
        if (!seen[i]) throw input_error("bundle.cones: missing entry for cone " + std::to_string(i));
    d.validate(fan);
    return d;
}

inline json bundle_to_json(const FixedPointBundleData& d) {
    json cones = json::array();
    for (std::size_t i = 0; i < d.weights.size(); ++i) {
        json ws = json::array();
        for (const CharVec& w : d.weights[i]) ws.push_back(w);
        cones.push_back(json{{"cone", i}, {"weights", ws}});
    }
    return json{{"rank", d.bundle_rank}, {"cones", cones}};
}

inline json localized_to_json(const LocalizedElement& x) {
    json den = json::array();
    for (const CharVec& l : x.denominator_factors()) den.push_back(l);
    return json{{"num", laurent_to_json(x.numerator())}, {"den_factors", den}};
}

inline json series_to_json(const GradedSeries& s) {
    json degrees = json::array();
    for (std::size_t d = 0; d <= s.order(); ++d) {
        json terms = json::array();
        for (const auto& [e, c] : s.component(d))
            terms.push_back(json{{"m", e}, {"c", format_rat(c)}});
        degrees.push_back(json{{"deg", d}, {"terms", terms}});
    }
    return json{{"order", s.order()}, {"components", degrees}};
}

inline json chow_to_json(const ChowFraction& f) {
    json num = json::array();
    for (const auto& [e, c] : f.numerator())
        num.push_back(json{{"m", e}, {"c", format_rat(c)}});
    json den = json::array();
    for (const CharVec& l : f.denominator_factors()) den.push_back(l);
    return json{{"num", num}, {"num_degree", f.numerator_degree()}, {"den_linear", den}};
}

inline json points_to_json(const std::vector<CharVec>& pts) {
    json out = json::array();
    for (const CharVec& p : pts) out.push_back(p);
    return out;
}

}  // namespace io
}  // namespace torik
