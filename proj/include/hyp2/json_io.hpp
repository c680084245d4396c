#pragma once

// JSON document formats for the CLI: curve documents
//   { "field": "2^k[/0x..]", "m": m, "A": ["0x..", ...], "B": ["0x..", ...] }
// and group elements
//   { "alpha": ["0x..", ...], "beta": "0x..", "sigma": ["0x..", x4] }.
// Parse failures carry the offending JSON path or byte position.

#include <string>

#include <json.hpp>

#include "hyp2/moduli.hpp"

namespace hyp2 {

inline nlohmann::json json_from_text(const std::string& text) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

namespace detail {

inline const nlohmann::json& json_field(const nlohmann::json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw ParseError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

inline std::vector<Elem> hex_array(const nlohmann::json& arr, const FieldCtx& F,
                                   const char* key, std::size_t want) {
    if (!arr.is_array() || arr.size() != want)
        throw ParseError(std::string("\"") + key + "\" must be an array of " + std::to_string(want)
                         + " hex strings");
    std::vector<Elem> out;
    out.reserve(want);
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (!arr[i].is_string())
            throw ParseError(std::string("\"") + key + "[" + std::to_string(i) + "]\" must be a hex string");
        try {
            out.push_back(elem_from_hex(F, arr[i].get<std::string>()));
        } catch (const ParseError& e) {
            throw ParseError(std::string("\"") + key + "[" + std::to_string(i) + "]\": " + e.what());
        }
    }
    return out;
}

} // namespace detail

inline CurvePair curve_from_json(const nlohmann::json& j) {
    const auto& fspec = detail::json_field(j, "field");
    if (!fspec.is_string()) throw ParseError("\"field\" must be a spec string like \"2^4\"");
    const FieldCtx& F = FieldCtx::parse_spec(fspec.get<std::string>());
    const auto& jm = detail::json_field(j, "m");
    if (!jm.is_number_integer() || jm.get<int>() < 1)
        throw ParseError("\"m\" must be a positive integer");
    const int m = jm.get<int>();
    std::vector<Elem> a = detail::hex_array(detail::json_field(j, "A"), F, "A",
                                            static_cast<std::size_t>(m) + 1);
    std::vector<Elem> b = detail::hex_array(detail::json_field(j, "B"), F, "B",
                                            static_cast<std::size_t>(2 * m) + 1);
    return CurvePair(F, m, BinaryForm(F, std::move(a)), BinaryForm(F, std::move(b)));
}

inline CurvePair curve_from_text(const std::string& text) {
    return curve_from_json(json_from_text(text));
}

inline nlohmann::json form_to_json(const BinaryForm& F) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Elem& e : F.coeffs()) arr.push_back(to_hex(e));
    return arr;
}

inline nlohmann::json curve_to_json(const CurvePair& C) {
    return nlohmann::json{{"field", C.field().spec_string()},
                          {"m", C.m()},
                          {"A", form_to_json(C.A())},
                          {"B", form_to_json(C.B())}};
}

// Group element over the field of the curve it will act on.
inline GroupElem group_from_json(const nlohmann::json& j, const FieldCtx& F, int m) {
    std::vector<Elem> ac = detail::hex_array(detail::json_field(j, "alpha"), F, "alpha",
                                             static_cast<std::size_t>(m) + 1);
    const auto& jb = detail::json_field(j, "beta");
    if (!jb.is_string()) throw ParseError("\"beta\" must be a hex string");
    Elem beta = elem_from_hex(F, jb.get<std::string>());
    if (beta.is_zero()) throw ParseError("\"beta\" must be nonzero");
    std::vector<Elem> sc = detail::hex_array(detail::json_field(j, "sigma"), F, "sigma", 4);
    try {
        GL2 sigma(sc[0], sc[1], sc[2], sc[3]);
        return GroupElem{BinaryForm(F, std::move(ac)), beta, sigma};
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("\"sigma\": ") + e.what());
    }
}

inline nlohmann::json group_to_json(const GroupElem& g) {
    return nlohmann::json{{"alpha", form_to_json(g.alpha)},
                          {"beta", to_hex(g.beta)},
                          {"sigma", nlohmann::json::array({to_hex(g.sigma.p), to_hex(g.sigma.q),
                                                           to_hex(g.sigma.r), to_hex(g.sigma.s)})}};
}

} // namespace hyp2
