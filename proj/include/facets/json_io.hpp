// json_io.hpp -- JSON input form and certificate serialization.
//
// Input objects may be given as JSON instead of the text grammar:
//   {"vars": ["x","y","z"], "gens":   [[0,1],[2]]}   an ideal
//   {"vars": ["x","y","z"], "facets": [[0,1],[2]]}   a complex
// Indices are 0-based positions in "vars".  parse_any dispatches on the
// first non-space character: '{' means JSON, anything else is the grammar.

#pragma once

#include <json.hpp>

#include "covers.hpp"
#include "linquo.hpp"
#include "parse.hpp"

namespace facets {

using json = nlohmann::json;

namespace detail {

inline Monomial monomial_from_indices(const json& arr, int n_vars) {
    if (!arr.is_array())
        throw ParseError("JSON generator must be an array of variable indices");
    Monomial m = Monomial::one();
    for (const json& e : arr) {
        if (!e.is_number_integer())
            throw ParseError("JSON variable index must be an integer");
        long long v = e.get<long long>();
        if (v < 0 || v >= n_vars)
            throw ParseError("JSON variable index out of range: " + std::to_string(v));
        if (m.contains_var(static_cast<int>(v)))
            throw ParseError("JSON monomial is not square-free");
        m = m | Monomial::single(static_cast<int>(v));
    }
    return m;
}

}  // namespace detail

inline ParsedObject parse_json_object(const json& j) {
    if (!j.is_object())
        throw ParseError("JSON input must be an object");
    if (!j.contains("vars") || !j["vars"].is_array())
        throw ParseError("JSON input needs a \"vars\" array");
    std::vector<std::string> names;
    for (const json& e : j["vars"]) {
        if (!e.is_string())
            throw ParseError("JSON variable names must be strings");
        names.push_back(e.get<std::string>());
    }
    VariableSet vars(names);

    bool has_gens = j.contains("gens");
    bool has_facets = j.contains("facets");
    if (has_gens == has_facets)
        throw ParseError("JSON input needs exactly one of \"gens\" or \"facets\"");
    const json& lists = has_gens ? j["gens"] : j["facets"];
    if (!lists.is_array())
        throw ParseError("JSON \"gens\"/\"facets\" must be an array");
    std::vector<Monomial> monomials;
    for (const json& arr : lists)
        monomials.push_back(detail::monomial_from_indices(arr, vars.size()));
    if (has_gens)
        return MonomialIdeal(vars, std::move(monomials));
    return SimplicialComplex(vars, std::move(monomials));
}

inline ParsedObject parse_any(const std::string& text) {
    std::size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
        ++i;
    if (i < text.size() && text[i] == '{') {
        json j;
        try {
            j = json::parse(text);
        } catch (const json::exception& e) {
            throw ParseError(std::string("JSON parse error: ") + e.what());
        }
        return parse_json_object(j);
    }
    return parse_object(text);
}

// ---------------------------------------------------------------------------
// serialization

inline json vars_to_json(const VariableSet& vars) {
    json arr = json::array();
    for (int i = 0; i < vars.size(); ++i)
        arr.push_back(vars.name(i));
    return arr;
}

// a monomial as the list of its variable names, ascending by index
inline json monomial_names(const VariableSet& vars, Monomial m) {
    json arr = json::array();
    for (int i : m.indices())
        arr.push_back(vars.name(i));
    return arr;
}

inline json monomial_list_strings(const VariableSet& vars, const std::vector<Monomial>& ms) {
    json arr = json::array();
    for (Monomial m : ms)
        arr.push_back(format_monomial(m, vars));
    return arr;
}

inline json support_indices(Monomial m) {
    json arr = json::array();
    for (int i : m.indices())
        arr.push_back(i);
    return arr;
}

inline json to_json(const MonomialIdeal& ideal) {
    json lists = json::array();
    for (Monomial g : ideal.generators())
        lists.push_back(support_indices(g));
    return {{"vars", vars_to_json(ideal.ambient())}, {"gens", lists}};
}

inline json to_json(const SimplicialComplex& dx) {
    json lists = json::array();
    for (Monomial f : dx.facets())
        lists.push_back(support_indices(f));
    return {{"vars", vars_to_json(dx.ambient())}, {"facets", lists}};
}

// minimal covers as sorted variable-name lists
inline json covers_to_json(const VariableSet& vars, const std::vector<Monomial>& covers) {
    json arr = json::array();
    for (Monomial c : covers)
        arr.push_back(monomial_names(vars, c));
    return arr;
}

inline json to_json(const VariableSet& vars, const QuotientOrderCertificate& cert) {
    json cv = json::array();
    for (Monomial m : cert.colon_vars)
        cv.push_back(monomial_names(vars, m));
    return {{"order", monomial_list_strings(vars, cert.order)}, {"colon_vars", cv}};
}

inline json to_json(const VariableSet& vars, const ShellingCertificate& cert) {
    return {{"shelling", monomial_list_strings(vars, cert.facet_order)}};
}

// Betti table as {"i,j": value}
inline json to_json(const BettiTable& table) {
    json obj = json::object();
    for (const auto& [ij, v] : table.entries)
        obj[std::to_string(ij.first) + "," + std::to_string(ij.second)] = v;
    return obj;
}

}  // namespace facets
