// parse.hpp -- text grammar for ideals and complexes, canonical formatting.
//
//   ideal    := '(' monomials? ')' [ 'over' varlist ]
//   complex  := '<' monomials? '>' [ 'over' varlist ]
//   monomial := '0' | '1' | juxtaposed letters ("xyz") | '*'-separated names
//   varlist  := name (',' name)* where a name may be a range like "x1..x4"
//
// "(0)" and "()" denote the zero ideal, "(1)" the unit ideal, "<>" the void
// complex and "<1>" the complex {emptyset}.  Without an 'over' clause the
// ambient variables are taken in order of first appearance.  A bare token of
// two or more letters is read as a product of single-letter variables unless
// it matches a declared variable name exactly; names containing digits or
// underscores always stand for one variable.

#pragma once

#include <cctype>
#include <sstream>
#include <variant>

#include "core.hpp"

namespace facets {

using ParsedObject = std::variant<MonomialIdeal, SimplicialComplex>;

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i)
        if (i == s.size() || s[i] == sep) {
            parts.push_back(trim(s.substr(start, i - start)));
            start = i + 1;
        }
    return parts;
}

inline bool valid_name(std::string_view s) {
    if (s.empty())
        return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_')
        return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
            return false;
    return true;
}

inline bool all_alpha(std::string_view s) {
    for (char c : s)
        if (!std::isalpha(static_cast<unsigned char>(c)))
            return false;
    return !s.empty();
}

// "x1..x4" -> x1,x2,x3,x4
inline void expand_range(std::string_view tok, std::vector<std::string>& out) {
    std::size_t dots = tok.find("..");
    std::string_view lo = trim(tok.substr(0, dots)), hi = trim(tok.substr(dots + 2));
    auto split_num = [](std::string_view s) -> std::pair<std::string_view, long> {
        std::size_t i = s.size();
        while (i > 0 && std::isdigit(static_cast<unsigned char>(s[i - 1])))
            --i;
        if (i == s.size() || i == 0)
            throw ParseError("range endpoints need a numeric suffix: '" + std::string(s) + "'");
        return {s.substr(0, i), std::stol(std::string(s.substr(i)))};
    };
    auto [plo, nlo] = split_num(lo);
    auto [phi, nhi] = split_num(hi);
    if (plo != phi || nlo > nhi)
        throw ParseError("bad variable range '" + std::string(tok) + "'");
    for (long k = nlo; k <= nhi; ++k)
        out.push_back(std::string(plo) + std::to_string(k));
}

// One monomial token as a list of variable names.  `declared` is empty when
// no 'over' clause is present.
inline std::vector<std::string> monomial_names(std::string_view tok,
                                               const std::vector<std::string>& declared) {
    auto is_declared = [&](std::string_view s) {
        return std::find(declared.begin(), declared.end(), s) != declared.end();
    };
    std::vector<std::string> names;
    if (tok.find('*') != std::string_view::npos) {
        for (std::string_view part : split(tok, '*')) {
            if (!valid_name(part))
                throw ParseError("bad variable name '" + std::string(part) + "'");
            names.emplace_back(part);
        }
        return names;
    }
    if (is_declared(tok) || !all_alpha(tok) || tok.size() == 1) {
        if (!valid_name(tok))
            throw ParseError("bad monomial '" + std::string(tok) + "'");
        names.emplace_back(tok);
        return names;
    }
    for (char c : tok)  // juxtaposed single-letter variables
        names.emplace_back(1, c);
    return names;
}

inline Monomial to_monomial(const std::vector<std::string>& names, const VariableSet& vars) {
    Monomial m;
    for (const std::string& n : names) {
        auto idx = vars.index_of(n);
        if (!idx)
            throw ParseError("variable '" + n + "' is not in the ambient set");
        if (m.contains_var(*idx))
            throw ParseError("not square-free: variable '" + n + "' repeats");
        m = m | Monomial::single(*idx);
    }
    return m;
}

}  // namespace detail

inline ParsedObject parse_object(std::string_view text) {
    using namespace detail;
    std::string_view s = trim(text);
    if (s.empty())
        throw ParseError("empty input");

    char open = s.front();
    if (open != '(' && open != '<')
        throw ParseError("expected '(' or '<' at the start of the input");
    char close = open == '(' ? ')' : '>';
    std::size_t end = s.find(close);
    if (end == std::string_view::npos)
        throw ParseError(std::string("missing '") + close + "'");
    std::string_view body = trim(s.substr(1, end - 1));
    std::string_view rest = trim(s.substr(end + 1));

    std::vector<std::string> declared;
    if (!rest.empty()) {
        if (rest.substr(0, 4) != "over")
            throw ParseError("unexpected trailing text '" + std::string(rest) + "'");
        for (std::string_view tok : split(rest.substr(4), ',')) {
            if (tok.find("..") != std::string_view::npos)
                expand_range(tok, declared);
            else if (valid_name(tok))
                declared.emplace_back(tok);
            else
                throw ParseError("bad variable name '" + std::string(tok) + "'");
        }
    }

    std::vector<std::vector<std::string>> name_lists;
    bool zero_marker = false;
    if (!body.empty()) {
        std::vector<std::string_view> toks = split(body, ',');
        for (std::string_view tok : toks) {
            if (tok == "0") {
                if (open != '(' || toks.size() != 1)
                    throw ParseError("'0' denotes the zero ideal and must stand alone");
                zero_marker = true;
                break;
            }
            if (tok == "1") {
                name_lists.emplace_back();  // the empty monomial
                continue;
            }
            name_lists.push_back(monomial_names(tok, declared));
        }
    }

    std::vector<std::string> names = declared;
    if (names.empty()) {
        for (const auto& list : name_lists)
            for (const std::string& n : list)
                if (std::find(names.begin(), names.end(), n) == names.end())
                    names.push_back(n);
        if (names.empty())
            throw ParseError(zero_marker || body.empty()
                                 ? "an empty generator or facet list needs an 'over' clause"
                                 : "no variables found");
    }
    VariableSet vars(std::move(names));

    std::vector<Monomial> ms;
    for (const auto& list : name_lists)
        ms.push_back(detail::to_monomial(list, vars));

    if (open == '(')
        return MonomialIdeal(std::move(vars), std::move(ms));
    return SimplicialComplex(std::move(vars), std::move(ms));
}

// coerce either way through the facet dictionary
inline MonomialIdeal as_ideal(const ParsedObject& obj) {
    if (std::holds_alternative<MonomialIdeal>(obj))
        return std::get<MonomialIdeal>(obj);
    return facet_ideal(std::get<SimplicialComplex>(obj));
}

inline SimplicialComplex as_complex(const ParsedObject& obj) {
    if (std::holds_alternative<SimplicialComplex>(obj))
        return std::get<SimplicialComplex>(obj);
    return facet_complex(std::get<MonomialIdeal>(obj));
}

// ---------------------------------------------------------------------------
// formatting

inline std::string format_monomial(Monomial m, const VariableSet& vars) {
    if (m.is_one())
        return "1";
    bool short_names = true;
    for (const std::string& n : vars.names())
        short_names = short_names && n.size() == 1;
    std::string out;
    for (int i : m.indices()) {
        if (!out.empty() && !short_names)
            out += '*';
        out += vars.name(i);
    }
    return out;
}

inline std::string format_monomial_list(const std::vector<Monomial>& ms,
                                        const VariableSet& vars) {
    std::string out;
    for (Monomial m : ms) {
        if (!out.empty())
            out += ", ";
        out += format_monomial(m, vars);
    }
    return out;
}

namespace detail {
inline std::string over_clause(const VariableSet& vars) {
    std::string out = " over ";
    for (int i = 0; i < vars.size(); ++i) {
        if (i)
            out += ',';
        out += vars.name(i);
    }
    return out;
}
}  // namespace detail

inline std::string format(const MonomialIdeal& ideal) {
    std::string body = ideal.is_zero() ? "0" : format_monomial_list(ideal.generators(), ideal.ambient());
    return "(" + body + ")" + detail::over_clause(ideal.ambient());
}

inline std::string format(const SimplicialComplex& dx) {
    return "<" + format_monomial_list(dx.facets(), dx.ambient()) + ">" +
           detail::over_clause(dx.ambient());
}

}  // namespace facets
