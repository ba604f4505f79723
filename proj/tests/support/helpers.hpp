#pragma once

#include <string>

#include <facets/facets.hpp>

namespace facets::testing {

inline MonomialIdeal ideal(const std::string& text) { return as_ideal(parse_object(text)); }

inline SimplicialComplex complex(const std::string& text) {
    return as_complex(parse_object(text));
}

// monomial from variable names, for assembling expected values
inline Monomial mono(const VariableSet& vars, const std::vector<std::string>& names) {
    Monomial m;
    for (const std::string& name : names) {
        auto idx = vars.index_of(name);
        if (!idx)
            throw std::logic_error("test fixture names unknown variable " + name);
        m = m | Monomial::single(*idx);
    }
    return m;
}

}  // namespace facets::testing
