// report.hpp -- one function per CLI command, each producing a Report with a
// JSON payload and a human rendering.  The CLI is a thin shell over these so
// tests can drive the exact functions the tool ships.
//
// With oracle checks enabled every verdict is recomputed along an
// independent route (subset scans, Taylor complex, certificate replay) and
// the comparison lands in the payload; disagreement never changes the
// verdict, it is reported as data.

#pragma once

#include <chrono>
#include <sstream>

#include "cm.hpp"
#include "json_io.hpp"
#include "trees.hpp"

namespace facets {

struct Report {
    std::string command;
    std::string input;  // canonical echo
    std::optional<FieldSpec> field;
    json result;
    json oracle;  // null unless oracle checks ran
    std::string text;
    double elapsed_ms = 0;

    json envelope() const {
        json j{{"schema", "facets/1"},
               {"command", command},
               {"input", input},
               {"field", field ? json(field->flag()) : json(nullptr)},
               {"result", result},
               {"elapsed_ms", elapsed_ms}};
        if (!oracle.is_null())
            j["oracle"] = oracle;
        return j;
    }
};

namespace detail {

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        auto d = std::chrono::steady_clock::now() - start_;
        return std::chrono::duration<double, std::milli>(d).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

inline std::string yesno(bool b) { return b ? "yes" : "no"; }

inline std::string braces(Monomial m, const VariableSet& vars) {
    std::string s = "{";
    bool first = true;
    for (int i : m.indices()) {
        if (!first)
            s += ",";
        s += vars.name(i);
        first = false;
    }
    return s + "}";
}

// replay a leaf order: each facet must be a leaf of the not-yet-removed rest
inline bool leaf_order_replays(const SimplicialComplex& dx,
                               const std::vector<Monomial>& order) {
    std::vector<Monomial> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != dx.facets())
        return false;
    SimplicialComplex rest = dx;
    for (Monomial f : order) {
        if (!is_leaf(rest, f).leaf)
            return false;
        if (rest.facet_count() == 1)
            break;
        rest = remove_facet(rest, f);
    }
    return true;
}

// replay a leafless witness: a nonempty subcollection in which no facet is a leaf
inline bool leafless_replays(const SimplicialComplex& dx,
                             const std::vector<Monomial>& witness) {
    if (witness.empty())
        return false;
    for (Monomial f : witness)
        if (!dx.has_facet(f))
            return false;
    SimplicialComplex sub(dx.ambient(), witness);
    if (sub.facet_count() != static_cast<int>(witness.size()))
        return false;
    for (Monomial f : witness)
        if (is_leaf(sub, f).leaf)
            return false;
    return true;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// covers

inline Report cmd_covers(const SimplicialComplex& dx, bool oracle = false) {
    detail::Stopwatch clock;
    Report r;
    r.command = "covers";
    r.input = format(dx);

    std::vector<Monomial> covers = minimal_covers(dx);
    CoverComplex mm = cover_complex(dx);
    bool unmixed = is_unmixed(dx);

    r.result = {{"covers", covers_to_json(dx.ambient(), covers)},
                {"covering_number", mm.covering_number < 0 ? json(nullptr) : json(mm.covering_number)},
                {"unmixed", unmixed},
                {"cover_complex", format(mm.complex)}};

    std::ostringstream out;
    out << "input: " << r.input << "\n";
    out << "minimal covers:";
    for (Monomial c : covers)
        out << " " << detail::braces(c, dx.ambient());
    if (covers.empty())
        out << " (none)";
    out << "\n";
    out << "covering number: ";
    if (mm.covering_number < 0)
        out << "undefined";
    else
        out << mm.covering_number;
    out << "\n";
    out << "unmixed: " << detail::yesno(unmixed) << "\n";
    out << "cover complex: " << format(mm.complex) << "\n";

    if (oracle) {
        bool agrees = minimal_covers_bruteforce(dx) == covers;
        r.oracle = {{"bruteforce_agrees", agrees}};
        out << "oracle subset scan agrees: " << detail::yesno(agrees) << "\n";
    }
    r.text = out.str();
    r.elapsed_ms = clock.ms();
    return r;
}

// ---------------------------------------------------------------------------
// dual: the whole duality diagram in one report

inline Report cmd_dual(const MonomialIdeal& ideal, bool oracle = false) {
    detail::Stopwatch clock;
    Report r;
    r.command = "dual";
    r.input = format(ideal);

    SimplicialComplex fc = facet_complex(ideal);
    CoverComplex mm = cover_complex(fc);
    MonomialIdeal dual = dual_ideal(ideal);
    NonfaceComplexView nf = nonface_complex(ideal);
    SimplicialComplex ad = complement_complex(fc);  // Alexander dual of the nonface complex

    r.result = {{"ideal", format(ideal)},
                {"facet_complex", format(fc)},
                {"cover_complex", format(mm.complex)},
                {"covering_number", mm.covering_number < 0 ? json(nullptr) : json(mm.covering_number)},
                {"dual_ideal", format(dual)},
                {"nonface_complex", format(nf.as_complex())},
                {"alexander_dual", format(ad)}};

    std::ostringstream out;
    out << "ideal:           " << format(ideal) << "\n";
    out << "facet complex:   " << format(fc) << "\n";
    out << "cover complex:   " << format(mm.complex) << "\n";
    out << "dual ideal:      " << format(dual) << "\n";
    out << "nonface complex: " << format(nf.as_complex()) << "\n";
    out << "alexander dual:  " << format(ad) << "\n";

    if (oracle) {
        bool nf_ok = nonface_facets_bruteforce(ideal) == nf.as_complex().facets();
        bool ad_ok = alexander_dual_bruteforce(nf) == ad.facets();
        bool dual_inv = dual_ideal(dual) == ideal;
        bool cover_inv = ideal.is_zero() || ideal.is_unit() ||
                         cover_complex(mm.complex).complex == fc;
        r.oracle = {{"nonface_bruteforce_agrees", nf_ok},
                    {"alexander_bruteforce_agrees", ad_ok},
                    {"dual_involution", dual_inv},
                    {"cover_involution", cover_inv}};
        out << "oracle: nonface scan " << detail::yesno(nf_ok) << ", alexander scan "
            << detail::yesno(ad_ok) << ", involutions " << detail::yesno(dual_inv && cover_inv)
            << "\n";
    }
    r.text = out.str();
    r.elapsed_ms = clock.ms();
    return r;
}

// ---------------------------------------------------------------------------
// tree

inline Report cmd_tree(const SimplicialComplex& dx, int max_facets = 15, bool oracle = false) {
    detail::Stopwatch clock;
    if (dx.facet_count() > max_facets)
        throw PreconditionError("forest checking is exponential in the facet count; " +
                                std::to_string(dx.facet_count()) + " facets exceeds the limit of " +
                                std::to_string(max_facets) + " (raise --max-facets to override)");
    Report r;
    r.command = "tree";
    r.input = format(dx);

    json leaves = json::array();
    std::ostringstream out;
    out << "input: " << r.input << "\n";
    out << "leaf table:\n";
    for (Monomial f : dx.facets()) {
        LeafCheck lc = is_leaf(dx, f);
        Monomial fv = free_vertices(dx, f);
        leaves.push_back(
            {{"facet", format_monomial(f, dx.ambient())},
             {"leaf", lc.leaf},
             {"joint", lc.joint ? json(format_monomial(*lc.joint, dx.ambient())) : json(nullptr)},
             {"free_vertices", monomial_names(dx.ambient(), fv)}});
        out << "  " << format_monomial(f, dx.ambient()) << ": ";
        if (lc.leaf && lc.joint)
            out << "leaf (joint " << format_monomial(*lc.joint, dx.ambient()) << ")";
        else if (lc.leaf)
            out << "leaf";
        else
            out << "not a leaf";
        out << ", free vertices " << detail::braces(fv, dx.ambient()) << "\n";
    }

    ForestVerdict fv = is_forest(dx);
    bool connected = !dx.is_void() && is_connected(dx);
    bool tree = is_tree(dx);

    r.result = {{"leaves", leaves},
                {"forest", fv.forest},
                {"leaf_order", fv.forest ? monomial_list_strings(dx.ambient(), fv.leaf_order)
                                         : json(nullptr)},
                {"leafless_witness", fv.forest ? json(nullptr)
                                               : monomial_list_strings(dx.ambient(), fv.leafless)},
                {"connected", connected},
                {"tree", tree}};

    out << "forest: " << detail::yesno(fv.forest);
    if (fv.forest) {
        out << ", leaf order: " << format_monomial_list(fv.leaf_order, dx.ambient());
    } else {
        out << ", leafless subcollection: <"
            << format_monomial_list(fv.leafless, dx.ambient()) << ">";
    }
    out << "\n";
    out << "connected: " << detail::yesno(connected) << "\n";
    out << "tree: " << detail::yesno(tree) << "\n";

    if (oracle) {
        bool replay = fv.forest ? detail::leaf_order_replays(dx, fv.leaf_order)
                                : detail::leafless_replays(dx, fv.leafless);
        r.oracle = {{"witness_replay", replay}};
        out << "oracle witness replay: " << detail::yesno(replay) << "\n";
    }
    r.text = out.str();
    r.elapsed_ms = clock.ms();
    return r;
}

// ---------------------------------------------------------------------------
// cm

inline Report cmd_cm(const MonomialIdeal& ideal, const FieldSpec& field, bool oracle = false) {
    detail::Stopwatch clock;
    Report r;
    r.command = "cm";
    r.input = format(ideal);
    r.field = field;

    bool cm = is_cohen_macaulay(ideal, field);
    int dim = krull_dimension(ideal);
    NonfaceComplexView nf(ideal);
    bool unmixed = ideal.is_zero() || is_unmixed(facet_complex(ideal));

    r.result = {{"cohen_macaulay", cm},
                {"krull_dimension", dim},
                {"unmixed", unmixed},
                {"nonface_complex", format(nf.as_complex())}};

    std::ostringstream out;
    out << "input: " << r.input << "\n";
    out << "field: " << field.label() << "\n";
    out << "krull dimension: " << dim << "\n";
    out << "nonface complex: " << format(nf.as_complex()) << "\n";
    out << "unmixed: " << detail::yesno(unmixed) << "\n";
    out << "cohen-macaulay: " << detail::yesno(cm) << "\n";

    if (oracle) {
        bool agrees = eagon_reiner_check(ideal, field) == cm;
        r.oracle = {{"eagon_reiner_agrees", agrees}};
        out << "oracle dual linear resolution agrees: " << detail::yesno(agrees) << "\n";
    }
    r.text = out.str();
    r.elapsed_ms = clock.ms();
    return r;
}

// ---------------------------------------------------------------------------
// scm

inline Report cmd_scm(const MonomialIdeal& ideal, const FieldSpec& field, bool oracle = false) {
    detail::Stopwatch clock;
    Report r;
    r.command = "scm";
    r.input = format(ideal);
    r.field = field;

    SequentialCmReport scm = is_sequentially_cm(ideal, field);

    json skeleta = json::array();
    std::ostringstream out;
    out << "input: " << r.input << "\n";
    out << "field: " << field.label() << "\n";
    for (const SkeletonReport& s : scm.skeleta) {
        skeleta.push_back({{"dimension", s.dim},
                           {"ideal", format(s.ideal)},
                           {"cohen_macaulay", s.cohen_macaulay}});
        out << "skeleton " << s.dim << ": " << format(s.ideal) << " cohen-macaulay "
            << detail::yesno(s.cohen_macaulay) << "\n";
    }
    r.result = {{"sequentially_cohen_macaulay", scm.sequentially_cm}, {"skeleta", skeleta}};
    out << "sequentially cohen-macaulay: " << detail::yesno(scm.sequentially_cm) << "\n";

    if (oracle) {
        // independent route: dual is componentwise linear
        bool dual_cw = componentwise_linear_via_quotients(dual_ideal(ideal), field)
                           .componentwise_linear;
        bool agrees = dual_cw == scm.sequentially_cm;
        r.oracle = {{"dual_componentwise_linear_agrees", agrees}};
        out << "oracle dual componentwise linearity agrees: " << detail::yesno(agrees) << "\n";
    }
    r.text = out.str();
    r.elapsed_ms = clock.ms();
    return r;
}

// ---------------------------------------------------------------------------
// linquo

inline Report cmd_linquo(const MonomialIdeal& ideal, const FieldSpec& field,
                         std::optional<int> only_component = std::nullopt, bool oracle = false) {
    detail::Stopwatch clock;
    Report r;
    r.command = "linquo";
    r.input = format(ideal);
    r.field = field;

    std::ostringstream out;
    out << "input: " << r.input << "\n";

    json payload = json::object();
    json oracle_payload = json::object();

    std::optional<QuotientOrderCertificate> whole;
    if (!only_component) {
        whole = find_linear_quotient_order(ideal);
        payload["quotient_order"] = whole ? to_json(ideal.ambient(), *whole) : json(nullptr);
        if (whole)
            out << "linear quotients: yes, order " << format_monomial_list(whole->order, ideal.ambient())
                << "\n";
        else
            out << "linear quotients: no\n";
        if (oracle)
            oracle_payload["order_replay"] =
                !whole || replay_quotient_certificate(ideal, *whole);
    }

    json comps = json::array();
    bool all_certified = true;
    bool componentwise_linear = true;
    bool any_component = false;
    json comp_oracle = json::array();
    for (int k = 1; k <= ideal.ambient().size(); ++k) {
        if (only_component && k != *only_component)
            continue;
        MonomialIdeal comp = component(ideal, k);
        if (comp.is_zero())
            continue;
        any_component = true;
        std::optional<QuotientOrderCertificate> cert = find_linear_quotient_order(comp);
        bool linear = cert ? true : has_linear_resolution(comp, field);
        all_certified = all_certified && cert.has_value();
        componentwise_linear = componentwise_linear && linear;
        comps.push_back({{"degree", k},
                         {"ideal", format(comp)},
                         {"certificate", cert ? to_json(comp.ambient(), *cert) : json(nullptr)},
                         {"linear_resolution", linear}});
        out << "component " << k << ": " << format(comp) << "\n";
        if (cert) {
            out << "  certificate order: " << format_monomial_list(cert->order, comp.ambient())
                << "\n";
        } else {
            out << "  no quotient order; linear resolution: " << detail::yesno(linear) << "\n";
        }
        if (oracle) {
            bool replay = !cert || replay_quotient_certificate(comp, *cert);
            // a certified order forces a linear resolution; check against the exact tables
            bool betti_ok = !cert || has_linear_resolution(comp, field);
            comp_oracle.push_back(
                {{"degree", k}, {"certificate_replay", replay}, {"betti_linear", betti_ok}});
        }
    }
    payload["components"] = comps;
    payload["componentwise_linear"] = any_component ? json(componentwise_linear) : json(nullptr);
    payload["all_certified"] = any_component ? json(all_certified) : json(nullptr);
    if (any_component)
        out << "componentwise linear: " << detail::yesno(componentwise_linear) << "\n";

    // a shelling of the nonface complex rides along when the dual cooperates
    if (!only_component && !ideal.is_zero() && !ideal.is_unit() &&
        dual_ideal(ideal).equigenerated_degree()) {
        try {
            ShellingCertificate sh = shelling_from_quotients(ideal);
            payload["shelling"] = monomial_list_strings(ideal.ambient(), sh.facet_order);
            out << "nonface complex shelling: " << format_monomial_list(sh.facet_order, ideal.ambient())
                << "\n";
            if (oracle)
                oracle_payload["shelling_replay"] = replay_shelling(sh.facet_order);
        } catch (const PreconditionError&) {
            payload["shelling"] = json(nullptr);
            out << "nonface complex shelling: none found\n";
        }
    }

    r.result = payload;
    if (oracle) {
        if (!comp_oracle.empty())
            oracle_payload["components"] = comp_oracle;
        r.oracle = oracle_payload;
    }
    r.text = out.str();
    r.elapsed_ms = clock.ms();
    return r;
}

// ---------------------------------------------------------------------------
// betti

inline Report cmd_betti(const MonomialIdeal& ideal, const FieldSpec& field, bool oracle = false) {
    detail::Stopwatch clock;
    Report r;
    r.command = "betti";
    r.input = format(ideal);
    r.field = field;

    BettiTable table = betti_table(ideal, field);
    std::optional<bool> linear;
    if (!ideal.is_zero() && !ideal.is_unit())
        linear = has_linear_resolution(ideal, field);

    int pd = 0, reg = 0;
    for (const auto& [ij, v] : table.entries) {
        pd = std::max(pd, ij.first);
        reg = std::max(reg, ij.second - ij.first);
    }

    r.result = {{"table", to_json(table)},
                {"projective_dimension", pd},
                {"regularity", reg},
                {"linear_resolution", linear ? json(*linear) : json(nullptr)}};

    std::ostringstream out;
    out << "input: " << r.input << "\n";
    out << "field: " << field.label() << "\n";
    out << "betti numbers of the quotient ring:\n";
    for (const auto& [ij, v] : table.entries)
        out << "  b(" << ij.first << "," << ij.second << ") = " << v << "\n";
    out << "projective dimension: " << pd << "\n";
    out << "regularity: " << reg << "\n";
    if (linear)
        out << "linear resolution: " << detail::yesno(*linear) << "\n";

    if (oracle) {
        bool agrees = taylor_betti(ideal, field) == table;
        r.oracle = {{"taylor_agrees", agrees}};
        out << "oracle taylor complex agrees: " << detail::yesno(agrees) << "\n";
    }
    r.text = out.str();
    r.elapsed_ms = clock.ms();
    return r;
}

}  // namespace facets
