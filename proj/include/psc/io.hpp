#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "psc/pseudocharacter.hpp"
#include "psc/representation.hpp"

namespace psc {

using Json = nlohmann::json;

// Input documents are self-describing JSON with kinds "group",
// "representation" and "pseudocharacter". Rationals travel as strings
// ("p" or "p/q"), matrices as row-major arrays of rows of such strings.

inline Matrix matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw ParseError("matrix must be a nonempty array of rows");
    const int rows = static_cast<int>(j.size());
    const int cols = static_cast<int>(j.at(0).size());
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        const Json& row = j.at(i);
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw ParseError("ragged matrix rows");
        for (int k = 0; k < cols; ++k) m(i, k) = parse_rational(row.at(k).get<std::string>());
    }
    return m;
}

inline Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline FiniteGroup group_from_json(const Json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "cyclic") {
        const int m = j.at("m").get<int>();
        if (m < 1) throw ParseError("cyclic group needs m >= 1");
        return build_cyclic(m);
    }
    if (kind == "product") {
        const Json& factors = j.at("factors");
        if (!factors.is_array() || factors.empty())
            throw ParseError("product group needs a nonempty factor list");
        FiniteGroup acc = group_from_json(factors.at(0));
        for (std::size_t i = 1; i < factors.size(); ++i)
            acc = direct_product(acc, group_from_json(factors.at(i)));
        return acc;
    }
    if (kind == "cayley") {
        return FiniteGroup::from_cayley_table(j.at("table").get<std::vector<std::vector<int>>>());
    }
    throw ParseError("unknown group kind '" + kind + "'");
}

struct RepresentationDocument {
    Json group_spec;  // null in closure mode
    std::vector<int> generator_elements;
    std::vector<Matrix> generator_matrices;
};

inline RepresentationDocument representation_document_from_json(const Json& j) {
    RepresentationDocument doc;
    const bool closure_mode = !j.contains("group") || j.at("group").is_null();
    if (!closure_mode) doc.group_spec = j.at("group");
    for (const Json& g : j.at("generators")) {
        if (!closure_mode)
            doc.generator_elements.push_back(g.at("element").get<int>());
        else if (g.contains("element"))
            throw ParseError("closure-mode generators carry no element indices");
        doc.generator_matrices.push_back(matrix_from_json(g.at("matrix")));
    }
    if (doc.generator_matrices.empty()) throw ParseError("representation has no generators");
    return doc;
}

/// Builds the representation from a document. With an explicit group the
/// per-element words come from breadth-first search over the Cayley graph
/// on the listed generator elements; without one, the group is the closure
/// of the generator matrices under multiplication (bounded by max_order).
inline Representation representation_from_json(const Json& j, int max_order = 5000) {
    const RepresentationDocument doc = representation_document_from_json(j);
    if (doc.group_spec.is_null())
        return from_matrix_generators(doc.generator_matrices, max_order);
    const FiniteGroup grp = group_from_json(doc.group_spec);
    for (int e : doc.generator_elements)
        if (e < 0 || e >= grp.order()) throw ParseError("generator element index out of range");
    const std::vector<GWord> words = words_by_bfs(grp, doc.generator_elements);
    return from_generator_assignment(grp, doc.generator_elements, doc.generator_matrices, words);
}

inline Json representation_to_json(const Json& group_spec, std::span<const int> gen_elems,
                                   std::span<const Matrix> gen_mats) {
    Json gens = Json::array();
    for (std::size_t i = 0; i < gen_elems.size(); ++i)
        gens.push_back({{"element", gen_elems[i]}, {"matrix", matrix_to_json(gen_mats[i])}});
    return Json{{"kind", "representation"}, {"group", group_spec}, {"generators", std::move(gens)}};
}

inline PseudocharData pseudocharacter_from_json(const Json& j) {
    PseudocharData d{group_from_json(j.at("group")), j.at("dim").get<int>(), {}, std::nullopt,
                     std::nullopt};
    if (d.dim < 1) throw ParseError("pseudocharacter dim must be positive");
    const Json& tvals = j.at("T");
    if (static_cast<int>(tvals.size()) != d.group.order())
        throw ParseError("T table size does not match group order");
    for (const Json& v : tvals) d.T.push_back(parse_rational(v.get<std::string>()));
    if (j.contains("l") && !j.at("l").is_null()) {
        std::vector<Rational> l;
        if (static_cast<int>(j.at("l").size()) != d.group.order())
            throw ParseError("l table size does not match group order");
        for (const Json& v : j.at("l")) l.push_back(parse_rational(v.get<std::string>()));
        d.l = std::move(l);
    }
    if (j.contains("P") && !j.at("P").is_null()) {
        const Json& pj = j.at("P");
        const int arity = pj.at("arity").get<int>();
        std::map<std::vector<int>, Rational> table;
        for (const Json& entry : pj.at("entries")) {
            std::vector<int> tuple = entry.at("tuple").get<std::vector<int>>();
            if (static_cast<int>(tuple.size()) != arity)
                throw ParseError("P entry arity mismatch");
            table[std::move(tuple)] = parse_rational(entry.at("value").get<std::string>());
        }
        d.P = std::move(table);
    }
    return d;
}

inline Json pseudocharacter_to_json(const Json& group_spec, const PseudocharData& d) {
    Json out{{"kind", "pseudocharacter"}, {"group", group_spec}, {"dim", d.dim}};
    Json tvals = Json::array();
    for (const auto& v : d.T) tvals.push_back(to_string(v));
    out["T"] = std::move(tvals);
    if (d.l) {
        Json lvals = Json::array();
        for (const auto& v : *d.l) lvals.push_back(to_string(v));
        out["l"] = std::move(lvals);
    }
    if (d.P) {
        Json entries = Json::array();
        int arity = 0;
        for (const auto& [tuple, value] : *d.P) {
            arity = static_cast<int>(tuple.size());
            entries.push_back({{"tuple", tuple}, {"value", to_string(value)}});
        }
        out["P"] = Json{{"arity", arity}, {"entries", std::move(entries)}};
    }
    return out;
}

inline std::string document_kind(const Json& j) {
    if (j.contains("kind")) {
        const std::string k = j.at("kind").get<std::string>();
        if (k == "cyclic" || k == "product" || k == "cayley") return "group";
        return k;
    }
    if (j.contains("generators")) return "representation";
    if (j.contains("T")) return "pseudocharacter";
    if (j.contains("m") || j.contains("table") || j.contains("factors")) return "group";
    throw ParseError("document kind cannot be determined");
}

inline Json report_to_json(const VerificationReport& r) {
    Json tallies = Json::array();
    for (const auto& t : r.tallies) {
        Json tj{{"axiom", t.axiom}, {"checked", t.checked}, {"violations", t.violations}};
        if (t.sampled) {
            tj["sampled"] = true;
            tj["population"] = t.population;
        }
        tallies.push_back(std::move(tj));
    }
    Json violations = Json::array();
    for (const auto& v : r.violations)
        violations.push_back({{"axiom", v.axiom}, {"tuple", v.tuple}, {"value", to_string(v.value)}});
    return Json{{"verdict", r.pass() ? "pass" : "fail"},
                {"seed", r.seed},
                {"tallies", std::move(tallies)},
                {"violations", std::move(violations)},
                {"violations_total", r.violations_total},
                {"notes", r.notes}};
}

} // namespace psc
