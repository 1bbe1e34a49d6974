// JSON schemas of the CLI surface.
//
// Input document (one object per invocation):
//   "complex":  {"m": int, "facets": [[int,...],...]}
//             | {"m": int, "edges": [[int,int],...], "flag": true}
//             | {"m": int, "empty_only": true}
//   "pairs":    [{"cells": [{"dim": int, "in_b": bool},...]},...]
//   "euler":    {"eA": [int|str,...], "eB": [int|str,...]}
//   "q":        [int|str,...]
//   "manifold": {"k": [int,...], "chi_boundary": [int|str,...]}
//   "groups":   [{"order": int|str} | {"chi": int|str},...]
//
// Big integers are accepted as JSON integers or decimal strings and always
// emitted as strings. InputError marks a malformed document, as opposed to
// a mathematically invalid one (DomainError).
#pragma once

#include <nlohmann/json.hpp>
#include <stdexcept>
#include <string>
#include <vector>

#include "polyprod/complex.hpp"
#include "polyprod/euler.hpp"
#include "polyprod/groups.hpp"
#include "polyprod/oracle.hpp"
#include "polyprod/poly.hpp"
#include "polyprod/rational.hpp"

namespace polyprod {

// ordered_json: objects keep insertion order, so emitted documents are
// byte-stable and lay out as documented.
using json = nlohmann::ordered_json;

class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

namespace io_detail {

inline const json& require_field(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw InputError(std::string("missing field \"") + key + "\"");
    return *it;
}

inline void require_object(const json& j, const char* what) {
    if (!j.is_object()) throw InputError(std::string(what) + " must be a JSON object");
}

inline void require_known_keys(const json& j, std::initializer_list<const char*> allowed,
                               const char* what) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool known = false;
        for (const char* key : allowed) known = known || it.key() == key;
        if (!known)
            throw InputError(std::string("unexpected field \"") + it.key() + "\" in " + what);
    }
}

inline Int parse_bigint(const json& j, const char* what) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::exception&) {
            throw InputError(std::string(what) + ": \"" + j.get<std::string>() +
                             "\" is not a decimal integer");
        }
    }
    throw InputError(std::string(what) + " must be an integer or a decimal string");
}

inline int parse_small_int(const json& j, const char* what) {
    if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
    return j.get<int>();
}

inline std::vector<Int> parse_bigint_array(const json& j, const char* what) {
    if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
    std::vector<Int> out;
    out.reserve(j.size());
    for (const auto& entry : j) out.push_back(parse_bigint(entry, what));
    return out;
}

}  // namespace io_detail

inline SimplicialComplex complex_from_json(const json& j) {
    using io_detail::parse_small_int;
    using io_detail::require_field;
    io_detail::require_object(j, "\"complex\"");
    const int m = parse_small_int(require_field(j, "m"), "\"m\"");
    if (j.contains("facets")) {
        io_detail::require_known_keys(j, {"m", "facets"}, "the facets form of \"complex\"");
        const json& facets_json = j["facets"];
        if (!facets_json.is_array()) throw InputError("\"facets\" must be an array of vertex arrays");
        std::vector<std::vector<int>> facets;
        for (const auto& f : facets_json) {
            if (!f.is_array()) throw InputError("each facet must be an array of vertices");
            std::vector<int> facet;
            for (const auto& v : f) facet.push_back(parse_small_int(v, "facet vertex"));
            facets.push_back(std::move(facet));
        }
        return SimplicialComplex::from_facets(m, facets);
    }
    if (j.contains("edges")) {
        io_detail::require_known_keys(j, {"m", "edges", "flag"}, "the edges form of \"complex\"");
        if (!j.contains("flag") || !j["flag"].is_boolean() || !j["flag"].get<bool>())
            throw InputError("the edges form requires \"flag\": true (the clique complex is built)");
        const json& edges_json = j["edges"];
        if (!edges_json.is_array()) throw InputError("\"edges\" must be an array of vertex pairs");
        std::vector<std::pair<int, int>> edges;
        for (const auto& e : edges_json) {
            if (!e.is_array() || e.size() != 2)
                throw InputError("each edge must be an array of exactly two vertices");
            edges.emplace_back(parse_small_int(e[0], "edge vertex"), parse_small_int(e[1], "edge vertex"));
        }
        return SimplicialComplex::clique_complex(m, edges);
    }
    if (j.contains("empty_only")) {
        io_detail::require_known_keys(j, {"m", "empty_only"}, "the empty_only form of \"complex\"");
        if (!j["empty_only"].is_boolean() || !j["empty_only"].get<bool>())
            throw InputError("\"empty_only\" must be true when present");
        return SimplicialComplex::empty_only(m);
    }
    throw InputError("\"complex\" needs one of \"facets\", \"edges\" (with \"flag\": true), or \"empty_only\"");
}

inline CellPairModel pair_model_from_json(const json& j) {
    io_detail::require_object(j, "cell pair model");
    io_detail::require_known_keys(j, {"cells"}, "cell pair model");
    const json& cells_json = io_detail::require_field(j, "cells");
    if (!cells_json.is_array() || cells_json.empty())
        throw InputError("\"cells\" must be a nonempty array");
    CellPairModel model;
    for (const auto& c : cells_json) {
        io_detail::require_object(c, "cell");
        io_detail::require_known_keys(c, {"dim", "in_b"}, "cell");
        CellPairModel::Cell cell;
        cell.dim = io_detail::parse_small_int(io_detail::require_field(c, "dim"), "\"dim\"");
        if (cell.dim < 0) throw InputError("cell dimension must be nonnegative");
        const json& in_b = io_detail::require_field(c, "in_b");
        if (!in_b.is_boolean()) throw InputError("\"in_b\" must be a boolean");
        cell.in_b = in_b.get<bool>();
        model.cells.push_back(cell);
    }
    return model;
}

inline std::vector<CellPairModel> pairs_from_json(const json& j) {
    if (!j.is_array()) throw InputError("\"pairs\" must be an array of cell pair models");
    std::vector<CellPairModel> out;
    out.reserve(j.size());
    for (const auto& entry : j) out.push_back(pair_model_from_json(entry));
    return out;
}

inline std::vector<GroupSpec> groups_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw InputError("\"groups\" must be a nonempty array");
    std::vector<GroupSpec> out;
    for (const auto& g : j) {
        io_detail::require_object(g, "group spec");
        const bool has_order = g.contains("order");
        const bool has_chi = g.contains("chi");
        if (has_order == has_chi)
            throw InputError("each group spec needs exactly one of \"order\" or \"chi\"");
        io_detail::require_known_keys(g, {"order", "chi"}, "group spec");
        if (has_order)
            out.push_back(GroupSpec::finite_of_order(io_detail::parse_bigint(g["order"], "\"order\"")));
        else
            out.push_back(GroupSpec::type_fl_with_chi(io_detail::parse_bigint(g["chi"], "\"chi\"")));
    }
    return out;
}

inline ManifoldPairSpec manifold_from_json(const json& j) {
    io_detail::require_object(j, "\"manifold\"");
    io_detail::require_known_keys(j, {"k", "chi_boundary"}, "\"manifold\"");
    const json& k_json = io_detail::require_field(j, "k");
    if (!k_json.is_array()) throw InputError("\"k\" must be an array of nonnegative integers");
    ManifoldPairSpec spec;
    for (const auto& k : k_json) {
        const int ki = io_detail::parse_small_int(k, "\"k\" entry");
        if (ki < 0) throw InputError("\"k\" entries must be nonnegative");
        spec.k.push_back(ki);
    }
    spec.chi_boundary = io_detail::parse_bigint_array(io_detail::require_field(j, "chi_boundary"),
                                                      "\"chi_boundary\"");
    return spec;
}

struct EulerSection {
    std::vector<Int> eA;
    std::vector<Int> eB;
};

inline EulerSection euler_from_json(const json& j, bool need_eB) {
    io_detail::require_object(j, "\"euler\"");
    EulerSection out;
    if (need_eB) {
        io_detail::require_known_keys(j, {"eA", "eB"}, "\"euler\"");
        out.eB = io_detail::parse_bigint_array(io_detail::require_field(j, "eB"), "\"eB\"");
    } else {
        io_detail::require_known_keys(j, {"eA"}, "\"euler\"");
    }
    out.eA = io_detail::parse_bigint_array(io_detail::require_field(j, "eA"), "\"eA\"");
    return out;
}

// --- serialization -------------------------------------------------------

inline json to_json(const Int& x) { return json(x.str()); }

inline json to_json(const Rational& r) {
    return json{{"num", r.num().str()}, {"den", r.den().str()}};
}

inline json to_json(const MultilinearPoly& p) {
    json out = json::array();
    for (const auto& [vars, coef] : p.terms())
        out.push_back(json{{"vars", vertices_of(vars)}, {"coef", coef.str()}});
    return out;
}

inline json to_json(const UniPoly& p) {
    json coeffs = json::array();
    for (const Int& c : p.coeffs()) coeffs.push_back(c.str());
    return json{{"coeffs", std::move(coeffs)}};
}

inline json to_json(const CdSignCheck& check) {
    json out;
    out["quantity"] = check.quantity.str();
    out["c"] = check.c ? json(*check.c) : json(nullptr);
    out["satisfied"] = check.satisfied ? json(*check.satisfied) : json(nullptr);
    out["applicable"] = check.applicable();
    return out;
}

}  // namespace polyprod
