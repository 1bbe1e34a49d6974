// Vertex subsets of [m] = {1,...,m} as bitmasks: bit i-1 stands for vertex i.
//
// Everything downstream iterates subsets in a fixed canonical order, sorted
// by cardinality and then lexicographically by the ascending vertex list,
// so results and serializations are deterministic.
#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "polyprod/errors.hpp"

namespace polyprod {

using VertexSet = std::uint32_t;

// Formulas and constructors enumerate up to 2^m subsets; m stays desk-scale.
inline constexpr int kMaxVertices = 20;

inline int set_size(VertexSet s) { return std::popcount(s); }

inline VertexSet full_set(int m) { return (VertexSet{1} << m) - 1; }

inline bool set_contains(VertexSet s, int vertex) {
    return (s >> (vertex - 1)) & 1u;
}

inline VertexSet with_vertex(VertexSet s, int vertex) {
    return s | (VertexSet{1} << (vertex - 1));
}

// Cardinality first, then lexicographic on ascending vertex lists. For equal
// cardinality the lists first differ at the lowest bit of a^b, and the set
// holding that bit owns the smaller vertex.
inline bool card_lex_less(VertexSet a, VertexSet b) {
    if (a == b) return false;
    const int ca = set_size(a), cb = set_size(b);
    if (ca != cb) return ca < cb;
    const VertexSet diff = a ^ b;
    return a & (diff & -diff);
}

struct CardLexLess {
    bool operator()(VertexSet a, VertexSet b) const { return card_lex_less(a, b); }
};

// Ascending 1-based vertex list of a subset.
inline std::vector<int> vertices_of(VertexSet s) {
    std::vector<int> out;
    out.reserve(set_size(s));
    while (s) {
        const VertexSet low = s & -s;
        out.push_back(std::countr_zero(low) + 1);
        s ^= low;
    }
    return out;
}

// Validates 1 <= v <= m for every listed vertex.
inline VertexSet make_set(int m, const std::vector<int>& vertices) {
    VertexSet s = 0;
    for (int v : vertices) {
        if (v < 1 || v > m) fail(errc::invalid_vertex, "vertex ", v, " outside [1,", m, "]");
        s = with_vertex(s, v);
    }
    return s;
}

}  // namespace polyprod
