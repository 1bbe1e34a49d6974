// Finite simplicial complexes on vertex set [m] = {1,...,m}.
//
// A complex stores its full simplex poset S(L) explicitly, empty simplex
// included, as a card-lex sorted vector of vertex sets. Desk-scale m keeps
// the 2^m worst case cheap, and every formula downstream sums over all of
// S(L) anyway.
//
// Regular values carry every singleton {i}; the one sanctioned exception is
// empty_only(m), whose poset is {0} while the m vertices still index the
// formulas' tuples. Values are immutable after construction.
#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "polyprod/errors.hpp"
#include "polyprod/subsets.hpp"

namespace polyprod {

class SimplicialComplex {
public:
    // Downward closure of the given facets plus the empty simplex. Every
    // vertex of [m] must appear in some facet; a ghost vertex would silently
    // change the meaning of every formula, so it is rejected.
    static SimplicialComplex from_facets(int m, const std::vector<std::vector<int>>& facets) {
        std::vector<VertexSet> masks;
        masks.reserve(facets.size());
        for (const auto& f : facets) masks.push_back(make_set(m, f));
        return from_facet_sets(m, masks);
    }

    static SimplicialComplex from_facet_sets(int m, const std::vector<VertexSet>& facets) {
        check_vertex_count(m);
        VertexSet covered = 0;
        for (VertexSet f : facets) {
            if (f & ~full_set(m)) fail(errc::invalid_vertex, "facet outside [1,", m, "]");
            covered |= f;
        }
        if (covered != full_set(m)) {
            for (int i = 1; i <= m; ++i)
                if (!set_contains(covered, i)) fail(errc::ghost_vertex, "vertex ", i, " is in no facet");
        }
        std::vector<VertexSet> closure;
        closure.push_back(0);
        for (VertexSet f : facets) {
            // All submasks of f, standard descending submask walk.
            for (VertexSet s = f; s; s = (s - 1) & f) closure.push_back(s);
        }
        sort_unique(closure);
        return SimplicialComplex(m, std::move(closure));
    }

    // The flag complex of a graph: all cliques, including the empty one and
    // the singletons. Cliques are enumerated by recursive extension above
    // the current maximum vertex, which visits each clique exactly once.
    static SimplicialComplex clique_complex(int m, const std::vector<std::pair<int, int>>& edges) {
        check_vertex_count(m);
        std::vector<VertexSet> adj(static_cast<std::size_t>(m) + 1, 0);
        for (auto [a, b] : edges) {
            if (a < 1 || a > m || b < 1 || b > m)
                fail(errc::invalid_vertex, "edge {", a, ",", b, "} outside [1,", m, "]");
            if (a == b) fail(errc::invalid_vertex, "loop edge at vertex ", a);
            adj[a] = with_vertex(adj[a], b);
            adj[b] = with_vertex(adj[b], a);
        }
        std::vector<VertexSet> cliques;
        cliques.push_back(0);
        // grow(c, v): c is a clique with max vertex < v, every u >= v adjacent
        // to all of c is still in cand.
        auto grow = [&](auto&& self, VertexSet clique, int from, VertexSet cand) -> void {
            for (int v = from; v <= m; ++v) {
                if (!set_contains(cand, v)) continue;
                const VertexSet next = with_vertex(clique, v);
                cliques.push_back(next);
                self(self, next, v + 1, cand & adj[v]);
            }
        };
        grow(grow, 0, 1, full_set(m));
        sort_unique(cliques);
        return SimplicialComplex(m, std::move(cliques));
    }

    // The complex whose only simplex is the empty one, on a vertex set of
    // size m that still indexes pairs and Euler vectors. Relaxes the
    // all-singletons invariant; every formula module accepts it.
    static SimplicialComplex empty_only(int m) {
        check_vertex_count(m);
        return SimplicialComplex(m, {0});
    }

    int vertex_count() const { return m_; }

    // dim L = max |J| - 1 over S(L); -1 when only the empty simplex exists.
    int dimension() const { return set_size(simplices_.back()) - 1; }

    // d = dim L + 1.
    int top_degree() const { return dimension() + 1; }

    std::size_t size() const { return simplices_.size(); }

    // S(L) in card-lex order; the deterministic iteration order of the library.
    const std::vector<VertexSet>& simplices() const { return simplices_; }

    bool contains(VertexSet s) const {
        return std::binary_search(simplices_.begin(), simplices_.end(), s, CardLexLess{});
    }

    bool has_all_vertices() const { return all_vertices_; }

    bool is_empty_only() const { return simplices_.size() == 1; }

    // Maximal simplices, in card-lex order.
    std::vector<VertexSet> facets() const {
        std::vector<VertexSet> out;
        for (VertexSet s : simplices_) {
            bool maximal = true;
            for (int v = 1; v <= m_ && maximal; ++v)
                if (!set_contains(s, v) && contains(with_vertex(s, v))) maximal = false;
            if (maximal) out.push_back(s);
        }
        return out;
    }

    // Edges of the 1-skeleton as ordered pairs (a < b).
    std::vector<std::pair<int, int>> skeleton_edges() const {
        std::vector<std::pair<int, int>> out;
        for (VertexSet s : simplices_) {
            if (set_size(s) != 2) continue;
            const auto vs = vertices_of(s);
            out.emplace_back(vs[0], vs[1]);
        }
        return out;
    }

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.m_ == b.m_ && a.simplices_ == b.simplices_;
    }

    friend SimplicialComplex join(const SimplicialComplex&, const SimplicialComplex&);

private:
    SimplicialComplex(int m, std::vector<VertexSet> sorted_simplices)
        : m_(m), simplices_(std::move(sorted_simplices)) {
        all_vertices_ = true;
        for (int i = 1; i <= m_; ++i)
            if (!contains(VertexSet{1} << (i - 1))) {
                all_vertices_ = false;
                break;
            }
    }

    static void check_vertex_count(int m) {
        if (m < 1) fail(errc::invalid_argument, "vertex count m must be >= 1, got ", m);
        if (m > kMaxVertices)
            fail(errc::too_many_vertices, "m = ", m, " exceeds the supported maximum ", kMaxVertices);
    }

    static void sort_unique(std::vector<VertexSet>& v) {
        std::sort(v.begin(), v.end(), CardLexLess{});
        v.erase(std::unique(v.begin(), v.end()), v.end());
    }

    int m_;
    std::vector<VertexSet> simplices_;
    bool all_vertices_;
};

// True iff every subset of [m] whose pairs are all edges of L is itself a
// simplex of L, i.e. L equals the clique complex of its own 1-skeleton.
inline bool is_flag(const SimplicialComplex& L) {
    if (!L.has_all_vertices()) return false;
    return SimplicialComplex::clique_complex(L.vertex_count(), L.skeleton_edges()) == L;
}

// Join of two complexes on the disjoint union of their vertex sets; L2's
// vertices are shifted past L1's. S(L1 * L2) = { J1 u J2 }.
inline SimplicialComplex join(const SimplicialComplex& L1, const SimplicialComplex& L2) {
    const int m1 = L1.vertex_count();
    const int m = m1 + L2.vertex_count();
    if (m > kMaxVertices)
        fail(errc::too_many_vertices, "join would have ", m, " vertices, maximum is ", kMaxVertices);
    std::vector<VertexSet> joined;
    joined.reserve(L1.size() * L2.size());
    for (VertexSet a : L1.simplices())
        for (VertexSet b : L2.simplices()) joined.push_back(a | (b << m1));
    std::sort(joined.begin(), joined.end(), CardLexLess{});
    return SimplicialComplex(m, std::move(joined));
}

}  // namespace polyprod
