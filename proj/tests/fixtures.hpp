// Shared complexes and deterministic generators for the test suites.
#pragma once

#include <random>
#include <utility>
#include <vector>

#include "polyprod/polyprod.hpp"

namespace fixtures {

using polyprod::Int;
using polyprod::SimplicialComplex;
using polyprod::VertexSet;

inline SimplicialComplex cycle(int n) {
    std::vector<std::vector<int>> facets;
    for (int i = 1; i <= n; ++i) facets.push_back({i, i % n + 1});
    return SimplicialComplex::from_facets(n, facets);
}

inline SimplicialComplex full_simplex(int m) {
    std::vector<int> everything;
    for (int i = 1; i <= m; ++i) everything.push_back(i);
    return SimplicialComplex::from_facets(m, {everything});
}

inline SimplicialComplex disjoint_points(int m) {
    std::vector<std::vector<int>> facets;
    for (int i = 1; i <= m; ++i) facets.push_back({i});
    return SimplicialComplex::from_facets(m, facets);
}

// Three vertices, three edges, no 2-face: the smallest non-flag complex.
inline SimplicialComplex hollow_triangle() {
    return SimplicialComplex::from_facets(3, {{1, 2}, {2, 3}, {1, 3}});
}

// Boundary complex of the n-dimensional cross-polytope on 2n vertices:
// vertex i is antipodal to i+n, facets pick one vertex from each pair.
inline SimplicialComplex cross_polytope_boundary(int n) {
    std::vector<std::vector<int>> facets;
    for (int pick = 0; pick < (1 << n); ++pick) {
        std::vector<int> facet;
        for (int i = 0; i < n; ++i) facet.push_back(((pick >> i) & 1) ? i + 1 + n : i + 1);
        facets.push_back(std::move(facet));
    }
    return SimplicialComplex::from_facets(2 * n, facets);
}

inline std::uint64_t rand_below(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

// Random downward-closed complex: random facet masks plus all singletons.
inline SimplicialComplex random_complex(std::mt19937_64& rng, int m) {
    std::vector<VertexSet> facets;
    const std::uint64_t facet_count = 1 + rand_below(rng, static_cast<std::uint64_t>(m) + 2);
    for (std::uint64_t i = 0; i < facet_count; ++i)
        facets.push_back(static_cast<VertexSet>(rand_below(rng, std::uint64_t{1} << m)));
    for (int v = 1; v <= m; ++v) facets.push_back(VertexSet{1} << (v - 1));
    return SimplicialComplex::from_facet_sets(m, facets);
}

// Clique complex of a random graph with edge probability ~1/2.
inline SimplicialComplex random_flag_complex(std::mt19937_64& rng, int m) {
    std::vector<std::pair<int, int>> edges;
    for (int a = 1; a <= m; ++a)
        for (int b = a + 1; b <= m; ++b)
            if (rand_below(rng, 2) == 1) edges.emplace_back(a, b);
    return SimplicialComplex::clique_complex(m, edges);
}

inline std::vector<Int> random_int_tuple(std::mt19937_64& rng, int m, long long lo, long long hi) {
    std::vector<Int> out;
    out.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i)
        out.push_back(Int(lo + static_cast<long long>(
                               rand_below(rng, static_cast<std::uint64_t>(hi - lo + 1)))));
    return out;
}

// Every downward-closed complex on m vertices that contains all singletons,
// by brute force over the subsets of size >= 2.
inline std::vector<SimplicialComplex> all_complexes(int m) {
    std::vector<VertexSet> big_sets;
    for (VertexSet s = 0; s < (VertexSet{1} << m); ++s)
        if (polyprod::set_size(s) >= 2) big_sets.push_back(s);

    std::vector<SimplicialComplex> out;
    for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << big_sets.size()); ++choice) {
        std::vector<VertexSet> chosen;
        for (std::size_t i = 0; i < big_sets.size(); ++i)
            if ((choice >> i) & 1) chosen.push_back(big_sets[i]);

        // downward closed iff every one-element-smaller subset of a chosen
        // set is chosen or a singleton
        bool closed = true;
        auto is_member = [&](VertexSet s) {
            if (polyprod::set_size(s) < 2) return true;
            for (VertexSet c : chosen)
                if (c == s) return true;
            return false;
        };
        for (VertexSet s : chosen) {
            for (int v = 1; v <= m && closed; ++v)
                if (polyprod::set_contains(s, v))
                    closed = is_member(s & ~(VertexSet{1} << (v - 1)));
            if (!closed) break;
        }
        if (!closed) continue;

        for (int v = 1; v <= m; ++v) chosen.push_back(VertexSet{1} << (v - 1));
        out.push_back(SimplicialComplex::from_facet_sets(m, chosen));
    }
    return out;
}

}  // namespace fixtures
