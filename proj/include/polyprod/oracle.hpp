// Brute-force Euler characteristic of Z_L(A,B) by direct cell enumeration.
//
// Each pair (A_i, B_i) is a finite cell list with dimensions and an in-B
// flag; chi depends on nothing else. A product cell, one factor cell per
// vertex, lies in Z_L(A,B) iff its support {i : cell_i not in B_i} is a
// simplex of L, and contributes (-1)^{sum of dims}. This module never
// routes through the closed formula; it exists to check it.
#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "polyprod/complex.hpp"
#include "polyprod/euler.hpp"
#include "polyprod/rational.hpp"

namespace polyprod {

struct CellPairModel {
    struct Cell {
        int dim = 0;
        bool in_b = false;
        friend bool operator==(const Cell&, const Cell&) = default;
    };
    std::vector<Cell> cells;

    friend bool operator==(const CellPairModel&, const CellPairModel&) = default;
};

// Signed cell counts (chi(A), chi(B)) of one pair.
inline std::pair<Int, Int> chi_of_model(const CellPairModel& model) {
    Int chi_a = 0, chi_b = 0;
    for (const auto& cell : model.cells) {
        const int sign = (cell.dim % 2 == 0) ? 1 : -1;
        chi_a += sign;
        if (cell.in_b) chi_b += sign;
    }
    return {chi_a, chi_b};
}

inline constexpr std::uint64_t kDefaultCellBudget = 100'000'000;

namespace detail {

struct BruteForceState {
    const SimplicialComplex* L;
    std::span<const CellPairModel> pairs;
    long long total = 0;

    // Depth-first over one cell choice per vertex. Support only ever grows,
    // and S(L) is downward closed, so a partial support outside S(L) can
    // never recover: prune.
    void walk(std::size_t index, VertexSet support, int dim_parity) {
        if (!L->contains(support)) return;
        if (index == pairs.size()) {
            total += (dim_parity == 0) ? 1 : -1;
            return;
        }
        for (const auto& cell : pairs[index].cells) {
            const VertexSet next_support =
                cell.in_b ? support : with_vertex(support, static_cast<int>(index) + 1);
            walk(index + 1, next_support, dim_parity ^ (cell.dim & 1));
        }
    }
};

}  // namespace detail

// Exact signed count of the product cells of Z_L(A,B). Refuses instances
// whose full product exceeds the budget; a sampling oracle would not be an
// oracle.
inline Int chi_brute_force(const SimplicialComplex& L, std::span<const CellPairModel> pairs,
                           std::uint64_t budget = kDefaultCellBudget) {
    const int m = L.vertex_count();
    if (static_cast<int>(pairs.size()) != m)
        fail(errc::dimension_mismatch, pairs.size(), " cell pairs for a complex on ", m, " vertices");
    std::uint64_t tuple_count = 1;
    for (const auto& model : pairs) {
        if (model.cells.empty()) fail(errc::invalid_argument, "cell pair model with no cells");
        const std::uint64_t n = model.cells.size();
        if (tuple_count > budget / n)
            fail(errc::instance_too_large, "product of cell counts exceeds budget ", budget);
        tuple_count *= n;
    }
    if (tuple_count > budget)
        fail(errc::instance_too_large, "product of cell counts ", tuple_count, " exceeds budget ",
             budget);
    detail::BruteForceState state{&L, pairs};
    state.walk(0, 0, 0);
    return Int(state.total);
}

inline Int chi_brute_force(const SimplicialComplex& L, const std::vector<CellPairModel>& pairs,
                           std::uint64_t budget = kDefaultCellBudget) {
    return chi_brute_force(L, std::span<const CellPairModel>(pairs), budget);
}

struct InstanceLimits {
    int max_m = 5;
    int max_cells = 6;
    int max_dim = 3;
};

struct RandomInstance {
    SimplicialComplex complex;
    std::vector<CellPairModel> pairs;
};

namespace detail {

// mt19937_64 output reduced by modulo: the sequence is pinned by the C++
// standard, unlike the distributions in <random>, so instances are
// reproducible across platforms. Modulo bias is irrelevant here.
inline std::uint64_t rand_below(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

}  // namespace detail

// Deterministic-in-seed random complex plus cell pair models. The complex
// is the downward closure of random facet sets (all singletons added, with
// an occasional empty-only poset instead); each model keeps at least one
// cell and with probability 1/2 is forced to have nonempty B.
inline RandomInstance random_instance(std::uint64_t seed, const InstanceLimits& limits = {}) {
    std::mt19937_64 rng(seed);
    const int m = 1 + static_cast<int>(detail::rand_below(rng, static_cast<std::uint64_t>(limits.max_m)));

    SimplicialComplex L = [&] {
        if (detail::rand_below(rng, 16) == 0) return SimplicialComplex::empty_only(m);
        std::vector<VertexSet> facets;
        const std::uint64_t facet_count = 1 + detail::rand_below(rng, static_cast<std::uint64_t>(m) + 2);
        for (std::uint64_t i = 0; i < facet_count; ++i)
            facets.push_back(static_cast<VertexSet>(detail::rand_below(rng, std::uint64_t{1} << m)));
        for (int v = 1; v <= m; ++v) facets.push_back(VertexSet{1} << (v - 1));
        return SimplicialComplex::from_facet_sets(m, facets);
    }();

    std::vector<CellPairModel> pairs;
    pairs.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        CellPairModel model;
        const std::uint64_t cell_count =
            1 + detail::rand_below(rng, static_cast<std::uint64_t>(limits.max_cells));
        for (std::uint64_t c = 0; c < cell_count; ++c) {
            CellPairModel::Cell cell;
            cell.dim = static_cast<int>(detail::rand_below(rng, static_cast<std::uint64_t>(limits.max_dim) + 1));
            cell.in_b = detail::rand_below(rng, 2) == 1;
            model.cells.push_back(cell);
        }
        const bool force_nonempty_b = detail::rand_below(rng, 2) == 1;
        if (force_nonempty_b) {
            bool has_b = false;
            for (const auto& cell : model.cells) has_b = has_b || cell.in_b;
            if (!has_b) model.cells.front().in_b = true;
        }
        pairs.push_back(std::move(model));
    }
    return RandomInstance{std::move(L), std::move(pairs)};
}

struct VerificationSummary {
    std::uint64_t instances = 0;
    std::uint64_t failures = 0;
    std::uint64_t first_failing_seed = 0;  // meaningful only when failures > 0
};

// Runs seeds 1..num_seeds: formula vs brute force, exact equality. The
// formula's correctness is the product; this check ships with it.
inline VerificationSummary verify_formula_against_oracle(std::uint64_t num_seeds,
                                                         const InstanceLimits& limits = {},
                                                         std::uint64_t budget = kDefaultCellBudget) {
    VerificationSummary summary;
    for (std::uint64_t seed = 1; seed <= num_seeds; ++seed) {
        const RandomInstance instance = random_instance(seed, limits);
        EulerVector eA, eB;
        for (const auto& model : instance.pairs) {
            auto [chi_a, chi_b] = chi_of_model(model);
            eA.chi.push_back(std::move(chi_a));
            eB.chi.push_back(std::move(chi_b));
        }
        const Int by_formula = chi_polyhedral_product(instance.complex, eA, eB);
        const Int by_oracle = chi_brute_force(instance.complex, instance.pairs, budget);
        ++summary.instances;
        if (by_formula != by_oracle) {
            if (summary.failures == 0) summary.first_failing_seed = seed;
            ++summary.failures;
        }
    }
    return summary;
}

}  // namespace polyprod
