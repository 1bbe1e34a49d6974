// Euler characteristics of graph products of groups over a flag complex L.
//
// Two inputs per vertex are supported: a type-FL group given by chi(BG_i),
// or a finite group given by its order. The flag condition is enforced, not
// assumed: for non-flag L these formulas have no theorem behind them.
#pragma once

#include <span>
#include <vector>

#include "polyprod/complex.hpp"
#include "polyprod/euler.hpp"
#include "polyprod/rational.hpp"

namespace polyprod {

struct GroupSpec {
    enum class Kind { FiniteOfOrder, TypeFLWithChi };
    Kind kind = Kind::FiniteOfOrder;
    Int value;  // the order n >= 1, or chi(BG)

    static GroupSpec finite_of_order(Int n) {
        if (n < 1) fail(errc::invalid_argument, "group order must be >= 1, got ", n.str());
        return GroupSpec{Kind::FiniteOfOrder, std::move(n)};
    }
    static GroupSpec type_fl_with_chi(Int chi) {
        return GroupSpec{Kind::TypeFLWithChi, std::move(chi)};
    }
};

namespace detail {

inline void require_flag(const SimplicialComplex& L) {
    if (!is_flag(L))
        fail(errc::not_flag, "L is not a flag complex; graph product formulas do not apply");
}

}  // namespace detail

// chi(B of the graph product) = f_L(e(G) - 1) for type-FL vertex groups with
// classifying-space Euler characteristics chi_bg. Same formula as the
// point-pair case, entered through the group-theoretic door.
inline Int chi_classifying_space(const SimplicialComplex& L, const std::vector<Int>& chi_bg) {
    detail::require_length(L.vertex_count(), static_cast<int>(chi_bg.size()), "chi(BG) tuple");
    detail::require_flag(L);
    return chi_points_case(L, EulerVector(chi_bg));
}

// Rational Euler characteristic of the graph product of finite groups of
// orders n_i = q_i + 1 >= 2: chi = hhat_L(-q) / prod n_i. The numerator is
// chi of the classifying space of the kernel of the projection onto the
// direct product, i.e. the cone-case count.
inline Rational chi_rational_graph_product(const SimplicialComplex& L,
                                           const std::vector<Int>& orders) {
    const int m = L.vertex_count();
    detail::require_length(m, static_cast<int>(orders.size()), "orders tuple");
    detail::require_flag(L);
    std::vector<Int> q(static_cast<std::size_t>(m));
    Int product_of_orders = 1;
    for (int i = 0; i < m; ++i) {
        const Int& n = orders[static_cast<std::size_t>(i)];
        if (n == 1)
            fail(errc::trivial_factor, "group ", i + 1,
                 " has order 1; delete that vertex explicitly instead");
        if (n < 1) fail(errc::invalid_argument, "group order must be >= 1, got ", n.str());
        q[static_cast<std::size_t>(i)] = n - 1;
        product_of_orders *= n;
    }
    return Rational(chi_cone_case(L, q), product_of_orders);
}

}  // namespace polyprod
