// Euler characteristics of polyhedral products.
//
// The central identity: for a complex L on [m] and pairs with Euler
// characteristic tuples e(A), e(B),
//
//     chi(Z_L(A,B)) = sum over J in S(L) of (e(A)-e(B))_J * e(B)_{[m]-J}.
//
// The point, cone and manifold specializations below each have a closed
// form through the f/hhat/h machinery; where a closed form is used, the
// direct sum is kept as an internal cross-check. All chi inputs are exact
// integers supplied by the caller.
#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polyprod/complex.hpp"
#include "polyprod/poly.hpp"
#include "polyprod/rational.hpp"

namespace polyprod {

// Per-vertex Euler characteristics chi(A_i) or chi(B_i).
struct EulerVector {
    std::vector<Int> chi;

    EulerVector() = default;
    explicit EulerVector(std::vector<Int> values) : chi(std::move(values)) {}
    EulerVector(std::initializer_list<Int> values) : chi(values) {}

    static EulerVector constant(int m, Int value) {
        return EulerVector(std::vector<Int>(static_cast<std::size_t>(m), std::move(value)));
    }

    int count() const { return static_cast<int>(chi.size()); }
    friend bool operator==(const EulerVector&, const EulerVector&) = default;
};

// A_i an odd-dimensional manifold with boundary B_i: A_i has dimension
// 2k_i + 1 and chi(boundary) is even since chi(B_i) = 2 chi(A_i).
struct ManifoldPairSpec {
    std::vector<int> k;
    std::vector<Int> chi_boundary;
};

namespace detail {

inline void require_length(int m, int n, const char* what) {
    if (n != m) fail(errc::dimension_mismatch, what, " has length ", n, ", complex has m = ", m);
}

inline void validate_manifold_spec(const SimplicialComplex& L, const ManifoldPairSpec& spec) {
    const int m = L.vertex_count();
    require_length(m, static_cast<int>(spec.k.size()), "manifold k-tuple");
    require_length(m, static_cast<int>(spec.chi_boundary.size()), "chi_boundary");
    for (int i = 0; i < m; ++i) {
        if (spec.k[static_cast<std::size_t>(i)] < 0)
            fail(errc::invalid_argument, "k[", i + 1, "] must be nonnegative");
        if (spec.chi_boundary[static_cast<std::size_t>(i)] % 2 != 0)
            fail(errc::odd_boundary_euler, "chi(boundary M_", i + 1, ") = ",
                 spec.chi_boundary[static_cast<std::size_t>(i)].str(), " is odd");
    }
}

}  // namespace detail

// The main formula, exactly as stated: sum over S(L) of
// (e(A)-e(B))_J * e(B)_{[m]-J}.
inline Int chi_polyhedral_product(const SimplicialComplex& L, const EulerVector& eA,
                                  const EulerVector& eB) {
    const int m = L.vertex_count();
    detail::require_length(m, eA.count(), "e(A)");
    detail::require_length(m, eB.count(), "e(B)");
    std::vector<Int> diff(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i)
        diff[static_cast<std::size_t>(i)] =
            eA.chi[static_cast<std::size_t>(i)] - eB.chi[static_cast<std::size_t>(i)];
    const VertexSet all = full_set(m);
    Int total = 0;
    for (VertexSet J : L.simplices())
        total += monomial_product(diff, J) * monomial_product(eB.chi, all & ~J);
    return total;
}

// Every B_i a point: chi = f_L(e(A) - 1), the reduced Euler characteristics
// plugged into the f-polynomial.
inline Int chi_points_case(const SimplicialComplex& L, const EulerVector& eA) {
    const int m = L.vertex_count();
    detail::require_length(m, eA.count(), "e(A)");
    Int total = 0;
    for (VertexSet J : L.simplices()) {
        Int term = 1;
        for (int v : vertices_of(J)) term *= eA.chi[static_cast<std::size_t>(v) - 1] - 1;
        total += term;
    }
    return total;
}

// (A_i, B_i) = (Cone E_i, E_i) with |E_i| = q_i + 1 >= 2: chi = hhat_L(-q).
inline Int chi_cone_case(const SimplicialComplex& L, const std::vector<Int>& q) {
    const int m = L.vertex_count();
    detail::require_length(m, static_cast<int>(q.size()), "q");
    std::vector<Int> point(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        if (q[static_cast<std::size_t>(i)] < 1)
            fail(errc::non_positive_q, "q[", i + 1, "] = ", q[static_cast<std::size_t>(i)].str(),
                 " but each q_i must be >= 1");
        point[static_cast<std::size_t>(i)] = -q[static_cast<std::size_t>(i)];
    }
    return eval_int(hhat_polynomial(L), point);
}

// Each A_i an odd-dimensional manifold with boundary B_i, so that
// chi(B_i) = 2 chi(A_i). Computed via the main formula with e(A) = e(B)/2
// and cross-checked against the closed form e(B)_[m] * h_L(-1) / (-2)^d,
// whose division is exact under these hypotheses.
inline Int chi_manifold_case(const SimplicialComplex& L, const ManifoldPairSpec& spec) {
    detail::validate_manifold_spec(L, spec);
    const int m = L.vertex_count();
    std::vector<Int> half(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) half[static_cast<std::size_t>(i)] = spec.chi_boundary[static_cast<std::size_t>(i)] / 2;
    const Int by_theorem =
        chi_polyhedral_product(L, EulerVector(half), EulerVector(spec.chi_boundary));

    const int d = L.top_degree();
    Int boundary_product = 1;
    for (const Int& c : spec.chi_boundary) boundary_product *= c;
    const Int numerator = boundary_product * eval_uni_int(h_polynomial(L), Int(-1));
    Int denominator = 1;
    for (int i = 0; i < d; ++i) denominator *= -2;
    internal_check(numerator % denominator == 0,
                   "manifold closed form is not an exact integer");
    internal_check(numerator / denominator == by_theorem,
                   "manifold closed form disagrees with the main formula");
    return by_theorem;
}

// h_L(-1). The flag / generalized-homology-sphere hypotheses on L are the
// caller's responsibility; this is just the number.
inline Int charney_davis_quantity(const SimplicialComplex& L) {
    return eval_uni_int(h_polynomial(L), Int(-1));
}

struct CdSignCheck {
    Int quantity;                  // h_L(-1)
    std::optional<int> c;          // d/2 when d is even
    std::optional<bool> satisfied; // (-1)^c h_L(-1) >= 0; empty when d is odd
    bool applicable() const { return c.has_value(); }
};

// For even top degree d = 2c, checks the sign condition (-1)^c h_L(-1) >= 0;
// odd d carries no condition and reports not-applicable.
inline CdSignCheck cd_sign_check(const SimplicialComplex& L) {
    CdSignCheck out;
    out.quantity = charney_davis_quantity(L);
    const int d = L.top_degree();
    if (d % 2 != 0) return out;
    out.c = d / 2;
    const Int signed_quantity = (*out.c % 2 == 0) ? out.quantity : Int(-out.quantity);
    out.satisfied = signed_quantity >= 0;
    return out;
}

// dim Z = d + sum 2k_i when each A_i is a (2k_i+1)-manifold and L is a
// sphere triangulation (unverified hypothesis).
inline long long manifold_dimension(const SimplicialComplex& L, std::span<const int> k) {
    detail::require_length(L.vertex_count(), static_cast<int>(k.size()), "k-tuple");
    long long dim = L.top_degree();
    for (int ki : k) {
        if (ki < 0) fail(errc::invalid_argument, "k entries must be nonnegative");
        dim += 2LL * ki;
    }
    return dim;
}

inline long long manifold_dimension(const SimplicialComplex& L, const std::vector<int>& k) {
    return manifold_dimension(L, std::span<const int>(k));
}

struct EccCdReport {
    Int chi_z;              // chi(Z_L(M, dM)) by the manifold closed form
    int c = 0;              // d = 2c
    long long sum_k = 0;
    Int cd_quantity;        // h_L(-1)
    int ecc_sign = 0;       // sign of (-1)^{c + sum k} chi(Z)
    int cd_sign = 0;        // sign of (-1)^c h_L(-1)
    bool boundary_product_zero = false;  // e(dM)_[m] == 0
    bool verdicts_agree = false;         // ecc_sign == cd_sign whenever e(dM)_[m] != 0
    std::string unchecked_hypothesis;
};

// Relates the Euler Characteristic Conjecture for Z_L(M, dM) to the
// Charney-Davis sign of L. Requires even d = 2c and, per factor,
// (-1)^{k_i} chi(dM_i) >= 0. Whenever e(dM)_[m] != 0 the two sign verdicts
// must coincide; that is asserted, not merely reported.
inline EccCdReport ecc_cd_equivalence_report(const SimplicialComplex& L,
                                             const ManifoldPairSpec& spec) {
    detail::validate_manifold_spec(L, spec);
    const int d = L.top_degree();
    if (d % 2 != 0) fail(errc::odd_d, "top degree d = ", d, " is odd; the report needs d = 2c");
    const int m = L.vertex_count();
    for (int i = 0; i < m; ++i) {
        const Int& chi_b = spec.chi_boundary[static_cast<std::size_t>(i)];
        const bool wrong_sign =
            (spec.k[static_cast<std::size_t>(i)] % 2 == 0) ? (chi_b < 0) : (chi_b > 0);
        if (wrong_sign)
            fail(errc::hypothesis_violated, "factor ", i + 1, ": (-1)^k_i * chi(boundary) = ",
                 ((spec.k[static_cast<std::size_t>(i)] % 2 == 0) ? chi_b : Int(-chi_b)).str(),
                 " < 0");
    }

    EccCdReport report;
    report.c = d / 2;
    for (int ki : spec.k) report.sum_k += ki;
    report.chi_z = chi_manifold_case(L, spec);
    report.cd_quantity = charney_davis_quantity(L);

    const bool flip_ecc = (report.c + report.sum_k) % 2 != 0;
    report.ecc_sign = flip_ecc ? -report.chi_z.sign() : report.chi_z.sign();
    const bool flip_cd = report.c % 2 != 0;
    report.cd_sign = flip_cd ? -report.cd_quantity.sign() : report.cd_quantity.sign();

    Int boundary_product = 1;
    for (const Int& chi_b : spec.chi_boundary) boundary_product *= chi_b;
    report.boundary_product_zero = boundary_product.is_zero();
    report.verdicts_agree = report.boundary_product_zero || report.ecc_sign == report.cd_sign;
    internal_check(report.verdicts_agree,
                   "ECC and Charney-Davis sign verdicts disagree with nonzero e(dM)_[m]");
    report.unchecked_hypothesis =
        "assumes L is a flag triangulation of a (d-1)-sphere, or a generalized homology "
        "sphere with at least one k_i positive, and that each (M_i, dM_i) is aspherical "
        "with pi_1-injective boundary components; none of this is verified here";
    return report;
}

}  // namespace polyprod
