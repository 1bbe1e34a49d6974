#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "fixtures.hpp"
#include "polyprod/euler.hpp"

using namespace polyprod;

namespace {

EulerVector ev(std::vector<long long> values) {
    EulerVector out;
    for (long long v : values) out.chi.push_back(Int(v));
    return out;
}

ManifoldPairSpec boundary_spheres(int m) {
    // every boundary an S^0: chi = 2, k_i = 0
    ManifoldPairSpec spec;
    spec.k.assign(static_cast<std::size_t>(m), 0);
    spec.chi_boundary.assign(static_cast<std::size_t>(m), Int(2));
    return spec;
}

TEST(ChiPolyhedralProduct, FullSimplexGivesProductOfChiA) {
    std::mt19937_64 rng(43);
    for (int m = 1; m <= 5; ++m) {
        const auto L = fixtures::full_simplex(m);
        const auto eA = EulerVector(fixtures::random_int_tuple(rng, m, -4, 4));
        const auto eB = EulerVector(fixtures::random_int_tuple(rng, m, -4, 4));
        Int expected = 1;
        for (const Int& chi : eA.chi) expected *= chi;
        EXPECT_EQ(chi_polyhedral_product(L, eA, eB), expected);
    }
}

TEST(ChiPolyhedralProduct, EmptyOnlyGivesProductOfChiB) {
    std::mt19937_64 rng(47);
    for (int m = 1; m <= 5; ++m) {
        const auto L = SimplicialComplex::empty_only(m);
        const auto eA = EulerVector(fixtures::random_int_tuple(rng, m, -4, 4));
        const auto eB = EulerVector(fixtures::random_int_tuple(rng, m, -4, 4));
        Int expected = 1;
        for (const Int& chi : eB.chi) expected *= chi;
        EXPECT_EQ(chi_polyhedral_product(L, eA, eB), expected);
    }
}

TEST(ChiPolyhedralProduct, IntervalPairOnTwoDisjointVerticesIsCircle) {
    EXPECT_EQ(chi_polyhedral_product(fixtures::disjoint_points(2), ev({1, 1}), ev({2, 2})), 0);
}

TEST(ChiPolyhedralProduct, MismatchedLengthsRejected) {
    EXPECT_THROW(chi_polyhedral_product(fixtures::cycle(4), ev({1, 1}), ev({2, 2, 2, 2})),
                 DomainError);
}

TEST(ChiPointsCase, SpecExamples) {
    EXPECT_EQ(chi_points_case(fixtures::cycle(5), ev({1, 1, 1, 1, 1})), 1);
    EXPECT_EQ(chi_points_case(fixtures::disjoint_points(2), ev({0, 0})), -1);
    EXPECT_EQ(chi_points_case(fixtures::full_simplex(2), ev({0, 0})), 0);
}

TEST(ChiConeCase, SpecExamples) {
    EXPECT_EQ(chi_cone_case(fixtures::full_simplex(1), {Int(1)}), 1);
    EXPECT_EQ(chi_cone_case(fixtures::disjoint_points(2), {Int(1), Int(1)}), 0);
    EXPECT_EQ(chi_cone_case(fixtures::disjoint_points(3), {Int(1), Int(1), Int(1)}), -4);
}

TEST(ChiConeCase, RejectsNonPositiveQ) {
    try {
        chi_cone_case(fixtures::disjoint_points(2), {Int(1), Int(0)});
        FAIL() << "expected NonPositiveQ";
    } catch (const DomainError& e) {
        EXPECT_EQ(e.code(), errc::non_positive_q);
    }
}

TEST(ChiManifoldCase, CycleFixtures) {
    EXPECT_EQ(chi_manifold_case(fixtures::cycle(4), boundary_spheres(4)), 0);
    EXPECT_EQ(chi_manifold_case(fixtures::cycle(5), boundary_spheres(5)), -8);
}

TEST(ChiManifoldCase, ZeroBoundaryFactorKillsChi) {
    auto spec = boundary_spheres(4);
    spec.chi_boundary[2] = 0;
    EXPECT_EQ(chi_manifold_case(fixtures::cycle(4), spec), 0);
}

TEST(ChiManifoldCase, OddBoundaryEulerRejected) {
    auto spec = boundary_spheres(4);
    spec.chi_boundary[1] = 3;
    try {
        chi_manifold_case(fixtures::cycle(4), spec);
        FAIL() << "expected OddBoundaryEuler";
    } catch (const DomainError& e) {
        EXPECT_EQ(e.code(), errc::odd_boundary_euler);
    }
}

// Each corollary must reproduce the main formula under its substitution.
TEST(Corollaries, AgreeWithTheoremOnRandomInstances) {
    std::mt19937_64 rng(53);
    for (int round = 0; round < 120; ++round) {
        const int m = 1 + static_cast<int>(fixtures::rand_below(rng, 6));
        const auto L = (round % 9 == 0) ? SimplicialComplex::empty_only(m)
                                        : fixtures::random_complex(rng, m);

        const auto eA = EulerVector(fixtures::random_int_tuple(rng, m, -4, 4));
        EXPECT_EQ(chi_points_case(L, eA),
                  chi_polyhedral_product(L, eA, EulerVector::constant(m, 1)));

        const auto q = fixtures::random_int_tuple(rng, m, 1, 5);
        EulerVector one_plus_q;
        for (const Int& qi : q) one_plus_q.chi.push_back(qi + 1);
        EXPECT_EQ(chi_cone_case(L, q),
                  chi_polyhedral_product(L, EulerVector::constant(m, 1), one_plus_q));

        ManifoldPairSpec spec;
        EulerVector half, whole;
        for (int i = 0; i < m; ++i) {
            const Int chi_a = fixtures::random_int_tuple(rng, 1, -4, 4)[0];
            spec.k.push_back(static_cast<int>(fixtures::rand_below(rng, 3)));
            spec.chi_boundary.push_back(2 * chi_a);
            half.chi.push_back(chi_a);
            whole.chi.push_back(2 * chi_a);
        }
        EXPECT_EQ(chi_manifold_case(L, spec), chi_polyhedral_product(L, half, whole));
    }
}

TEST(Corollaries, ChiIsMultiplicativeOverJoins) {
    std::mt19937_64 rng(59);
    for (int round = 0; round < 40; ++round) {
        const int m1 = 1 + static_cast<int>(fixtures::rand_below(rng, 4));
        const int m2 = 1 + static_cast<int>(fixtures::rand_below(rng, 4));
        const auto L1 = fixtures::random_complex(rng, m1);
        const auto L2 = fixtures::random_complex(rng, m2);
        const auto eA1 = EulerVector(fixtures::random_int_tuple(rng, m1, -3, 3));
        const auto eB1 = EulerVector(fixtures::random_int_tuple(rng, m1, -3, 3));
        const auto eA2 = EulerVector(fixtures::random_int_tuple(rng, m2, -3, 3));
        const auto eB2 = EulerVector(fixtures::random_int_tuple(rng, m2, -3, 3));
        EulerVector eA = eA1, eB = eB1;
        eA.chi.insert(eA.chi.end(), eA2.chi.begin(), eA2.chi.end());
        eB.chi.insert(eB.chi.end(), eB2.chi.begin(), eB2.chi.end());
        EXPECT_EQ(chi_polyhedral_product(join(L1, L2), eA, eB),
                  chi_polyhedral_product(L1, eA1, eB1) * chi_polyhedral_product(L2, eA2, eB2));
    }
}

TEST(Corollaries, ConstantQConeCaseMatchesUnivariateRoute) {
    std::mt19937_64 rng(61);
    for (int round = 0; round < 30; ++round) {
        const int m = 1 + static_cast<int>(fixtures::rand_below(rng, 6));
        const auto L = fixtures::random_complex(rng, m);
        const long long q = 1 + static_cast<long long>(fixtures::rand_below(rng, 5));
        const auto lhs = chi_cone_case(L, std::vector<Int>(static_cast<std::size_t>(m), Int(q)));
        const auto poly =
            pow(UniPoly::one_minus_t(), m - L.top_degree()) * h_polynomial(L);
        EXPECT_EQ(lhs, eval_uni_int(poly, Int(-q)));
    }
}

TEST(CharneyDavis, Fixtures) {
    EXPECT_EQ(charney_davis_quantity(fixtures::cycle(4)), 0);
    EXPECT_EQ(charney_davis_quantity(fixtures::cycle(5)), -1);
    EXPECT_EQ(charney_davis_quantity(fixtures::cross_polytope_boundary(4)), 0);
}

TEST(CdSignCheck, EvenDegreeCases) {
    const auto square = cd_sign_check(fixtures::cycle(4));
    EXPECT_TRUE(square.applicable());
    EXPECT_EQ(square.quantity, 0);
    EXPECT_EQ(*square.c, 1);
    EXPECT_TRUE(*square.satisfied);

    const auto pentagon = cd_sign_check(fixtures::cycle(5));
    EXPECT_EQ(pentagon.quantity, -1);
    EXPECT_TRUE(*pentagon.satisfied);
}

TEST(CdSignCheck, OddDegreeNotApplicable) {
    const auto check = cd_sign_check(fixtures::full_simplex(1));
    EXPECT_FALSE(check.applicable());
    EXPECT_FALSE(check.c.has_value());
    EXPECT_FALSE(check.satisfied.has_value());
}

TEST(ManifoldDimension, Examples) {
    EXPECT_EQ(manifold_dimension(fixtures::cycle(4), std::vector<int>{0, 0, 0, 0}), 2);
    EXPECT_EQ(manifold_dimension(fixtures::cycle(5), std::vector<int>{1, 0, 0, 0, 0}), 4);
}

TEST(ManifoldDimension, ParityDependsOnlyOnD) {
    std::mt19937_64 rng(67);
    for (int round = 0; round < 30; ++round) {
        const int m = 1 + static_cast<int>(fixtures::rand_below(rng, 6));
        const auto L = fixtures::random_complex(rng, m);
        std::vector<int> k;
        for (int i = 0; i < m; ++i) k.push_back(static_cast<int>(fixtures::rand_below(rng, 4)));
        EXPECT_EQ(((manifold_dimension(L, k) % 2) + 2) % 2, L.top_degree() % 2);
    }
}

TEST(EccCdReport, SquareAndPentagon) {
    const auto square = ecc_cd_equivalence_report(fixtures::cycle(4), boundary_spheres(4));
    EXPECT_EQ(square.chi_z, 0);
    EXPECT_EQ(square.cd_quantity, 0);
    EXPECT_EQ(square.ecc_sign, 0);
    EXPECT_EQ(square.cd_sign, 0);
    EXPECT_TRUE(square.verdicts_agree);

    const auto pentagon = ecc_cd_equivalence_report(fixtures::cycle(5), boundary_spheres(5));
    EXPECT_EQ(pentagon.chi_z, -8);
    EXPECT_EQ(pentagon.c, 1);
    EXPECT_EQ(pentagon.ecc_sign, 1);
    EXPECT_EQ(pentagon.cd_sign, 1);
    EXPECT_TRUE(pentagon.verdicts_agree);
    EXPECT_FALSE(pentagon.unchecked_hypothesis.empty());
}

TEST(EccCdReport, ZeroBoundaryIsTriviallyConsistent) {
    auto spec = boundary_spheres(4);
    spec.chi_boundary[0] = 0;
    const auto report = ecc_cd_equivalence_report(fixtures::cycle(4), spec);
    EXPECT_EQ(report.chi_z, 0);
    EXPECT_TRUE(report.boundary_product_zero);
    EXPECT_TRUE(report.verdicts_agree);
}

TEST(EccCdReport, OddDRejected) {
    try {
        ecc_cd_equivalence_report(fixtures::full_simplex(1), boundary_spheres(1));
        FAIL() << "expected OddD";
    } catch (const DomainError& e) {
        EXPECT_EQ(e.code(), errc::odd_d);
    }
}

TEST(EccCdReport, HypothesisViolationRejected) {
    auto spec = boundary_spheres(4);
    spec.k[1] = 1;  // (-1)^1 * 2 < 0
    try {
        ecc_cd_equivalence_report(fixtures::cycle(4), spec);
        FAIL() << "expected HypothesisViolated";
    } catch (const DomainError& e) {
        EXPECT_EQ(e.code(), errc::hypothesis_violated);
    }
}

// Remark-level sign relation: with every (-1)^{k_i} chi(dM_i) > 0 and even
// d, the ECC sign of Z equals the Charney-Davis sign of L.
TEST(EccCdReport, SignRelationOnRandomFlagComplexes) {
    std::mt19937_64 rng(71);
    int tested = 0;
    while (tested < 60) {
        const int m = 2 + static_cast<int>(fixtures::rand_below(rng, 5));
        const auto L = fixtures::random_flag_complex(rng, m);
        if (L.top_degree() % 2 != 0) continue;
        ManifoldPairSpec spec;
        for (int i = 0; i < m; ++i) {
            const int ki = static_cast<int>(fixtures::rand_below(rng, 3));
            const Int magnitude = 2 * (1 + static_cast<long long>(fixtures::rand_below(rng, 4)));
            spec.k.push_back(ki);
            spec.chi_boundary.push_back(ki % 2 == 0 ? magnitude : -magnitude);
        }
        const auto report = ecc_cd_equivalence_report(L, spec);
        EXPECT_FALSE(report.boundary_product_zero);
        EXPECT_EQ(report.ecc_sign, report.cd_sign);
        EXPECT_TRUE(report.verdicts_agree);
        ++tested;
    }
}

}  // namespace
