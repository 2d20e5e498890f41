#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "qcy/cycert.hpp"

using namespace qcy;

namespace {

const RootScalar kOne = RootScalar::one(1);

}  // namespace

TEST(CertifySegre, SignMatrixWithCommutativeCubic) {
  auto cert = certify_segre(fixtures::segre_sign_matrix(), AlgebraSpec::commutative({1, 1, 1}));
  EXPECT_EQ(cert.verdict, Verdict::cy);
  EXPECT_EQ(cert.expected_dimension, 3);
  ASSERT_EQ(cert.witness.size(), 2u);
  EXPECT_EQ(cert.witness[0], kOne);
  EXPECT_EQ(cert.witness[1], kOne);
  EXPECT_TRUE(witness_verifies(cert));
}

TEST(CertifySegre, BothCommutative) {
  EXPECT_TRUE(certify_segre(AlgebraSpec::commutative({1, 1, 1}), AlgebraSpec::commutative({1, 1, 1, 1})).is_cy());
}

TEST(CertifySegre, NonConstantColumnsAreReported) {
  // Only q_23 = q_32 = -1: column products (1, 1, -1, -1).
  AlgebraSpec a({1, 1, 1, 1}, 2, IntMatrix{{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}});
  auto cert = certify_segre(a, AlgebraSpec::commutative({1, 1, 1}));
  EXPECT_EQ(cert.verdict, Verdict::not_cy);
  EXPECT_TRUE(cert.witness.empty());
  EXPECT_EQ(cert.offending_columns, (std::vector<std::pair<std::size_t, std::size_t>>{{0, 2}, {0, 3}}));
  EXPECT_EQ(cert.column_products[0][3], RootScalar(2, 1));
}

TEST(CertifySegre, MajorityValueDecidesOffendingColumn) {
  AlgebraSpec a({1, 1, 1, 1}, 4, IntMatrix{{0, 0, 1, 3}, {0, 0, 0, 0}, {3, 0, 0, 2}, {1, 0, 2, 0}});
  auto cert = certify_segre(a, AlgebraSpec::commutative({1, 1, 1}));
  auto p = cert.column_products[0];
  ASSERT_EQ(cert.verdict, Verdict::not_cy);
  // (1, 1, zeta_4^3, zeta_4): columns 2 and 3 differ from the majority value 1.
  EXPECT_EQ(p[0], kOne);
  EXPECT_EQ(cert.offending_columns, (std::vector<std::pair<std::size_t, std::size_t>>{{0, 2}, {0, 3}}));
}

TEST(CertifySegre, HypothesisViolations) {
  AlgebraSpec bad({1, 1, 1}, 2, IntMatrix{{0, 1, 0}, {0, 0, 0}, {0, 0, 0}});
  auto cert = certify_segre(bad, AlgebraSpec::commutative({1, 1}));
  EXPECT_EQ(cert.verdict, Verdict::hypotheses_violated);
  ASSERT_FALSE(cert.violations.empty());
  EXPECT_EQ(cert.violations[0].rfind("A: antisymmetry", 0), 0u);
  // zeta_4 fails q^3 = 1 on three variables.
  AlgebraSpec fourth({1, 1, 1}, 4, IntMatrix{{0, 1, 0}, {3, 0, 0}, {0, 0, 0}});
  EXPECT_EQ(certify_segre(AlgebraSpec::commutative({1, 1}), fourth).verdict, Verdict::hypotheses_violated);
  EXPECT_EQ(certify_segre(AlgebraSpec::commutative({1, 2, 3}), AlgebraSpec::commutative({1, 1})).verdict,
            Verdict::hypotheses_violated);
}

TEST(CertifyMixed, CommutativeB) {
  auto cert = certify_mixed(AlgebraSpec::commutative({1, 1, 1, 1}), AlgebraSpec::commutative({1, 1, 1}), MixedShape::wide);
  EXPECT_TRUE(cert.is_cy());
  EXPECT_EQ(cert.expected_dimension, 3);
  auto narrow = certify_mixed(AlgebraSpec::commutative({1, 1, 1}), AlgebraSpec::commutative({1, 1, 1}), MixedShape::narrow);
  EXPECT_TRUE(narrow.is_cy());
  EXPECT_EQ(narrow.expected_dimension, 2);
}

TEST(CertifyMixed, CubeRootMatrixWithConstantColumns) {
  AlgebraSpec b({1, 1, 1}, 3, fixtures::weighted_k3_chart_exponents());
  auto cert = certify_mixed(AlgebraSpec::commutative({1, 1, 1, 1}), b, MixedShape::wide);
  EXPECT_TRUE(cert.is_cy());
  EXPECT_TRUE(witness_verifies(cert));
}

TEST(CertifyMixed, PerturbedEntryViolatesHypotheses) {
  auto e = fixtures::weighted_k3_chart_exponents();
  e[0][1] = 0;
  auto cert = certify_mixed(AlgebraSpec::commutative({1, 1, 1, 1}), AlgebraSpec({1, 1, 1}, 3, e), MixedShape::wide);
  EXPECT_EQ(cert.verdict, Verdict::hypotheses_violated);
}

TEST(CertifyMixed, ShapeMismatchAndNonCommutativeA) {
  EXPECT_EQ(certify_mixed(AlgebraSpec::commutative({1, 1, 1}), AlgebraSpec::commutative({1, 1, 1}), MixedShape::wide).verdict,
            Verdict::hypotheses_violated);
  AlgebraSpec b({1, 1, 1}, 3, fixtures::weighted_k3_chart_exponents());
  EXPECT_EQ(certify_mixed(b, AlgebraSpec::commutative({1, 1, 1}), MixedShape::narrow).verdict,
            Verdict::hypotheses_violated);
}

TEST(CertifyMixed, NotCy) {
  // A single non-trivial pair: column products (w^2, w, 1).
  AlgebraSpec b({1, 1, 1}, 3, IntMatrix{{0, 1, 0}, {2, 0, 0}, {0, 0, 0}});
  auto cert = certify_mixed(AlgebraSpec::commutative({1, 1, 1, 1}), b, MixedShape::wide);
  EXPECT_EQ(cert.verdict, Verdict::not_cy);
}

TEST(CertifyWeighted, WeightedK3) {
  auto cert = certify_weighted(fixtures::weighted_k3());
  ASSERT_EQ(cert.verdict, Verdict::cy);
  EXPECT_EQ(cert.witness[0], RootScalar(3, 1));
  EXPECT_EQ(cert.expected_dimension, 2);
  EXPECT_TRUE(witness_verifies(cert));
}

TEST(CertifyWeighted, FermatQuintic) {
  auto cert = certify_weighted(AlgebraSpec::commutative({1, 1, 1, 1, 1}));
  ASSERT_TRUE(cert.is_cy());
  EXPECT_EQ(cert.witness[0], kOne);
  EXPECT_EQ(cert.expected_dimension, 3);
}

TEST(CertifyWeighted, ConflictingDegreeOneConstraints) {
  // Column products (w, w^2, w, w^2): columns 0 and 1 force c = w and c = w^2.
  AlgebraSpec s({1, 1, 2, 2}, 3, IntMatrix{{0, 0, 0, 2}, {0, 0, 0, 1}, {0, 0, 0, 2}, {1, 2, 1, 0}});
  auto p = column_products(s);
  ASSERT_EQ(p, (std::vector<RootScalar>{RootScalar(3, 1), RootScalar(3, 2), RootScalar(3, 1), RootScalar(3, 2)}));
  auto cert = certify_weighted(s);
  EXPECT_EQ(cert.verdict, Verdict::not_cy);
  EXPECT_EQ(cert.offending_columns, (std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}}));
  EXPECT_FALSE(witness_verifies(cert));
}

TEST(CertifyWeighted, HypothesisViolationsListed) {
  auto cert = certify_weighted(AlgebraSpec::commutative({1, 1, 2, 5}));
  EXPECT_EQ(cert.verdict, Verdict::hypotheses_violated);
  EXPECT_EQ(cert.violations.size(), 2u);
}

TEST(CertifyWeighted, WitnessNeedsHigherOrderRoot) {
  // Every column product is -1 and every weight is 2, so c^2 = -1.
  AlgebraSpec s({2, 2, 2, 2}, 2, IntMatrix{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}});
  auto cert = certify_weighted(s);
  ASSERT_TRUE(cert.is_cy());
  EXPECT_EQ(cert.witness[0].order(), 4);
  EXPECT_TRUE(witness_verifies(cert));
}
