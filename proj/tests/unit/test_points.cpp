#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "qcy/cycert.hpp"
#include "qcy/points.hpp"

#include <numeric>
#include <set>

using namespace qcy;

namespace {

MultilinearPoly::Monomial slots(std::initializer_list<std::pair<Int, std::size_t>> s) { return MultilinearPoly::Monomial(s); }

/// All supports on which every triple cocycle of the exponent matrix vanishes, by brute force.
std::set<std::vector<std::size_t>> admissible_oracle(const IntMatrix& e, Int n) {
  std::set<std::vector<std::size_t>> out;
  const std::size_t m = e.size();
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < m; ++i)
      if (mask & (1u << i)) s.push_back(i);
    bool ok = true;
    for (std::size_t i : s)
      for (std::size_t j : s)
        for (std::size_t k : s)
          if (i != j && j != k && i != k && oracle::mod(e[i][j] + e[j][k] + e[k][i], n) != 0) ok = false;
    if (ok) out.insert(s);
  }
  return out;
}

}  // namespace

TEST(Multilinearize, Cube) {
  auto s = AlgebraSpec::commutative({1, 1, 1});
  auto m = multilinearize(SkewPoly::monomial(s, {3, 0, 0}), s);
  ASSERT_EQ(m.terms().size(), 1u);
  EXPECT_EQ(m.terms().begin()->first, slots({{0, 0}, {1, 0}, {2, 0}}));
}

TEST(Multilinearize, CommutatorWord) {
  const Int n = 3;
  auto q = CycInt::root(RootScalar(3, 1), n);
  auto p = WordPoly::word(2, n, {1, 0}, CycInt::one(n)) - WordPoly::word(2, n, {0, 1}, q);
  auto m = multilinearize(p);
  MultilinearPoly expected(n);
  expected.add_term(slots({{0, 1}, {1, 0}}), CycInt::one(n));
  expected.add_term(slots({{0, 0}, {1, 1}}), -q);
  EXPECT_EQ(m, expected);
}

TEST(Multilinearize, QuarticFermat) {
  auto a = fixtures::segre_sign_matrix();
  auto m = multilinearize(fermat(a), a);
  MultilinearPoly expected(2);
  for (std::size_t i = 0; i < 4; ++i) expected.add_term(slots({{0, i}, {1, i}, {2, i}, {3, i}}), CycInt::one(2));
  EXPECT_EQ(m, expected);
}

TEST(Multilinearize, WeightedUnsupported) {
  auto k3 = fixtures::weighted_k3();
  EXPECT_THROW(multilinearize(fermat(k3), k3), Unsupported);
  WordPoly mixed = WordPoly::word(2, 1, {0}, CycInt::one(1)) + WordPoly::word(2, 1, {0, 1}, CycInt::one(1));
  EXPECT_THROW(multilinearize(mixed), InvalidArgument);
}

TEST(Multilinearize, ProductIsShiftedProduct) {
  const Int n = 4;
  auto u = WordPoly::word(3, n, {2, 0}, CycInt::root(RootScalar(4, 1), n)) + WordPoly::word(3, n, {1, 1}, CycInt::integer(n, 2));
  auto v = WordPoly::word(3, n, {0, 1, 2}, CycInt::one(n)) - WordPoly::word(3, n, {2, 2, 2}, CycInt::root(RootScalar(4, 3), n));
  EXPECT_EQ(multilinearize(u * v), multilinearize(u) * multilinearize(v).shifted(2));
}

TEST(Multilinearize, EvaluationOnConstantSequence) {
  // f^mul on a constant sequence (alpha, alpha, ...) equals the commutative Fermat value.
  auto s = AlgebraSpec::commutative({1, 1, 1});
  auto m = multilinearize(fermat(s), s);
  std::vector<CycInt> alpha{CycInt::integer(1, 1), CycInt::integer(1, 2), CycInt::integer(1, -3)};
  EXPECT_EQ(m.evaluate({alpha, alpha, alpha}), CycInt::integer(1, 1 + 8 - 27));
}

TEST(Special, Examples) {
  EXPECT_TRUE(is_special(fixtures::to_scalars(IntMatrix(4, IntVector(4, 0)), 1)));
  EXPECT_FALSE(is_special(fixtures::sign_chart()));
  EXPECT_FALSE(is_special(fixtures::weighted_k3().scalars()));
  // The chart parameters of the weighted K3 example have the single cocycle w^6 = 1.
  EXPECT_TRUE(is_special(chart_parameters(fixtures::weighted_k3(), 0).q));
}

TEST(AdmissibleSupports, Examples) {
  EXPECT_EQ(admissible_supports(fixtures::to_scalars(IntMatrix(4, IntVector(4, 0)), 1)).size(), 15u);
  auto general = admissible_supports(fixtures::segre_sign_matrix().scalars());
  EXPECT_EQ(general.size(), 10u);
  for (const auto& s : general) EXPECT_LE(s.size(), 2u);
  auto chart = admissible_supports(fixtures::sign_chart());
  EXPECT_EQ(chart.size(), 6u);
  for (const auto& s : chart) EXPECT_LE(s.size(), 2u);
}

TEST(AdmissibleSupports, MatchOracleAndAreClosedUnderSubsets) {
  std::uint64_t state = 7;
  auto next = [&] {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<Int>(state >> 33);
  };
  for (int trial = 0; trial < 200; ++trial) {
    const Int n = 2 + next() % 5;
    const std::size_t m = 3 + static_cast<std::size_t>(next() % 3);
    IntMatrix e(m, IntVector(m, 0));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) {
        e[i][j] = next() % n;
        e[j][i] = oracle::mod(-e[i][j], n);
      }
    auto got = admissible_supports(fixtures::to_scalars(e, n));
    auto want = admissible_oracle(e, n);
    EXPECT_EQ(std::set<std::vector<std::size_t>>(got.begin(), got.end()), want);
    for (const auto& s : got)
      for (std::size_t drop = 0; drop < s.size() && s.size() > 1; ++drop) {
        auto sub = s;
        sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
        EXPECT_TRUE(want.count(sub));
      }
  }
}

TEST(StratumDimension, Examples) {
  const std::vector<Int> h{4, 4, 4, 4};
  EXPECT_FALSE(stratum_dimension({0}, h, true));
  EXPECT_EQ(stratum_dimension({0, 1}, h, true), 0);
  EXPECT_EQ(stratum_dimension({0, 1, 2}, h, true), 1);
  EXPECT_EQ(stratum_dimension({0, 1, 2}, h, false), 2);
  EXPECT_EQ(stratum_dimension({3}, h, false), 0);
  EXPECT_THROW(stratum_dimension({}, h, true), InvalidArgument);
}

TEST(StratumDimension, MonotoneInSupportSize) {
  const std::vector<Int> h(6, 3);
  for (bool eq : {false, true}) {
    Int prev = -1;
    for (std::size_t k = 1; k <= 6; ++k) {
      Support s(k);
      std::iota(s.begin(), s.end(), 0);
      auto d = stratum_dimension(s, h, eq).value_or(-1);
      EXPECT_GE(d, prev);
      prev = d;
    }
  }
}

TEST(PointSchemeDim, SignMatrixWithCubic) {
  EXPECT_EQ(point_scheme_dim_product(fixtures::segre_sign_matrix(), AlgebraSpec::commutative({1, 1, 1}), EquationShape::fermat,
                                     EquationShape::fermat),
            1);
}

TEST(PointSchemeDim, BothCommutative) {
  EXPECT_EQ(point_scheme_dim_product(AlgebraSpec::commutative({1, 1, 1, 1}), AlgebraSpec::commutative({1, 1, 1}),
                                     EquationShape::fermat, EquationShape::fermat),
            3);
}

TEST(PointSchemeDim, SingleVariableSecondFactor) {
  EXPECT_EQ(point_scheme_dim_product(fixtures::segre_sign_matrix(), AlgebraSpec::commutative({1}), EquationShape::fermat,
                                     EquationShape::none),
            0);
}

TEST(PointSchemeDim, MixedCoupling) {
  // Commutative k[x_0..x_3] with its cubic, B commutative on three variables, g = sum x_l y_l^3:
  // full supports give 2 + 2 - 1 = 3.
  EXPECT_EQ(point_scheme_dim_product(AlgebraSpec::commutative({1, 1, 1, 1}), AlgebraSpec::commutative({1, 1, 1}),
                                     EquationShape::fermat, EquationShape::mixed),
            3);
  EXPECT_THROW(point_scheme_dim_product(AlgebraSpec::commutative({1, 1}), AlgebraSpec::commutative({1, 1}), EquationShape::mixed,
                                        EquationShape::none),
               InvalidArgument);
  EXPECT_THROW(point_scheme_dim_product(fixtures::weighted_k3(), AlgebraSpec::commutative({1}), EquationShape::fermat,
                                        EquationShape::none),
               Unsupported);
}

TEST(PiDegree, Examples) {
  EXPECT_EQ(pi_degree(fixtures::to_scalars(IntMatrix(3, IntVector(3, 0)), 1)), 1);
  EXPECT_EQ(pi_degree(chart_parameters(fixtures::weighted_k3(), 0).q), 3);
  EXPECT_EQ(pi_degree(fixtures::to_scalars({{0, 1}, {1, 0}}, 2)), 2);
}

TEST(PiDegree, SquareOfImageSizeAndTrivialityCriterion) {
  std::uint64_t state = 11;
  auto next = [&] {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<Int>(state >> 33);
  };
  for (int trial = 0; trial < 300; ++trial) {
    const Int n = 1 + next() % 6;
    const std::size_t m = 2 + static_cast<std::size_t>(next() % 2);
    IntMatrix e(m, IntVector(m, 0));
    bool trivial = true;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) {
        e[i][j] = next() % n;
        e[j][i] = oracle::mod(-e[i][j], n);
        trivial = trivial && e[i][j] == 0;
      }
    const Int p = pi_degree(fixtures::to_scalars(e, n));
    EXPECT_EQ(p * p, oracle::image_size(e, n));
    EXPECT_EQ(p == 1, trivial);
  }
}

TEST(ChartSimpleCount, Examples) {
  auto c0 = chart_simple_count(chart_parameters(fixtures::weighted_k3(), 0).q, {6, 3, 3});
  EXPECT_EQ(c0.count, PointCount::finite(12));
  EXPECT_EQ(c0.loci.size(), 3u);
  auto w2 = RootScalar(3, 2);
  auto c1 = chart_simple_count({{RootScalar(), w2.inverse()}, {w2, RootScalar()}}, {3, 3});
  EXPECT_EQ(c1.count, PointCount::finite(6));
  auto inf = chart_simple_count(fixtures::to_scalars({{0, 0}, {0, 0}}, 1), {2, 2});
  EXPECT_TRUE(inf.count.is_infinite());
  EXPECT_EQ(inf.infinite_pair, (std::pair<std::size_t, std::size_t>{0, 1}));
}

TEST(TwoVar, Classification) {
  auto c = classify_two_var(4, 6);
  EXPECT_EQ(c.g, 2);
  EXPECT_EQ(c.a_reduced, 2);
  EXPECT_EQ(c.b_reduced, 3);
  EXPECT_EQ(c.x_line_shifts, 6);
  EXPECT_EQ(c.y_line_shifts, 4);
  EXPECT_EQ(c.family_shifts, 2);
  EXPECT_TRUE(c.all_thin);
  EXPECT_FALSE(classify_two_var(1, 3).all_thin);
  EXPECT_THROW(classify_two_var(0, 3), InvalidArgument);
}

TEST(TwoVar, FermatCounts) {
  EXPECT_EQ(two_var_fermat_count(2, 2, 6), 6);
  EXPECT_EQ(two_var_fermat_count(1, 1, 4), 4);
  EXPECT_EQ(two_var_fermat_count(1, 3, 6), 2);
  EXPECT_THROW(two_var_fermat_count(2, 4, 6), DivisibilityError);
  EXPECT_THROW(two_var_fermat_count(4, 6, 8), DivisibilityError);
}

TEST(TwoVar, FermatCountMatchesFactorCount) {
  // x^{d/a} + y^{d/b} as a polynomial in X = x^{b'}, Y = y^{a'} has degree t = d/(a b'):
  // one linear factor per root of X^t + Y^t.
  for (Int a = 1; a <= 8; ++a)
    for (Int b = 1; b <= 8; ++b)
      for (Int d = 1; d <= 48; ++d) {
        if (d % a || d % b) {
          EXPECT_THROW(two_var_fermat_count(a, b, d), DivisibilityError);
          continue;
        }
        const Int g = std::gcd(a, b), bp = b / g;
        ASSERT_EQ((d / a) % bp, 0);
        EXPECT_EQ(two_var_fermat_count(a, b, d), (d / a / bp) * g);
      }
}

TEST(Census, WeightedK3) {
  auto r = census_weighted_surface(fixtures::weighted_k3());
  ASSERT_EQ(r.charts.size(), 3u);
  EXPECT_EQ(r.charts[0].result.count, PointCount::finite(12));
  EXPECT_EQ(r.charts[1].result.count, PointCount::finite(6));
  EXPECT_EQ(r.charts[2].result.count, PointCount::finite(6));
  EXPECT_EQ(r.total, PointCount::finite(24));
  EXPECT_FALSE(r.infinite_chart);
}

TEST(Census, Weights1113) {
  AlgebraSpec s({1, 1, 1, 3}, 2, IntMatrix{{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}});
  ASSERT_TRUE(certify_weighted(s).is_cy());
  auto r = census_weighted_surface(s);
  EXPECT_EQ(r.charts[0].result.count, PointCount::finite(14));
  EXPECT_EQ(r.charts[1].result.count, PointCount::finite(8));
  EXPECT_EQ(r.charts[2].result.count, PointCount::finite(2));
  EXPECT_EQ(r.total, PointCount::finite(24));
}

TEST(Census, CommutativeIsInfiniteInFirstChart) {
  auto r = census_weighted_surface(AlgebraSpec::commutative({1, 1, 2, 2}));
  EXPECT_TRUE(r.total.is_infinite());
  EXPECT_EQ(r.infinite_chart, 0);
  EXPECT_EQ(r.charts[0].result.infinite_pair, (std::pair<std::size_t, std::size_t>{0, 1}));
}

TEST(Census, RejectsOtherShapes) {
  EXPECT_THROW(census_weighted_surface(AlgebraSpec::commutative({1, 2, 3, 6})), InvalidArgument);
  EXPECT_THROW(census_weighted_surface(AlgebraSpec::commutative({1, 1, 2, 5})), DivisibilityError);
}
