#include <gtest/gtest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "qcy/cyclo.hpp"

using namespace qcy;

TEST(RootScalarLaws, AssociativityInverseAndRescaling) {
  gen::for_cases(1, [](gen::Source& g) {
    const Int n1 = g.range(1, 30), n2 = g.range(1, 30), n3 = g.range(1, 30);
    const RootScalar a = g.scalar(n1), b = g.scalar(n2), c = g.scalar(n3);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_TRUE((a * a.inverse()).is_one());
    // Multiplication adds exponents once both sides are written in the lcm order.
    const Int l = std::lcm(n1, n2);
    EXPECT_EQ((a * b).rescaled(l).exponent(), oracle::mod(a.rescaled(l).exponent() + b.rescaled(l).exponent(), l));
    const Int k = g.range(1, 5);
    EXPECT_EQ(a.rescaled(n1 * k), a);
    EXPECT_EQ(a.reduced(), a);
    const Int e = g.range(-40, 40);
    EXPECT_EQ(a.pow(e) * a.pow(-e), RootScalar::one());
  });
}

TEST(SolveRootSystemLaws, SolutionsVerifyAndNoneIsExhaustive) {
  int refuted = 0;
  gen::for_cases(2, [&](gen::Source& g) {
    std::vector<PowerConstraint> cs;
    const Int n = g.range(1, 12);
    const int count = static_cast<int>(g.range(1, 4));
    const bool planted = g.coin();
    const RootScalar hidden = g.scalar(n * g.range(1, 6));
    for (int k = 0; k < count; ++k) {
      const Int a = g.range(1, 6);
      cs.push_back({a, planted ? hidden.pow(a) : g.scalar(n)});
    }
    const auto solution = solve_root_system(cs);
    if (planted) { ASSERT_TRUE(solution.has_value()); }
    const Int m = root_system_modulus(cs);
    if (solution) {
      for (const auto& c : cs) EXPECT_EQ(solution->pow(c.power), c.value);
      EXPECT_EQ(m % solution->order(), 0);
      return;
    }
    ASSERT_LE(m, 10'000);
    ++refuted;
    for (Int x = 0; x < m; ++x) {
      const RootScalar c(m, x);
      bool all = true;
      for (const auto& pc : cs) all = all && c.pow(pc.power) == pc.value;
      ASSERT_FALSE(all) << "missed solution " << c;
    }
  });
  EXPECT_GT(refuted, 0);
}

TEST(ImageSizeLaws, EnumerationMatchesElementaryDivisors) {
  gen::for_cases(3, [](gen::Source& g) {
    const Int n = g.range(1, 9);
    const std::size_t m = static_cast<std::size_t>(g.range(1, 4));
    const IntMatrix h = g.matrix(m, m, -10, 10);
    const Int by_divisors = image_size_by_divisors(h, n);
    EXPECT_EQ(image_size_by_enumeration(h, n), by_divisors);
    EXPECT_EQ(oracle::image_size(h, n), by_divisors);
  });
}

TEST(KernelLatticeLaws, GeneratorsSolveAndEverySolutionIsReached) {
  gen::for_cases(4, [](gen::Source& g) {
    const Int n = g.range(1, 7);
    const std::size_t m = static_cast<std::size_t>(g.range(1, 3));
    const IntMatrix h = g.matrix(m, m, -6, 6);
    const IntMatrix basis = kernel_lattice(h, n);
    for (const auto& v : basis) EXPECT_TRUE(oracle::in_congruence_kernel(h, n, v));
    oracle::for_each_box_vector(m, 0, n - 1, [&](const std::vector<Int>& v) {
      EXPECT_EQ(lattice_contains(basis, v), oracle::in_congruence_kernel(h, n, v));
    });
  });
}

TEST(CycIntLaws, RingAxioms) {
  gen::for_cases(5, [](gen::Source& g) {
    const Int n = g.range(1, 12);
    const CycInt a = g.cyc(n), b = g.cyc(n), c = g.cyc(n);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(a * CycInt::one(n), a);
  });
}
