#pragma once

#include <gtest/gtest.h>

#include <random>
#include <string>

#include "qcy/qalgebra.hpp"
#include "qcy/search.hpp"

namespace gen {

using qcy::AlgebraSpec;
using qcy::Int;
using qcy::IntMatrix;
using qcy::IntVector;

constexpr int kCases = 1000;

/// Deterministic source of random test inputs.
class Source {
 public:
  explicit Source(std::uint64_t seed) : rng_(seed) {}

  Int range(Int lo, Int hi) { return std::uniform_int_distribution<Int>(lo, hi)(rng_); }
  bool coin() { return range(0, 1) == 1; }
  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(range(0, static_cast<Int>(v.size()) - 1))];
  }

  qcy::RootScalar scalar(Int order) { return qcy::RootScalar(order, range(0, order - 1)); }

  IntVector vector(std::size_t n, Int lo, Int hi) {
    IntVector v(n);
    for (auto& x : v) x = range(lo, hi);
    return v;
  }

  IntMatrix matrix(std::size_t rows, std::size_t cols, Int lo, Int hi) {
    IntMatrix m(rows);
    for (auto& r : m) r = vector(cols, lo, hi);
    return m;
  }

  /// Antisymmetric exponent matrix mod n.
  IntMatrix antisymmetric(std::size_t m, Int n) {
    IntMatrix e(m, IntVector(m, 0));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) {
        e[i][j] = range(0, n - 1);
        e[j][i] = (n - e[i][j]) % n;
      }
    return e;
  }

  AlgebraSpec spec(std::vector<Int> weights, Int n) {
    const std::size_t m = weights.size();
    return AlgebraSpec(std::move(weights), n, antisymmetric(m, n));
  }

  /// A spec satisfying the Fermat hypotheses: weights dividing their sum, entries killed by h_i and h_j.
  AlgebraSpec hypothesis_spec(const std::vector<Int>& weights, Int n) {
    AlgebraSpec probe = AlgebraSpec::commutative(weights, n);
    const std::size_t m = weights.size();
    IntMatrix e(m, IntVector(m, 0));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) {
        const Int g = std::gcd(n, std::gcd(*probe.fermat_exponent(i), *probe.fermat_exponent(j)));
        e[i][j] = range(0, g - 1) * (n / g);
        e[j][i] = (n - e[i][j]) % n;
      }
    return AlgebraSpec(weights, n, e);
  }

  /// A Calabi-Yau weight system with at most `vars` variables and entries up to `bound`.
  std::vector<Int> cy_weights(Int vars, Int bound) {
    static std::map<std::pair<Int, Int>, std::vector<std::vector<Int>>> cache;
    auto& list = cache[{vars, bound}];
    if (list.empty())
      for (const auto& s : qcy::enumerate_cy_weights(vars, bound).systems) list.push_back(s.weights);
    return pick(list);
  }

  qcy::CycInt cyc(Int order, Int lo = -3, Int hi = 3) {
    return qcy::CycInt::from_poly(order, vector(static_cast<std::size_t>(order), lo, hi));
  }

  /// Random element with at most `terms` monomials of total exponent at most `max_exp` per variable.
  qcy::SkewPoly poly(const AlgebraSpec& s, int terms, Int max_exp) {
    qcy::SkewPoly p = qcy::SkewPoly::zero(s);
    for (int t = 0; t < terms; ++t) p.add_term(vector(s.size(), 0, max_exp), cyc(s.order(), -2, 2));
    return p;
  }

  /// Homogeneous element of the given weighted degree (possibly zero when no monomial fits).
  qcy::SkewPoly homogeneous(const AlgebraSpec& s, Int degree, int terms) {
    qcy::SkewPoly p = qcy::SkewPoly::zero(s);
    for (int t = 0; t < terms; ++t) {
      qcy::Exponents e(s.size(), 0);
      Int left = degree;
      for (int guard = 0; guard < 64 && left > 0; ++guard) {
        const std::size_t i = static_cast<std::size_t>(range(0, static_cast<Int>(s.size()) - 1));
        if (s.weight(i) <= left) {
          ++e[i];
          left -= s.weight(i);
        }
      }
      if (left == 0) p.add_term(e, cyc(s.order(), -2, 2));
    }
    return p;
  }

 private:
  std::mt19937_64 rng_;
};

/// Runs `body` on kCases seeds, stopping at the first failing case and naming its seed.
template <class Body>
void for_cases(std::uint64_t base_seed, Body body, int cases = kCases) {
  for (int k = 0; k < cases; ++k) {
    const std::uint64_t seed = base_seed * 1000003ULL + static_cast<std::uint64_t>(k);
    Source src(seed);
    SCOPED_TRACE("case seed " + std::to_string(seed));
    body(src);
    if (::testing::Test::HasFailure()) return;
  }
}

}  // namespace gen
