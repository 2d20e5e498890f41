#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "qcy/cycert.hpp"
#include "qcy/points/census.hpp"
#include "qcy/qalgebra.hpp"

namespace qcy {

/// Sorted positive weights a_0 <= ... <= a_n with gcd 1.
struct WeightSystem {
  std::vector<Int> weights;
  Int degree = 0;
  /// Every a_i divides the degree.
  bool divisible = false;
  /// Listed in reference_weight_list().
  bool in_reference = false;
};

/// Published weight systems for four-variable Fermat-type surfaces, some of which fail divisibility.
inline const std::vector<std::vector<Int>>& reference_weight_list() {
  static const std::vector<std::vector<Int>> list{{1, 1, 1, 1}, {1, 1, 1, 3}, {1, 1, 2, 2},  {1, 1, 2, 4},
                                                  {1, 1, 2, 5}, {1, 1, 4, 6}, {1, 2, 3, 6},  {1, 3, 3, 4},
                                                  {2, 3, 3, 4}, {1, 2, 6, 9}, {2, 3, 10, 15}, {1, 6, 14, 21}};
  return list;
}

/// Status of one reference entry relative to an enumeration.
struct ReferenceEntry {
  enum class Status { found, divisibility_discrepancy, out_of_bound, wrong_length };
  std::vector<Int> weights;
  Status status = Status::found;
  /// For a discrepancy: the weights that do not divide the degree.
  std::vector<Int> non_divisors;
};

inline const char* to_string(ReferenceEntry::Status s) {
  switch (s) {
    case ReferenceEntry::Status::found: return "found";
    case ReferenceEntry::Status::divisibility_discrepancy: return "divisibility-discrepancy";
    case ReferenceEntry::Status::out_of_bound: return "out-of-bound";
    case ReferenceEntry::Status::wrong_length: return "wrong-length";
  }
  return "unknown";
}

struct WeightEnumeration {
  Int n_vars = 0, bound = 0;
  std::vector<WeightSystem> systems;
  std::vector<ReferenceEntry> reference;
};

inline bool is_cy_weight_system(const std::vector<Int>& w) {
  if (w.empty()) return false;
  Int g = 0, d = 0;
  for (Int a : w) {
    if (a < 1) return false;
    g = std::gcd(g, a);
    d = checked_add(d, a);
  }
  if (g != 1) return false;
  return std::all_of(w.begin(), w.end(), [d](Int a) { return d % a == 0; });
}

/// All sorted n_vars-tuples with entries in [1, bound], gcd 1 and every entry dividing the sum,
/// in lexicographic order.
inline WeightEnumeration enumerate_cy_weights(Int n_vars, Int bound) {
  if (n_vars < 2) throw InvalidArgument("n_vars must be at least 2");
  if (bound < 1) throw InvalidArgument("bound must be at least 1");
  WeightEnumeration out;
  out.n_vars = n_vars;
  out.bound = bound;
  const auto& ref = reference_weight_list();
  std::vector<Int> w;
  std::function<void(Int)> extend = [&](Int lo) {
    if (static_cast<Int>(w.size()) == n_vars) {
      if (!is_cy_weight_system(w)) return;
      WeightSystem s{w, std::accumulate(w.begin(), w.end(), Int{0}), true, false};
      s.in_reference = std::find(ref.begin(), ref.end(), w) != ref.end();
      out.systems.push_back(std::move(s));
      return;
    }
    for (Int a = lo; a <= bound; ++a) {
      w.push_back(a);
      extend(a);
      w.pop_back();
    }
  };
  extend(1);

  for (const auto& r : ref) {
    ReferenceEntry e{r, ReferenceEntry::Status::found, {}};
    const Int d = std::accumulate(r.begin(), r.end(), Int{0});
    for (Int a : r)
      if (d % a != 0 && std::find(e.non_divisors.begin(), e.non_divisors.end(), a) == e.non_divisors.end())
        e.non_divisors.push_back(a);
    if (static_cast<Int>(r.size()) != n_vars)
      e.status = ReferenceEntry::Status::wrong_length;
    else if (!e.non_divisors.empty())
      e.status = ReferenceEntry::Status::divisibility_discrepancy;
    else if (*std::max_element(r.begin(), r.end()) > bound)
      e.status = ReferenceEntry::Status::out_of_bound;
    out.reference.push_back(std::move(e));
  }
  return out;
}

namespace detail {

/// Permutations s of 0..n-1 with w[s(i)] == w[i].
inline std::vector<std::vector<std::size_t>> weight_preserving_permutations(const std::vector<Int>& w) {
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < w.size(); ++i) {
    auto it = std::find_if(classes.begin(), classes.end(), [&](const auto& c) { return w[c.front()] == w[i]; });
    if (it == classes.end())
      classes.push_back({i});
    else
      it->push_back(i);
  }
  std::vector<std::vector<std::size_t>> out{std::vector<std::size_t>(w.size())};
  std::iota(out.front().begin(), out.front().end(), 0);
  for (const auto& c : classes) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& base : out) {
      auto images = c;
      do {
        auto p = base;
        for (std::size_t k = 0; k < c.size(); ++k) p[c[k]] = images[k];
        next.push_back(std::move(p));
      } while (std::next_permutation(images.begin(), images.end()));
    }
    out = std::move(next);
  }
  return out;
}

inline IntMatrix relabel(const IntMatrix& e, const std::vector<std::size_t>& p) {
  IntMatrix out(e.size(), IntVector(e.size()));
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = 0; j < e.size(); ++j) out[i][j] = e[p[i]][p[j]];
  return out;
}

}  // namespace detail

/// Lex-minimal relabeling of the exponent matrix under variable permutations that keep the weights.
inline AlgebraSpec canonical_form(const AlgebraSpec& spec) {
  IntMatrix best = spec.exponents();
  for (const auto& p : detail::weight_preserving_permutations(spec.weights()))
    best = std::min(best, detail::relabel(spec.exponents(), p));
  return AlgebraSpec(spec.weights(), spec.order(), best);
}

/// Searches larger than this are refused.
constexpr Int kMaxSearchCandidates = 50'000'000;

/// Every CY spec with the given weights and exponent matrix mod N, one per orbit of
/// weight-preserving relabelings, sorted by exponent matrix.
///
/// q_{ij}^{h_i} = q_{ij}^{h_j} = 1 confines entry e_{ij} to multiples of N / gcd(N, h_i, h_j),
/// so only those values are visited.
inline std::vector<AlgebraSpec> search_q_params(const std::vector<Int>& weights, Int order) {
  if (order < 1) throw InvalidArgument("order must be positive");
  const AlgebraSpec probe = AlgebraSpec::commutative(weights, order);
  const std::size_t n = weights.size();
  std::vector<Int> h(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto hi = probe.fermat_exponent(i);
    if (!hi)
      throw DivisibilityError("weight a_" + std::to_string(i) + " = " + std::to_string(weights[i]) +
                              " does not divide d = " + std::to_string(probe.degree()));
    h[i] = *hi;
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<Int> step;
  Int candidates = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Int g = std::gcd(order, std::gcd(h[i], h[j]));
      pairs.emplace_back(i, j);
      step.push_back(order / g);
      candidates = checked_mul(candidates, g);
      if (candidates > kMaxSearchCandidates) throw Unsupported("search space exceeds " + std::to_string(kMaxSearchCandidates) + " matrices");
    }

  std::vector<AlgebraSpec> out;
  IntMatrix e(n, IntVector(n, 0));
  std::function<void(std::size_t)> fill = [&](std::size_t k) {
    if (k == pairs.size()) {
      AlgebraSpec spec(weights, order, e);
      if (canonical_form(spec).exponents() != spec.exponents()) return;
      if (!certify_weighted(spec).is_cy()) return;
      out.push_back(std::move(spec));
      return;
    }
    const auto [i, j] = pairs[k];
    for (Int v = 0; v < order; v += step[k]) {
      e[i][j] = v;
      e[j][i] = (order - v) % order;
      fill(k + 1);
    }
    e[i][j] = e[j][i] = 0;
  };
  fill(0);
  std::sort(out.begin(), out.end(), [](const AlgebraSpec& a, const AlgebraSpec& b) { return a.exponents() < b.exponents(); });
  return out;
}

struct SweepRow {
  AlgebraSpec spec;
  CensusReport census;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  std::size_t finite_rows = 0;
  /// Finite rows whose total differs from 24.
  std::vector<std::size_t> off_total_rows;
};

constexpr Int kExpectedPointTotal = 24;

/// Census of every searched CY spec for each weight system of shape (1, 1, a, b). The order
/// defaults to the degree of each weight system. `on_row` sees every row as it is produced.
inline SweepResult sweep_census(const std::vector<std::vector<Int>>& weight_list, std::optional<Int> order = std::nullopt,
                                const std::function<void(const SweepRow&)>& on_row = {}) {
  SweepResult result;
  for (const auto& w : weight_list) {
    if (w.size() != 4 || w[0] != 1 || w[1] != 1) throw InvalidArgument("sweep needs weights of shape (1, 1, a, b)");
    const Int n = order.value_or(std::accumulate(w.begin(), w.end(), Int{0}));
    for (auto& spec : search_q_params(w, n)) {
      SweepRow row{spec, census_weighted_surface(spec)};
      if (!row.census.total.is_infinite()) {
        ++result.finite_rows;
        if (row.census.total.value() != kExpectedPointTotal) result.off_total_rows.push_back(result.rows.size());
      }
      if (on_row) on_row(row);
      result.rows.push_back(std::move(row));
    }
  }
  return result;
}

/// Closed-form census total d + 2d/a + 2d/b + d g^2/(a b) for weights (1, 1, a, b).
inline Int census_chart_sum(Int a, Int b) {
  const Int d = 2 + a + b, g = std::gcd(a, b);
  if (d % a != 0 || d % b != 0) throw DivisibilityError("a and b must divide d = " + std::to_string(d));
  return d + 2 * (d / a) + 2 * (d / b) + d * g * g / (a * b);
}

}  // namespace qcy
