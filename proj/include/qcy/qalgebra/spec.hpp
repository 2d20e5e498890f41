#pragma once

#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "qcy/cyclo.hpp"

namespace qcy {

using ScalarMatrix = std::vector<std::vector<RootScalar>>;

/// A quantum weighted polynomial ring k<x_0..x_n> / (x_j x_i - q_{ji} x_i x_j), deg x_i = a_i.
///
/// Relation convention, used everywhere in the library:
///
///     x_j x_i = q_{ji} x_i x_j
///
/// Every q_{ij} is a root of unity zeta_N^{E_{ij}} for one common order N, so the
/// matrix is stored as the integer exponent matrix E (entries reduced mod N).
class AlgebraSpec {
 public:
  AlgebraSpec() = default;

  AlgebraSpec(std::vector<Int> weights, Int order, IntMatrix exponents)
      : weights_(std::move(weights)), order_(order), exponents_(std::move(exponents)) {
    if (order_ < 1) throw InvalidArgument("order must be positive");
    if (exponents_.size() != weights_.size())
      throw InvalidArgument("q matrix has " + std::to_string(exponents_.size()) + " rows but there are " +
                            std::to_string(weights_.size()) + " weights");
    for (const auto& row : exponents_)
      if (row.size() != weights_.size()) throw InvalidArgument("q matrix must be square");
    for (Int w : weights_)
      if (w < 1) throw InvalidArgument("weights must be positive");
    for (auto& row : exponents_)
      for (auto& e : row) e = mod_floor(e, order_);
  }

  /// The commutative weighted polynomial ring (all q_{ij} = 1).
  static AlgebraSpec commutative(std::vector<Int> weights, Int order = 1) {
    const std::size_t n = weights.size();
    return AlgebraSpec(std::move(weights), order, IntMatrix(n, IntVector(n, 0)));
  }

  /// Builds a spec from scalars of possibly different orders, written in the lcm order.
  static AlgebraSpec from_scalars(std::vector<Int> weights, const ScalarMatrix& q) {
    Int order = 1;
    for (const auto& row : q)
      for (const auto& s : row) order = lcm_checked(order, s.order());
    IntMatrix e(q.size());
    for (std::size_t i = 0; i < q.size(); ++i)
      for (const auto& s : q[i]) e[i].push_back(s.rescaled(order).exponent());
    return AlgebraSpec(std::move(weights), order, std::move(e));
  }

  std::size_t size() const { return weights_.size(); }
  const std::vector<Int>& weights() const { return weights_; }
  Int weight(std::size_t i) const { return weights_.at(i); }
  Int order() const { return order_; }
  const IntMatrix& exponents() const { return exponents_; }

  RootScalar q(std::size_t i, std::size_t j) const { return RootScalar(order_, exponents_.at(i).at(j)); }

  ScalarMatrix scalars() const {
    ScalarMatrix m(size());
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < size(); ++j) m[i].push_back(q(i, j));
    return m;
  }

  /// d = sum of the weights.
  Int degree() const { return std::accumulate(weights_.begin(), weights_.end(), Int{0}); }

  /// h_i = d / a_i when a_i divides d.
  std::optional<Int> fermat_exponent(std::size_t i) const {
    const Int d = degree();
    if (d % weight(i) != 0) return std::nullopt;
    return d / weight(i);
  }

  bool all_weights_one() const {
    for (Int w : weights_)
      if (w != 1) return false;
    return true;
  }

  bool is_commutative() const {
    for (const auto& row : exponents_)
      for (Int e : row)
        if (e != 0) return false;
    return true;
  }

  /// Spec with the transposed parameter matrix (q_{ij} replaced by q_{ji}).
  AlgebraSpec transposed() const {
    IntMatrix t(size(), IntVector(size()));
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < size(); ++j) t[i][j] = exponents_[j][i];
    return AlgebraSpec(weights_, order_, std::move(t));
  }

  /// Relabels variables: new x_k is old x_{perm[k]}.
  AlgebraSpec permuted(const std::vector<std::size_t>& perm) const {
    if (perm.size() != size()) throw InvalidArgument("permutation has the wrong length");
    std::vector<Int> w(size());
    IntMatrix e(size(), IntVector(size()));
    for (std::size_t k = 0; k < size(); ++k) {
      w[k] = weights_[perm[k]];
      for (std::size_t l = 0; l < size(); ++l) e[k][l] = exponents_[perm[k]][perm[l]];
    }
    return AlgebraSpec(std::move(w), order_, std::move(e));
  }

  /// The subalgebra on the listed variables, in the listed order.
  AlgebraSpec restricted(const std::vector<std::size_t>& indices) const {
    std::vector<Int> w;
    IntMatrix e;
    for (std::size_t i : indices) {
      w.push_back(weight(i));
      IntVector row;
      for (std::size_t j : indices) row.push_back(exponents_.at(i).at(j));
      e.push_back(std::move(row));
    }
    return AlgebraSpec(std::move(w), order_, std::move(e));
  }

  /// The same algebra with every scalar rewritten in order M (a multiple of order()).
  AlgebraSpec with_order(Int target_order) const {
    if (target_order % order_ != 0) throw OrderMismatch("target order is not a multiple of the spec order");
    IntMatrix e = exponents_;
    for (auto& row : e)
      for (auto& x : row) x *= target_order / order_;
    return AlgebraSpec(weights_, target_order, std::move(e));
  }

  friend bool operator==(const AlgebraSpec&, const AlgebraSpec&) = default;

 private:
  std::vector<Int> weights_;
  Int order_ = 1;
  IntMatrix exponents_;
};

/// A tensor B: variables of `a` first, then those of `b`; the two sets commute.
inline AlgebraSpec tensor_product(const AlgebraSpec& a, const AlgebraSpec& b) {
  const Int order = lcm_checked(a.order(), b.order());
  const std::size_t n = a.size() + b.size();
  std::vector<Int> w = a.weights();
  w.insert(w.end(), b.weights().begin(), b.weights().end());
  IntMatrix e(n, IntVector(n, 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) e[i][j] = a.exponents()[i][j] * (order / a.order());
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) e[a.size() + i][a.size() + j] = b.exponents()[i][j] * (order / b.order());
  return AlgebraSpec(std::move(w), order, std::move(e));
}

/// One failed hypothesis found by validate_spec.
struct Violation {
  enum class Kind { unit_diagonal, antisymmetry, weight_divides_degree, power_condition };
  Kind kind;
  std::vector<std::size_t> indices;
  std::string message;
};

inline const char* to_string(Violation::Kind k) {
  switch (k) {
    case Violation::Kind::unit_diagonal: return "unit-diagonal";
    case Violation::Kind::antisymmetry: return "antisymmetry";
    case Violation::Kind::weight_divides_degree: return "weight-divides-degree";
    case Violation::Kind::power_condition: return "power-condition";
  }
  return "unknown";
}

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks q_{ii} = 1 and q_{ij} q_{ji} = 1, and with `fermat_hypotheses` also
/// a_i | d and q_{ij}^{h_i} = q_{ij}^{h_j} = 1. Violations are collected, not thrown.
inline ValidationReport validate_spec(const AlgebraSpec& spec, bool fermat_hypotheses) {
  auto qname = [](std::size_t i, std::size_t j) { return "q(" + std::to_string(i) + "," + std::to_string(j) + ")"; };
  ValidationReport report;
  const std::size_t n = spec.size();
  for (std::size_t i = 0; i < n; ++i)
    if (!spec.q(i, i).is_one())
      report.violations.push_back({Violation::Kind::unit_diagonal, {i}, qname(i, i) + " != 1"});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!(spec.q(i, j) * spec.q(j, i)).is_one())
        report.violations.push_back({Violation::Kind::antisymmetry,
                                     {i, j},
                                     qname(i, j) + " * " + qname(j, i) + " != 1"});
  if (!fermat_hypotheses) return report;
  const Int d = spec.degree();
  bool divisible = true;
  for (std::size_t i = 0; i < n; ++i)
    if (!spec.fermat_exponent(i)) {
      divisible = false;
      report.violations.push_back({Violation::Kind::weight_divides_degree,
                                   {i},
                                   "a_" + std::to_string(i) + " = " + std::to_string(spec.weight(i)) +
                                       " does not divide d = " + std::to_string(d)});
    }
  if (!divisible) return report;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const RootScalar s = spec.q(i, j);
      if (!s.pow(*spec.fermat_exponent(i)).is_one() || !s.pow(*spec.fermat_exponent(j)).is_one())
        report.violations.push_back({Violation::Kind::power_condition,
                                     {i, j},
                                     qname(i, j) + " is not killed by h_" +
                                         std::to_string(i) + " and h_" + std::to_string(j)});
    }
  return report;
}

/// Products of the columns, p_j = prod_i q_{ij}.
inline std::vector<RootScalar> column_products(const AlgebraSpec& spec) {
  std::vector<RootScalar> p(spec.size(), RootScalar::one(spec.order()));
  for (std::size_t i = 0; i < spec.size(); ++i)
    for (std::size_t j = 0; j < spec.size(); ++j) p[j] *= spec.q(i, j);
  return p;
}

/// Products of the rows, prod_j q_{ij}.
inline std::vector<RootScalar> row_products(const AlgebraSpec& spec) {
  std::vector<RootScalar> p(spec.size(), RootScalar::one(spec.order()));
  for (std::size_t i = 0; i < spec.size(); ++i)
    for (std::size_t j = 0; j < spec.size(); ++j) p[i] *= spec.q(i, j);
  return p;
}

}  // namespace qcy
