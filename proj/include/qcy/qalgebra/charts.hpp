#pragma once

#include <string>
#include <vector>

#include "qcy/qalgebra/automorphism.hpp"

namespace qcy {

/// Quantum parameters of the degree-zero part of C[x_i^{-1}], generated by
/// y_j = x_j / x_i^{a_j} for j != i.
struct ChartParameters {
  std::size_t inverted = 0;
  /// Original variable index of each chart generator, in increasing order.
  std::vector<std::size_t> indices;
  /// q[k][l]: y_k y_l = q[k][l] y_l y_k, same convention as AlgebraSpec.
  ScalarMatrix q;

  /// The chart algebra as an ungraded spec (all weights 1) in the order of `parent_order`.
  AlgebraSpec as_spec(Int parent_order) const {
    IntMatrix e(q.size());
    for (std::size_t k = 0; k < q.size(); ++k)
      for (const auto& s : q[k]) e[k].push_back(s.rescaled(parent_order).exponent());
    return AlgebraSpec(std::vector<Int>(q.size(), 1), parent_order, std::move(e));
  }
};

/// q'_{kj} = q_{ik}^{a_j} q_{kj} q_{ji}^{a_k} on the chart where x_i (weight 1) is inverted.
inline ChartParameters chart_parameters(const AlgebraSpec& spec, std::size_t inverted) {
  if (inverted >= spec.size()) throw InvalidArgument("chart index out of range");
  if (spec.weight(inverted) != 1)
    throw Unsupported("chart x_" + std::to_string(inverted) + " has weight " + std::to_string(spec.weight(inverted)) +
                      "; only weight-one charts are supported");
  ChartParameters chart;
  chart.inverted = inverted;
  for (std::size_t j = 0; j < spec.size(); ++j)
    if (j != inverted) chart.indices.push_back(j);
  const std::size_t i = inverted;
  for (std::size_t k : chart.indices) {
    std::vector<RootScalar> row;
    for (std::size_t j : chart.indices)
      row.push_back(spec.q(i, k).pow(spec.weight(j)) * spec.q(k, j) * spec.q(j, i).pow(spec.weight(k)));
    chart.q.push_back(std::move(row));
  }
  return chart;
}

/// Parameters of C/(x_0)[x_1^{-1}]_0: the chart of x_1 on the hyperplane x_0 = 0.
inline ChartParameters second_chart_parameters(const AlgebraSpec& spec) {
  if (spec.size() < 2) throw InvalidArgument("second chart needs at least two variables");
  std::vector<std::size_t> rest;
  for (std::size_t j = 1; j < spec.size(); ++j) rest.push_back(j);
  ChartParameters chart = chart_parameters(spec.restricted(rest), 0);
  chart.inverted = 1;
  for (auto& idx : chart.indices) ++idx;
  return chart;
}

/// The single scalar q_{13}^{a_2} q_{32} q_{21}^{a_3} of the second chart of a four-variable spec:
/// z_3 z_2 = s z_2 z_3.
inline RootScalar second_chart_scalar(const AlgebraSpec& spec) {
  if (spec.size() != 4) throw InvalidArgument("second chart scalar is defined for four variables");
  return second_chart_parameters(spec).q[1][0];
}

/// Integer exponent matrix of a scalar matrix written in the lcm order.
struct ExponentMatrix {
  Int order = 1;
  IntMatrix exponents;
};

inline ExponentMatrix to_exponent_matrix(const ScalarMatrix& q) {
  ExponentMatrix out;
  for (const auto& row : q)
    for (const auto& s : row) out.order = lcm_checked(out.order, s.order());
  for (const auto& row : q) {
    IntVector r;
    for (const auto& s : row) r.push_back(s.rescaled(out.order).exponent());
    out.exponents.push_back(std::move(r));
  }
  return out;
}

inline void require_antisymmetric(const ScalarMatrix& q) {
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q[i].size() != q.size()) throw InvalidArgument("scalar matrix must be square");
    if (!q[i][i].is_one()) throw InvalidArgument("scalar matrix needs a unit diagonal");
    for (std::size_t j = 0; j < i; ++j)
      if (!(q[i][j] * q[j][i]).is_one()) throw InvalidArgument("scalar matrix must satisfy q_ij q_ji = 1");
  }
}

/// Centre of a quantum torus/affine space with parameters chartQ, described by the lattice
/// of exponents e whose monomial X^e is central.
struct CenterLattice {
  Int order = 1;
  IntMatrix exponent_matrix;
  /// Hermite normal form basis.
  IntMatrix generators;
  /// True when the basis is diagonal, i.e. the centre is a polynomial ring in u_i = X_i^{k_i}.
  bool diagonal = true;
  IntVector diagonal_powers;
  /// Basis vectors with more than one non-zero entry (mixed central monomials).
  IntMatrix mixed_generators;
  std::string presentation_hint;
};

/// Number of monomials of total degree <= max_degree where lattice membership and a direct
/// centrality check disagree.
inline Int center_membership_mismatches(const ScalarMatrix& chart_q, const IntMatrix& generators, Int max_degree) {
  const ExponentMatrix em = to_exponent_matrix(chart_q);
  const std::size_t m = chart_q.size();
  const AlgebraSpec algebra(std::vector<Int>(m, 1), em.order, em.exponents);
  Int mismatches = 0;
  IntVector e(m, 0);
  for (;;) {
    Int total = 0;
    for (Int x : e) total += x;
    if (total <= max_degree) {
      const bool central = is_central(SkewPoly::monomial(algebra, e), algebra);
      if (central != lattice_contains(generators, e)) ++mismatches;
    }
    std::size_t k = 0;
    while (k < m && ++e[k] > max_degree) e[k++] = 0;
    if (k == m) break;
  }
  return mismatches;
}

/// Lattice {e : X^e central}. X^e commutes with y_k iff prod_i q_{ik}^{e_i} = 1, so the
/// lattice is the kernel of the exponent matrix mod N. The result is cross-checked against
/// direct centrality on every monomial of total degree <= 6.
inline CenterLattice center_lattice(const ScalarMatrix& chart_q) {
  require_antisymmetric(chart_q);
  const ExponentMatrix em = to_exponent_matrix(chart_q);
  CenterLattice out;
  out.order = em.order;
  out.exponent_matrix = em.exponents;
  out.generators = kernel_lattice(em.exponents, em.order);
  for (std::size_t r = 0; r < out.generators.size(); ++r) {
    Int nonzero = 0;
    for (Int x : out.generators[r]) nonzero += x != 0;
    out.diagonal_powers.push_back(out.generators[r][r]);
    if (nonzero > 1) {
      out.diagonal = false;
      out.mixed_generators.push_back(out.generators[r]);
    }
  }
  if (out.diagonal) {
    std::string s = "polynomial ring in";
    for (std::size_t i = 0; i < out.diagonal_powers.size(); ++i)
      s += " u" + std::to_string(i + 1) + "=X" + std::to_string(i + 1) + "^" + std::to_string(out.diagonal_powers[i]);
    out.presentation_hint = s;
  } else {
    out.presentation_hint = "not a polynomial ring in pure powers: mixed central monomials present";
  }
  if (center_membership_mismatches(chart_q, out.generators, 6) != 0)
    throw InternalDefect("centre lattice disagrees with direct centrality checks");
  return out;
}

}  // namespace qcy
