#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qcy/qalgebra.hpp"

namespace qcy {

enum class Verdict { cy, not_cy, hypotheses_violated };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::cy: return "CY";
    case Verdict::not_cy: return "not-CY";
    case Verdict::hypotheses_violated: return "hypotheses-violated";
  }
  return "unknown";
}

enum class Criterion { segre, mixed, weighted };

inline const char* to_string(Criterion c) {
  switch (c) {
    case Criterion::segre: return "segre";
    case Criterion::mixed: return "mixed";
    case Criterion::weighted: return "weighted";
  }
  return "unknown";
}

/// Two shapes of the mixed complete intersection: the commutative factor has n+2
/// variables with a degree n+1 Fermat form, or n+1 variables with a degree n form.
enum class MixedShape { wide, narrow };

/// Short human-readable identity of a spec: weights, order and exponent rows.
inline std::string spec_identity(const AlgebraSpec& spec) {
  std::ostringstream os;
  os << "w=(";
  for (std::size_t i = 0; i < spec.size(); ++i) os << (i ? "," : "") << spec.weight(i);
  os << ");N=" << spec.order() << ";E=";
  for (std::size_t i = 0; i < spec.size(); ++i) {
    os << (i ? "/" : "");
    for (std::size_t j = 0; j < spec.size(); ++j) os << (j ? "," : "") << spec.exponents()[i][j];
  }
  return os.str();
}

struct CyCertificate {
  Criterion criterion = Criterion::weighted;
  std::vector<std::string> spec_ids;
  Verdict verdict = Verdict::hypotheses_violated;
  /// Weighted: {c}. Segre: the common column products of each factor. Mixed: the common column product of B.
  std::vector<RootScalar> witness;
  /// Column products of each noncommutative factor, in factor order.
  std::vector<std::vector<RootScalar>> column_products;
  /// Columns (factor, j) that break the criterion, for not-CY verdicts.
  std::vector<std::pair<std::size_t, std::size_t>> offending_columns;
  std::vector<std::string> violations;
  /// Weights of the weighted criterion, the powers c is raised to.
  std::vector<Int> weights;
  /// Dimension the resulting scheme has when CY.
  Int expected_dimension = 0;

  bool is_cy() const { return verdict == Verdict::cy; }
};

namespace detail {

inline void append_violations(CyCertificate& cert, const ValidationReport& r, const std::string& prefix) {
  for (const auto& v : r.violations) cert.violations.push_back(prefix + to_string(v.kind) + ": " + v.message);
}

/// Columns whose product differs from the most frequent value (earliest on ties).
inline std::vector<std::size_t> non_constant_columns(const std::vector<RootScalar>& products) {
  std::vector<std::size_t> count(products.size(), 0);
  std::size_t best = 0;
  for (std::size_t i = 0; i < products.size(); ++i) {
    for (const auto& p : products) count[i] += p == products[i];
    if (count[i] > count[best]) best = i;
  }
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < products.size(); ++j)
    if (!(products[j] == products[best])) out.push_back(j);
  return out;
}

inline void require_central_fermat(const AlgebraSpec& spec) {
  if (!is_central(fermat(spec), spec))
    throw InternalDefect("Fermat element is not central although the hypotheses hold: " + spec_identity(spec));
}

inline ValidationReport validate_weight_one(const AlgebraSpec& spec) {
  ValidationReport r;
  for (std::size_t i = 0; i < spec.size(); ++i)
    if (spec.weight(i) != 1)
      r.violations.push_back({Violation::Kind::weight_divides_degree,
                              {i},
                              "a_" + std::to_string(i) + " = " + std::to_string(spec.weight(i)) + " but all weights must be 1"});
  if (!r.ok()) return r;
  return validate_spec(spec, true);
}

/// Checks one factor for constant column products and records the result.
inline bool constant_columns(CyCertificate& cert, const AlgebraSpec& spec, std::size_t factor) {
  auto products = column_products(spec);
  const auto bad = non_constant_columns(products);
  for (std::size_t j : bad) cert.offending_columns.emplace_back(factor, j);
  if (bad.empty() && !products.empty()) cert.witness.push_back(products.front().reduced());
  cert.column_products.push_back(std::move(products));
  return bad.empty();
}

}  // namespace detail

/// Tensor product of two quantum polynomial rings cut by their Fermat forms of bidegrees
/// (n+1, 0) and (0, m+1). CY iff each factor has constant column products.
inline CyCertificate certify_segre(const AlgebraSpec& a, const AlgebraSpec& b) {
  CyCertificate cert;
  cert.criterion = Criterion::segre;
  cert.spec_ids = {spec_identity(a), spec_identity(b)};
  cert.expected_dimension = static_cast<Int>(a.size() + b.size()) - 4;
  detail::append_violations(cert, detail::validate_weight_one(a), "A: ");
  detail::append_violations(cert, detail::validate_weight_one(b), "B: ");
  if (!cert.violations.empty()) return cert;
  detail::require_central_fermat(a);
  detail::require_central_fermat(b);
  const bool ca = detail::constant_columns(cert, a, 0);
  const bool cb = detail::constant_columns(cert, b, 1);
  cert.verdict = ca && cb ? Verdict::cy : Verdict::not_cy;
  if (!cert.is_cy()) cert.witness.clear();
  return cert;
}

/// Commutative A cut by a Fermat form, B quantum of n+1 variables, coupled by
/// g = sum_l x_l y_l^{n+1}. CY iff the column products of B are constant.
inline CyCertificate certify_mixed(const AlgebraSpec& a, const AlgebraSpec& b, MixedShape shape) {
  CyCertificate cert;
  cert.criterion = Criterion::mixed;
  cert.spec_ids = {spec_identity(a), spec_identity(b)};
  const Int n = static_cast<Int>(b.size()) - 1;
  cert.expected_dimension = shape == MixedShape::wide ? 2 * n - 1 : 2 * n - 2;
  if (!a.is_commutative()) cert.violations.push_back("A: must be commutative");
  if (!a.all_weights_one()) cert.violations.push_back("A: all weights must be 1");
  const std::size_t want = b.size() + (shape == MixedShape::wide ? 1 : 0);
  if (a.size() != want)
    cert.violations.push_back("A: expected " + std::to_string(want) + " variables for this shape, got " +
                              std::to_string(a.size()));
  if (b.size() < 2) cert.violations.push_back("B: needs at least two variables");
  detail::append_violations(cert, detail::validate_weight_one(b), "B: ");
  if (!cert.violations.empty()) return cert;
  detail::require_central_fermat(b);
  cert.verdict = detail::constant_columns(cert, b, 0) ? Verdict::cy : Verdict::not_cy;
  if (!cert.is_cy()) cert.witness.clear();
  return cert;
}

/// Quantum weighted polynomial ring cut by its Fermat form. CY iff some c satisfies
/// c^{a_j} = p_j for the column products p_j.
inline CyCertificate certify_weighted(const AlgebraSpec& spec) {
  CyCertificate cert;
  cert.criterion = Criterion::weighted;
  cert.spec_ids = {spec_identity(spec)};
  cert.weights = spec.weights();
  cert.expected_dimension = static_cast<Int>(spec.size()) - 2;
  detail::append_violations(cert, validate_spec(spec, true), "");
  if (spec.size() < 2) cert.violations.push_back("needs at least two variables");
  if (!cert.violations.empty()) return cert;
  detail::require_central_fermat(spec);
  auto products = column_products(spec);
  std::vector<PowerConstraint> constraints;
  for (std::size_t j = 0; j < spec.size(); ++j) constraints.push_back({spec.weight(j), products[j]});
  auto c = solve_root_system(constraints);
  if (c) {
    cert.verdict = Verdict::cy;
    cert.witness = {*c};
  } else {
    cert.verdict = Verdict::not_cy;
    // The first column at which the prefix system stops being solvable.
    for (std::size_t j = 1; j <= constraints.size(); ++j)
      if (!solve_root_system(std::span<const PowerConstraint>(constraints.data(), j))) {
        cert.offending_columns.emplace_back(0, j - 1);
        break;
      }
  }
  cert.column_products.push_back(std::move(products));
  return cert;
}

/// Re-checks a CY certificate against its recorded column products.
inline bool witness_verifies(const CyCertificate& cert) {
  if (!cert.is_cy()) return false;
  if (cert.criterion == Criterion::weighted) {
    if (cert.witness.size() != 1 || cert.column_products.size() != 1) return false;
    const auto& p = cert.column_products[0];
    if (cert.weights.size() != p.size()) return false;
    for (std::size_t j = 0; j < p.size(); ++j)
      if (!(cert.witness[0].pow(cert.weights[j]) == p[j])) return false;
    return true;
  }
  if (cert.witness.size() != cert.column_products.size()) return false;
  for (std::size_t f = 0; f < cert.witness.size(); ++f)
    for (const auto& p : cert.column_products[f])
      if (!(p == cert.witness[f])) return false;
  return true;
}

}  // namespace qcy
