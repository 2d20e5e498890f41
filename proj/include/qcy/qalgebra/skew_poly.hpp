#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <vector>

#include "qcy/qalgebra/spec.hpp"

namespace qcy {

/// Exponent vector of a normal-ordered monomial x_0^{e_0} ... x_n^{e_n}.
using Exponents = std::vector<Int>;

/// The scalar s with x^left * x^right = s * x^{left + right} in normal order.
///
/// Moving each x_j of the left factor past each x_i (i < j) of the right factor
/// picks up q_{ji}, so s = prod_{i<j} q_{ji}^{right_i * left_j}.
inline RootScalar reorder_scalar(const Exponents& left, const Exponents& right, const AlgebraSpec& spec) {
  const std::size_t n = spec.size();
  if (left.size() != n || right.size() != n) throw InvalidArgument("exponent vector length does not match the spec");
  const Int order = spec.order();
  Int e = 0;
  for (std::size_t j = 1; j < n; ++j) {
    if (left[j] == 0) continue;
    for (std::size_t i = 0; i < j; ++i) {
      if (right[i] == 0) continue;
      e = mod_floor(e + mod_floor(right[i] * left[j], order) * spec.exponents()[j][i], order);
    }
  }
  return RootScalar(order, e);
}

/// Normal-ordered element of the quantum polynomial ring with coefficients in Z[zeta_N].
/// No zero coefficient is ever stored.
class SkewPoly {
 public:
  using Terms = std::map<Exponents, CycInt>;

  SkewPoly() = default;
  SkewPoly(std::size_t variables, Int order) : variables_(variables), order_(order) {}

  static SkewPoly zero(const AlgebraSpec& spec) { return SkewPoly(spec.size(), spec.order()); }

  static SkewPoly monomial(const AlgebraSpec& spec, Exponents e, const CycInt& c) {
    SkewPoly p = zero(spec);
    p.add_term(std::move(e), c);
    return p;
  }

  static SkewPoly monomial(const AlgebraSpec& spec, Exponents e) {
    return monomial(spec, std::move(e), CycInt::one(spec.order()));
  }

  static SkewPoly one(const AlgebraSpec& spec) { return monomial(spec, Exponents(spec.size(), 0)); }

  static SkewPoly variable(const AlgebraSpec& spec, std::size_t i) {
    Exponents e(spec.size(), 0);
    e.at(i) = 1;
    return monomial(spec, std::move(e));
  }

  std::size_t variables() const { return variables_; }
  Int order() const { return order_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  void add_term(Exponents e, const CycInt& c) {
    if (e.size() != variables_) throw InvalidArgument("monomial has the wrong number of variables");
    if (c.order() != order_) throw OrderMismatch("coefficient order differs from the polynomial order");
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  /// Weighted degree when every term has the same one.
  std::optional<Int> homogeneous_degree(const std::vector<Int>& weights) const {
    std::optional<Int> deg;
    for (const auto& [e, c] : terms_) {
      Int d = 0;
      for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * weights.at(i);
      if (deg && *deg != d) return std::nullopt;
      deg = d;
    }
    return deg;
  }

  friend SkewPoly operator+(SkewPoly a, const SkewPoly& b) {
    for (const auto& [e, c] : b.terms_) a.add_term(e, c);
    return a;
  }

  friend SkewPoly operator-(SkewPoly a, const SkewPoly& b) {
    for (const auto& [e, c] : b.terms_) a.add_term(e, -c);
    return a;
  }

  friend SkewPoly operator*(const CycInt& s, const SkewPoly& p) {
    SkewPoly out(p.variables_, p.order_);
    for (const auto& [e, c] : p.terms_) out.add_term(e, s * c);
    return out;
  }

  friend bool operator==(const SkewPoly& a, const SkewPoly& b) {
    return a.variables_ == b.variables_ && a.order_ == b.order_ && a.terms_ == b.terms_;
  }

  friend std::ostream& operator<<(std::ostream& os, const SkewPoly& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (const auto& [e, c] : p.terms_) {
      os << (first ? "" : " + ") << c;
      first = false;
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] != 0) os << " x" << i << (e[i] > 1 ? "^" + std::to_string(e[i]) : "");
    }
    return os;
  }

 private:
  std::size_t variables_ = 0;
  Int order_ = 1;
  Terms terms_;
};

/// Normal-ordered product p * r.
inline SkewPoly multiply(const SkewPoly& p, const SkewPoly& r, const AlgebraSpec& spec) {
  if (p.variables() != spec.size() || r.variables() != spec.size()) throw InvalidArgument("polynomial/spec size mismatch");
  if (p.order() != spec.order() || r.order() != spec.order()) throw OrderMismatch("polynomial/spec order mismatch");
  std::vector<CycInt> roots;
  roots.reserve(static_cast<std::size_t>(spec.order()));
  for (Int k = 0; k < spec.order(); ++k) roots.push_back(CycInt::root(RootScalar(spec.order(), k), spec.order()));
  SkewPoly out = SkewPoly::zero(spec);
  for (const auto& [a, ca] : p.terms())
    for (const auto& [b, cb] : r.terms()) {
      Exponents sum(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) sum[i] = a[i] + b[i];
      const auto s = reorder_scalar(a, b, spec);
      out.add_term(std::move(sum), ca * cb * roots[static_cast<std::size_t>(s.exponent())]);
    }
  return out;
}

/// f = sum_i x_i^{h_i} with h_i = d / a_i.
inline SkewPoly fermat(const AlgebraSpec& spec) {
  SkewPoly f = SkewPoly::zero(spec);
  for (std::size_t i = 0; i < spec.size(); ++i) {
    auto h = spec.fermat_exponent(i);
    if (!h)
      throw DivisibilityError("weight a_" + std::to_string(i) + " = " + std::to_string(spec.weight(i)) +
                              " does not divide d = " + std::to_string(spec.degree()));
    Exponents e(spec.size(), 0);
    e[i] = *h;
    f.add_term(std::move(e), CycInt::one(spec.order()));
  }
  return f;
}

}  // namespace qcy
