#pragma once

#include <optional>
#include <vector>

#include "qcy/qalgebra/skew_poly.hpp"

namespace qcy {

/// Diagonal graded automorphism x_i -> lambda_i x_i.
struct GradedAut {
  std::vector<RootScalar> scalars;

  static GradedAut identity(std::size_t n) { return {std::vector<RootScalar>(n)}; }

  std::size_t size() const { return scalars.size(); }

  bool is_identity() const {
    for (const auto& s : scalars)
      if (!s.is_one()) return false;
    return true;
  }

  /// All lambda_i equal: the automorphism scales every generator alike.
  bool is_constant() const {
    for (const auto& s : scalars)
      if (!(s == scalars.front())) return false;
    return true;
  }

  /// (this o other)(x_i) = lambda_i mu_i x_i.
  GradedAut compose(const GradedAut& other) const {
    if (other.size() != size()) throw InvalidArgument("automorphisms act on different numbers of variables");
    GradedAut out{scalars};
    for (std::size_t i = 0; i < size(); ++i) out.scalars[i] *= other.scalars[i];
    return out;
  }

  friend bool operator==(const GradedAut& a, const GradedAut& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!(a.scalars[i] == b.scalars[i])) return false;
    return true;
  }
};

/// x_k * p == p * x_k for every generator.
inline bool is_central(const SkewPoly& p, const AlgebraSpec& spec) {
  for (std::size_t k = 0; k < spec.size(); ++k) {
    const SkewPoly x = SkewPoly::variable(spec, k);
    if (!(multiply(x, p, spec) == multiply(p, x, spec))) return false;
  }
  return true;
}

/// The diagonal automorphism nu with x_k * p = p * nu(x_k) for all k, if p is normal
/// in that sense. Each monomial m of p gives nu_k = reorder(e_k, m) / reorder(m, e_k);
/// p is normal exactly when these agree across the support. The zero element gives the identity.
inline std::optional<GradedAut> is_normal(const SkewPoly& p, const AlgebraSpec& spec) {
  GradedAut nu = GradedAut::identity(spec.size());
  for (std::size_t k = 0; k < spec.size(); ++k) {
    Exponents ek(spec.size(), 0);
    ek[k] = 1;
    std::optional<RootScalar> lambda;
    for (const auto& [m, c] : p.terms()) {
      const RootScalar l = reorder_scalar(ek, m, spec) * reorder_scalar(m, ek, spec).inverse();
      if (lambda && !(*lambda == l)) return std::nullopt;
      lambda = l;
    }
    if (lambda) nu.scalars[k] = *lambda;
  }
  return nu;
}

/// Nakayama automorphism x_i -> (prod_j q_{ij}) x_i, i.e. the row products.
///
/// The weighted Calabi-Yau criterion is phrased with column products
/// prod_i q_{ij}; under q_{ij} q_{ji} = 1 those are the componentwise inverses.
inline GradedAut nakayama(const AlgebraSpec& spec) { return {row_products(spec)}; }

}  // namespace qcy
