#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcy/qalgebra.hpp"

namespace qcy {

/// q_{ij} q_{jk} q_{ki} for distinct i, j, k.
inline RootScalar triple_cocycle(const ScalarMatrix& q, std::size_t i, std::size_t j, std::size_t k) {
  return q[i][j] * q[j][k] * q[k][i];
}

/// Every triple cocycle equals 1. Reversing the orientation inverts the cocycle, so
/// increasing triples suffice.
inline bool is_special(const ScalarMatrix& q) {
  require_antisymmetric(q);
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = i + 1; j < q.size(); ++j)
      for (std::size_t k = j + 1; k < q.size(); ++k)
        if (!triple_cocycle(q, i, j, k).is_one()) return false;
  return true;
}

using Support = std::vector<std::size_t>;

inline bool is_admissible(const ScalarMatrix& q, const Support& s) {
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a + 1; b < s.size(); ++b)
      for (std::size_t c = b + 1; c < s.size(); ++c)
        if (!triple_cocycle(q, s[a], s[b], s[c]).is_one()) return false;
  return true;
}

constexpr std::size_t kMaxSupportVariables = 20;

/// Non-empty supports S on which every triple cocycle is 1, ordered by size and then
/// lexicographically. These are the coordinate strata that meet the point scheme.
inline std::vector<Support> admissible_supports(const ScalarMatrix& q) {
  require_antisymmetric(q);
  const std::size_t n = q.size();
  if (n > kMaxSupportVariables) throw InvalidArgument("too many variables to enumerate supports");
  std::vector<Support> out;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    Support s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::uint32_t{1} << i)) s.push_back(i);
    if (is_admissible(q, s)) out.push_back(std::move(s));
  }
  std::stable_sort(out.begin(), out.end(), [](const Support& a, const Support& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

/// Projective dimension of {t : t_i != 0 exactly for i in S} inside the zero set of
/// sum_{i in S} t_i^{h_i} (or of the whole torus without the equation). nullopt = empty.
inline std::optional<Int> stratum_dimension(const Support& s, const std::vector<Int>& h, bool require_equation) {
  if (s.empty()) throw InvalidArgument("support must be non-empty");
  for (std::size_t i : s)
    if (i >= h.size() || h[i] < 1) throw InvalidArgument("every support index needs a positive Fermat exponent");
  const Int size = static_cast<Int>(s.size());
  if (!require_equation) return size - 1;
  if (size == 1) return std::nullopt;
  return size - 2;
}

/// One admissible stratum of a point scheme.
struct SupportStratum {
  Support support;
  /// sum_{i in S} t_i^{h_i} = 0, or empty when no equation is imposed.
  std::string equation;
  std::optional<Int> dimension;
};

inline std::vector<SupportStratum> support_strata(const ScalarMatrix& q, const std::vector<Int>& h, bool require_equation) {
  std::vector<SupportStratum> out;
  for (auto& s : admissible_supports(q)) {
    SupportStratum st;
    if (require_equation)
      for (std::size_t k = 0; k < s.size(); ++k)
        st.equation += (k ? " + " : "") + ("t" + std::to_string(s[k]) + "^" + std::to_string(h.at(s[k])));
    if (require_equation) st.equation += " = 0";
    st.dimension = stratum_dimension(s, h, require_equation);
    st.support = std::move(s);
    out.push_back(std::move(st));
  }
  return out;
}

/// How a factor's defining equation enters the point scheme.
///   none:   no equation on this factor.
///   fermat: the Fermat form of the factor.
///   mixed:  g = sum_l x_l y_l^{m+1}, coupling variable l of A with variable l of B.
enum class EquationShape { none, fermat, mixed };

inline const char* to_string(EquationShape s) {
  switch (s) {
    case EquationShape::none: return "none";
    case EquationShape::fermat: return "fermat";
    case EquationShape::mixed: return "mixed";
  }
  return "unknown";
}

/// Dimension of the point scheme of (A tensor B)/(f, g) over the admissible strata of
/// both factors, with points given by constant coordinate sequences. nullopt = empty.
///
/// A mixed g restricted to supports (S, T) keeps the terms with l in S and T: no term
/// imposes nothing, one term has no zero on the torus, two or more cut one dimension.
inline std::optional<Int> point_scheme_dim_product(const AlgebraSpec& a, const AlgebraSpec& b, EquationShape f_shape,
                                                   EquationShape g_shape) {
  if (!a.all_weights_one() || !b.all_weights_one()) throw Unsupported("point schemes need all weights equal to 1");
  if (f_shape == EquationShape::mixed) throw InvalidArgument("the mixed equation belongs to the second factor");
  const std::vector<Int> ha(a.size(), static_cast<Int>(a.size()));
  const std::vector<Int> hb(b.size(), static_cast<Int>(b.size()));
  const auto sa = admissible_supports(a.scalars());
  const auto sb = admissible_supports(b.scalars());
  std::optional<Int> best;
  for (const auto& s : sa) {
    const auto da = stratum_dimension(s, ha, f_shape == EquationShape::fermat);
    if (!da) continue;
    for (const auto& t : sb) {
      auto db = stratum_dimension(t, hb, g_shape == EquationShape::fermat);
      if (!db) continue;
      Int total = *da + *db;
      if (g_shape == EquationShape::mixed) {
        std::size_t terms = 0;
        for (std::size_t l : t)
          if (std::find(s.begin(), s.end(), l) != s.end()) ++terms;
        if (terms == 1) continue;
        if (terms >= 2) total -= 1;
      }
      if (total < 0) continue;
      if (!best || total > *best) best = total;
    }
  }
  return best;
}

/// PI degree of the quantum torus with parameters q: the square root of the image size of
/// the exponent matrix on (Z/N)^m.
inline Int pi_degree(const ScalarMatrix& q) {
  require_antisymmetric(q);
  const ExponentMatrix em = to_exponent_matrix(q);
  const Int size = image_size(em.exponents, em.order);
  Int root = static_cast<Int>(std::llround(std::sqrt(static_cast<double>(size))));
  while (root * root > size) --root;
  while ((root + 1) * (root + 1) <= size) ++root;
  if (root * root != size)
    throw InternalDefect("image size " + std::to_string(size) + " of the exponent matrix is not a perfect square");
  return root;
}

}  // namespace qcy
