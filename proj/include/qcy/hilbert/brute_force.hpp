#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <algorithm>
#include <functional>
#include <map>
#include <vector>

#include "qcy/qalgebra.hpp"

namespace qcy {

/// Arithmetic in F_p through a ring map Z[zeta_N] -> F_p sending zeta_N to a
/// primitive N-th root of unity mod p (p = 1 mod N).
class ModularField {
 public:
  using Value = std::uint64_t;

  explicit ModularField(Int order) : order_(order) {
    p_ = first_prime_above((Int{1} << 30), order);
    root_ = primitive_root_of_unity();
    powers_.push_back(1);
    for (Int k = 1; k < order_; ++k) powers_.push_back(mul(powers_.back(), root_));
  }

  Int prime() const { return p_; }

  Value from(const CycInt& c) const {
    Value v = 0;
    for (std::size_t k = 0; k < c.coeffs().size(); ++k) {
      const Int r = mod_floor(c.coeffs()[k], p_);
      v = add(v, mul(static_cast<Value>(r), powers_[k % powers_.size()]));
    }
    return v;
  }

  bool is_zero(Value a) const { return a == 0; }
  Value add(Value a, Value b) const { return (a + b) % static_cast<Value>(p_); }
  Value sub(Value a, Value b) const { return (a + static_cast<Value>(p_) - b) % static_cast<Value>(p_); }
  Value neg(Value a) const { return sub(0, a); }
  Value mul(Value a, Value b) const { return static_cast<Value>((static_cast<UInt128>(a) * b) % static_cast<Value>(p_)); }
  Value inverse(Value a) const { return static_cast<Value>(power_mod(static_cast<Int>(a), p_ - 2, p_)); }

 private:
  static bool is_prime(Int n) {
    if (n < 2) return false;
    for (Int d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

  static Int first_prime_above(Int lower, Int order) {
    Int p = lower - mod_floor(lower, order) + 1;
    if (p <= lower) p += order;
    while (!is_prime(p)) p += order;
    return p;
  }

  Value primitive_root_of_unity() const {
    std::vector<Int> prime_factors;
    Int m = order_;
    for (Int d = 2; d * d <= m; ++d)
      if (m % d == 0) {
        prime_factors.push_back(d);
        while (m % d == 0) m /= d;
      }
    if (m > 1) prime_factors.push_back(m);
    for (Int a = 2; a < p_; ++a) {
      const Int r = power_mod(a, (p_ - 1) / order_, p_);
      bool primitive = true;
      for (Int l : prime_factors)
        if (power_mod(r, order_ / l, p_) == 1) primitive = false;
      if (primitive) return static_cast<Value>(r);
    }
    throw InternalDefect("no primitive root of unity found");
  }

  Int order_;
  Int p_ = 2;
  Value root_ = 1;
  std::vector<Value> powers_;
};

/// Exact arithmetic in Q(zeta_N) = Q[x] / Phi_N, elements as rational coefficient vectors.
class CyclotomicField {
 public:
  using Rational = boost::multiprecision::cpp_rational;
  using Value = std::vector<Rational>;

  explicit CyclotomicField(Int order) : order_(order) {
    for (Int c : cyclotomic_polynomial(order)) modulus_.emplace_back(c);
    degree_ = modulus_.size() - 1;
  }

  Value from(const CycInt& c) const {
    Value v(degree_);
    for (std::size_t k = 0; k < degree_ && k < c.coeffs().size(); ++k) v[k] = c.coeffs()[k];
    return v;
  }

  bool is_zero(const Value& a) const {
    for (const auto& x : a)
      if (x != 0) return false;
    return true;
  }

  Value add(const Value& a, const Value& b) const {
    Value v(degree_);
    for (std::size_t k = 0; k < degree_; ++k) v[k] = a[k] + b[k];
    return v;
  }

  Value sub(const Value& a, const Value& b) const {
    Value v(degree_);
    for (std::size_t k = 0; k < degree_; ++k) v[k] = a[k] - b[k];
    return v;
  }

  Value neg(const Value& a) const {
    Value v(degree_);
    for (std::size_t k = 0; k < degree_; ++k) v[k] = -a[k];
    return v;
  }

  Value mul(const Value& a, const Value& b) const {
    Value p(2 * degree_, Rational(0));
    for (std::size_t i = 0; i < degree_; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < degree_; ++j)
        if (b[j] != 0) p[i + j] += a[i] * b[j];
    }
    return reduce(std::move(p));
  }

  Value inverse(const Value& a) const {
    // Extended Euclid in Q[x]: s * a = r (mod Phi_N), ending with r a non-zero constant.
    Poly r0 = modulus_, r1 = trimmed(a);
    Poly s0, s1{Rational(1)};
    if (r1.empty()) throw InvalidArgument("zero has no inverse");
    while (!r1.empty()) {
      auto [q, r] = divide(r0, r1);
      r0 = std::move(r1);
      r1 = std::move(r);
      Poly next = sub_poly(s0, mul_poly(q, s1));
      s0 = std::move(s1);
      s1 = std::move(next);
    }
    if (r0.size() != 1) throw InternalDefect("cyclotomic polynomial is not irreducible over Q");
    for (auto& c : s0) c /= r0[0];
    return reduce(std::move(s0));
  }

 private:
  using Poly = std::vector<Rational>;

  static Poly trimmed(Poly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
  }

  static Poly mul_poly(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly p(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) p[i + j] += a[i] * b[j];
    return trimmed(std::move(p));
  }

  static Poly sub_poly(Poly a, const Poly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    return trimmed(std::move(a));
  }

  static std::pair<Poly, Poly> divide(Poly a, const Poly& b) {
    a = trimmed(std::move(a));
    if (a.size() < b.size()) return {{}, a};
    const std::size_t shift_max = a.size() - b.size();
    Poly q(shift_max + 1, Rational(0));
    for (std::size_t shift = shift_max + 1; shift-- > 0;) {
      const Rational c = a[shift + b.size() - 1] / b.back();
      q[shift] = c;
      for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
    }
    return {trimmed(std::move(q)), trimmed(std::move(a))};
  }

  Value reduce(Poly p) const {
    for (std::size_t i = p.size(); i-- > degree_;) {
      if (p[i] == 0) continue;
      const Rational c = p[i];
      for (std::size_t j = 0; j <= degree_; ++j) p[i - degree_ + j] -= c * modulus_[j];
    }
    p.resize(degree_, Rational(0));
    return p;
  }

  Int order_;
  Poly modulus_;
  std::size_t degree_ = 0;
};

/// Incremental row echelon form over a field, for sparse rows sorted by column.
template <class Field>
class RowEchelon {
 public:
  using Value = typename Field::Value;
  using Row = std::vector<std::pair<std::size_t, Value>>;

  explicit RowEchelon(const Field& field) : field_(field) {}

  /// Adds a row; true when it raised the rank.
  bool insert(Row row) {
    prune(row);
    while (!row.empty()) {
      auto it = pivots_.find(row.front().first);
      if (it == pivots_.end()) {
        const Value inv = field_.inverse(row.front().second);
        for (auto& [c, v] : row) v = field_.mul(v, inv);
        const std::size_t lead = row.front().first;
        pivots_.emplace(lead, std::move(row));
        return true;
      }
      const Value factor = row.front().second;
      row = subtract_multiple(row, factor, it->second);
    }
    return false;
  }

  std::size_t rank() const { return pivots_.size(); }

 private:
  void prune(Row& row) const {
    std::erase_if(row, [&](const auto& e) { return field_.is_zero(e.second); });
  }

  Row subtract_multiple(const Row& a, const Value& factor, const Row& b) const {
    Row out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[j].first < a[i].first) {
        out.emplace_back(b[j].first, field_.neg(field_.mul(factor, b[j].second)));
        ++j;
      } else {
        Value v = field_.sub(a[i].second, field_.mul(factor, b[j].second));
        if (!field_.is_zero(v)) out.emplace_back(a[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    return out;
  }

  const Field& field_;
  std::map<std::size_t, Row> pivots_;
};

/// Rank method used for the last computation, for tests and diagnostics.
enum class RankRoute { modular, exact };

struct BruteForceOptions {
  /// Skip the modular shortcut and always eliminate over Q(zeta_N).
  bool exact_only = false;
};

/// Monomials x^e with grading * e == target, in lexicographic order. Every variable
/// needs a positive degree in some grading row.
inline std::vector<Exponents> monomials_of_degree(const IntMatrix& grading, const IntVector& target) {
  const std::size_t n = grading.empty() ? 0 : grading[0].size();
  for (std::size_t v = 0; v < n; ++v) {
    bool positive = false;
    for (const auto& row : grading) positive = positive || row[v] > 0;
    if (!positive) throw InvalidArgument("grading gives a variable degree zero");
  }
  std::vector<Exponents> out;
  for (Int t : target)
    if (t < 0) return out;
  Exponents e(n, 0);
  IntVector remaining = target;
  auto fits = [&] {
    for (Int r : remaining)
      if (r < 0) return false;
    return true;
  };
  std::function<void(std::size_t)> rec = [&](std::size_t v) {
    if (v == n) {
      if (std::all_of(remaining.begin(), remaining.end(), [](Int r) { return r == 0; })) out.push_back(e);
      return;
    }
    Int k = 0;
    for (; fits(); ++k) {
      e[v] = k;
      rec(v + 1);
      for (std::size_t g = 0; g < grading.size(); ++g) remaining[g] -= grading[g][v];
    }
    for (std::size_t g = 0; g < grading.size(); ++g) remaining[g] += k * grading[g][v];
    e[v] = 0;
  };
  rec(0);
  return out;
}

namespace detail {

inline IntVector multidegree(const IntMatrix& grading, const Exponents& e) {
  IntVector d(grading.size(), 0);
  for (std::size_t g = 0; g < grading.size(); ++g)
    for (std::size_t v = 0; v < e.size(); ++v) d[g] += grading[g][v] * e[v];
  return d;
}

template <class Field>
std::size_t ideal_rank(const Field& field, const std::vector<std::vector<std::pair<std::size_t, CycInt>>>& rows) {
  RowEchelon<Field> echelon(field);
  for (const auto& r : rows) {
    typename RowEchelon<Field>::Row row;
    for (const auto& [c, v] : r) row.emplace_back(c, field.from(v));
    echelon.insert(std::move(row));
  }
  return echelon.rank();
}

}  // namespace detail

/// dim of the graded piece of A / (quotient) in multidegree `target`, for A given by `spec`
/// and the grading matrix (one row per grading component).
///
/// Every quotient element must be central and multihomogeneous: then the ideal's piece is
/// the span of monomial * f, and its dimension is a rank over Q(zeta_N).
inline Int quotient_piece_dimension(const AlgebraSpec& spec, const std::vector<SkewPoly>& quotient, const IntMatrix& grading,
                                    const IntVector& target, BruteForceOptions options = {},
                                    RankRoute* route = nullptr) {
  const auto basis = monomials_of_degree(grading, target);
  std::map<Exponents, std::size_t> index;
  for (std::size_t k = 0; k < basis.size(); ++k) index.emplace(basis[k], k);
  std::vector<std::vector<std::pair<std::size_t, CycInt>>> rows;
  for (const auto& f : quotient) {
    if (f.is_zero()) continue;
    const IntVector fdeg = detail::multidegree(grading, f.terms().begin()->first);
    IntVector rest(target.size());
    for (std::size_t g = 0; g < target.size(); ++g) rest[g] = target[g] - fdeg[g];
    for (const auto& m : monomials_of_degree(grading, rest)) {
      const SkewPoly prod = multiply(SkewPoly::monomial(spec, m), f, spec);
      std::vector<std::pair<std::size_t, CycInt>> row;
      for (const auto& [e, c] : prod.terms()) row.emplace_back(index.at(e), c);
      std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      rows.push_back(std::move(row));
    }
  }
  if (rows.empty()) {
    if (route) *route = RankRoute::modular;
    return static_cast<Int>(basis.size());
  }
  if (!options.exact_only) {
    // The modular rank never exceeds the true rank, and the true rank never exceeds the
    // row count, so a full modular rank is exact.
    const std::size_t r = detail::ideal_rank(ModularField(spec.order()), rows);
    if (r == rows.size()) {
      if (route) *route = RankRoute::modular;
      return static_cast<Int>(basis.size() - r);
    }
  }
  if (route) *route = RankRoute::exact;
  return static_cast<Int>(basis.size() - detail::ideal_rank(CyclotomicField(spec.order()), rows));
}

namespace detail {

inline void require_central_homogeneous(const AlgebraSpec& spec, const std::vector<SkewPoly>& quotient, const IntMatrix& grading) {
  for (const auto& f : quotient) {
    if (f.variables() != spec.size()) throw InvalidArgument("quotient element has the wrong number of variables");
    std::optional<IntVector> deg;
    for (const auto& [e, c] : f.terms()) {
      auto d = multidegree(grading, e);
      if (deg && *deg != d) throw InvalidArgument("quotient element is not homogeneous");
      deg = d;
    }
    if (!is_central(f, spec))
      throw Unsupported("quotient element is not central; the brute-force count needs central generators");
  }
}

}  // namespace detail

/// dim of (A / (quotient))_m for m = 0..max_degree, graded by the spec weights.
inline std::vector<Int> brute_force_dims(const AlgebraSpec& spec, const std::vector<SkewPoly>& quotient, Int max_degree = 12,
                                         BruteForceOptions options = {}) {
  const IntMatrix grading{spec.weights()};
  detail::require_central_homogeneous(spec, quotient, grading);
  std::vector<Int> dims;
  for (Int m = 0; m <= max_degree; ++m) dims.push_back(quotient_piece_dimension(spec, quotient, grading, {m}, options));
  return dims;
}

/// dim of (A / (quotient))_{(i,i)} for i = 0..max_degree, where the first `split` variables
/// carry the first grading (by weight) and the rest the second: the Segre diagonal.
inline std::vector<Int> brute_force_diagonal_dims(const AlgebraSpec& spec, std::size_t split, const std::vector<SkewPoly>& quotient,
                                                  Int max_degree = 6, BruteForceOptions options = {}) {
  if (split > spec.size()) throw InvalidArgument("split exceeds the number of variables");
  IntMatrix grading(2, IntVector(spec.size(), 0));
  for (std::size_t v = 0; v < spec.size(); ++v) grading[v < split ? 0 : 1][v] = spec.weight(v);
  detail::require_central_homogeneous(spec, quotient, grading);
  std::vector<Int> dims;
  for (Int i = 0; i <= max_degree; ++i) dims.push_back(quotient_piece_dimension(spec, quotient, grading, {i, i}, options));
  return dims;
}

}  // namespace qcy
