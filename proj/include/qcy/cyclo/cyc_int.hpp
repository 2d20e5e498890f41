#pragma once

#include <map>
#include <mutex>
#include <ostream>
#include <vector>

#include "qcy/cyclo/root_scalar.hpp"

namespace qcy {

using IntPoly = std::vector<Int>;  // coefficient of x^i at index i

namespace detail {

inline void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

/// Exact quotient of p by a monic divisor; throws if the division leaves a remainder.
inline IntPoly divide_exact_monic(IntPoly p, const IntPoly& divisor) {
  const std::size_t dd = divisor.size() - 1;
  if (p.size() < divisor.size()) throw InternalDefect("cyclotomic division: dividend too small");
  IntPoly quotient(p.size() - dd, 0);
  for (std::size_t i = p.size(); i-- > dd;) {
    Int c = p[i];
    quotient[i - dd] = c;
    if (c == 0) continue;
    for (std::size_t k = 0; k <= dd; ++k) p[i - dd + k] -= c * divisor[k];
  }
  trim(p);
  if (!p.empty()) throw InternalDefect("cyclotomic division left a remainder");
  return quotient;
}

inline IntPoly compute_cyclotomic(Int n) {
  // x^n - 1 divided by Phi_d for every proper divisor d of n.
  IntPoly p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (Int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    p = divide_exact_monic(std::move(p), compute_cyclotomic(d));
  }
  return p;
}

}  // namespace detail

/// The n-th cyclotomic polynomial Phi_n (monic, integer coefficients).
inline const IntPoly& cyclotomic_polynomial(Int n) {
  if (n < 1) throw InvalidArgument("cyclotomic order must be positive");
  static std::mutex mu;
  static std::map<Int, IntPoly> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, detail::compute_cyclotomic(n)).first;
  return it->second;
}

/// Element of Z[zeta_N], stored as its canonical residue modulo Phi_N.
///
/// Because the residue is canonical, equality and the zero test are exact;
/// this matters since sums of distinct roots of unity can vanish.
class CycInt {
 public:
  CycInt() : CycInt(1) {}

  explicit CycInt(Int order) : order_(order), coeffs_(degree_for(order), 0) {}

  static CycInt zero(Int order) { return CycInt(order); }

  static CycInt integer(Int order, Int value) {
    CycInt c(order);
    c.coeffs_[0] = value;
    return c;
  }

  static CycInt one(Int order) { return integer(order, 1); }

  /// Embeds a root of unity whose order divides `order`.
  static CycInt root(const RootScalar& r, Int order) {
    RootScalar lifted = r.rescaled(order);
    IntPoly p(static_cast<std::size_t>(lifted.exponent()) + 1, 0);
    p.back() = 1;
    return from_poly(order, std::move(p));
  }

  /// Reduces an arbitrary integer polynomial in zeta_N modulo Phi_N.
  static CycInt from_poly(Int order, IntPoly p) {
    CycInt c(order);
    const IntPoly& phi = cyclotomic_polynomial(order);
    const std::size_t deg = phi.size() - 1;
    for (std::size_t i = p.size(); i-- > deg;) {
      Int lead = p[i];
      if (lead == 0) continue;
      for (std::size_t k = 0; k <= deg; ++k) p[i - deg + k] = checked_add(p[i - deg + k], -checked_mul(lead, phi[k]));
    }
    for (std::size_t i = 0; i < deg && i < p.size(); ++i) c.coeffs_[i] = p[i];
    return c;
  }

  Int order() const { return order_; }
  const IntPoly& coeffs() const { return coeffs_; }

  bool is_zero() const {
    for (Int c : coeffs_)
      if (c != 0) return false;
    return true;
  }

  /// The element written in Z[zeta_M] for a multiple M of order().
  CycInt lifted(Int target_order) const {
    if (target_order % order_ != 0)
      throw OrderMismatch("cannot lift order " + std::to_string(order_) + " to " + std::to_string(target_order));
    const Int step = target_order / order_;
    IntPoly p(coeffs_.size() * static_cast<std::size_t>(step) + 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) p[i * static_cast<std::size_t>(step)] = coeffs_[i];
    return from_poly(target_order, std::move(p));
  }

  friend CycInt operator+(const CycInt& a, const CycInt& b) {
    require_same(a, b);
    CycInt out(a.order_);
    for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] = checked_add(a.coeffs_[i], b.coeffs_[i]);
    return out;
  }

  friend CycInt operator-(const CycInt& a) {
    CycInt out(a.order_);
    for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] = -a.coeffs_[i];
    return out;
  }

  friend CycInt operator-(const CycInt& a, const CycInt& b) { return a + (-b); }

  friend CycInt operator*(const CycInt& a, const CycInt& b) {
    require_same(a, b);
    IntPoly p(a.coeffs_.size() + b.coeffs_.size(), 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        p[i + j] = checked_add(p[i + j], checked_mul(a.coeffs_[i], b.coeffs_[j]));
    }
    return from_poly(a.order_, std::move(p));
  }

  CycInt& operator+=(const CycInt& o) { return *this = *this + o; }
  CycInt& operator-=(const CycInt& o) { return *this = *this - o; }
  CycInt& operator*=(const CycInt& o) { return *this = *this * o; }

  friend bool operator==(const CycInt& a, const CycInt& b) { return a.order_ == b.order_ && a.coeffs_ == b.coeffs_; }

  friend std::ostream& operator<<(std::ostream& os, const CycInt& c) {
    os << '[';
    for (std::size_t i = 0; i < c.coeffs_.size(); ++i) os << (i ? " " : "") << c.coeffs_[i];
    return os << "]_" << c.order_;
  }

 private:
  static std::size_t degree_for(Int order) { return cyclotomic_polynomial(order).size() - 1; }

  static void require_same(const CycInt& a, const CycInt& b) {
    if (a.order_ != b.order_)
      throw OrderMismatch("cyclotomic orders differ: " + std::to_string(a.order_) + " vs " + std::to_string(b.order_));
  }

  Int order_;
  IntPoly coeffs_;
};

}  // namespace qcy
