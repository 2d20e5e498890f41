#pragma once

#include <ostream>
#include <string>

#include "qcy/cyclo/integer.hpp"

namespace qcy {

/// A root of unity zeta_N^e, stored as (order N, exponent e mod N).
///
/// The order is the denominator the value was written with, not necessarily
/// the multiplicative order of the value: (6, 2) and (3, 1) are equal values.
/// Products of scalars with different orders live in the lcm of the orders.
class RootScalar {
 public:
  constexpr RootScalar() = default;

  RootScalar(Int order, Int exponent) : order_(order) {
    if (order < 1) throw InvalidArgument("root of unity order must be positive, got " + std::to_string(order));
    exponent_ = mod_floor(exponent, order);
  }

  static RootScalar one(Int order = 1) { return RootScalar(order, 0); }

  Int order() const { return order_; }
  Int exponent() const { return exponent_; }

  bool is_one() const { return exponent_ == 0; }

  /// Same value written with order M; M must be a multiple of order().
  RootScalar rescaled(Int target_order) const {
    if (target_order < 1 || target_order % order_ != 0)
      throw OrderMismatch("cannot rescale order " + std::to_string(order_) + " to " +
                          std::to_string(target_order));
    return RootScalar(target_order, checked_mul(exponent_, target_order / order_));
  }

  /// Same value written with its multiplicative order.
  RootScalar reduced() const {
    Int g = std::gcd(exponent_, order_);
    return RootScalar(order_ / g, exponent_ / g);
  }

  /// Multiplicative order of the value.
  Int multiplicative_order() const { return reduced().order(); }

  RootScalar pow(Int k) const { return RootScalar(order_, mod_floor(checked_mul(mod_floor(k, order_), exponent_), order_)); }

  RootScalar inverse() const { return RootScalar(order_, -exponent_); }

  friend RootScalar operator*(const RootScalar& a, const RootScalar& b) {
    Int m = lcm_checked(a.order_, b.order_);
    return RootScalar(m, a.rescaled(m).exponent_ + b.rescaled(m).exponent_);
  }

  RootScalar& operator*=(const RootScalar& other) { return *this = *this * other; }

  friend bool operator==(const RootScalar& a, const RootScalar& b) {
    // e1/N1 == e2/N2 as fractions of a full turn.
    return checked_mul(a.exponent_, b.order_) == checked_mul(b.exponent_, a.order_);
  }

  friend std::ostream& operator<<(std::ostream& os, const RootScalar& r) {
    return os << '(' << r.order_ << ", " << r.exponent_ << ')';
  }

 private:
  Int order_ = 1;
  Int exponent_ = 0;
};

/// Free-function form of RootScalar::rescaled.
inline RootScalar rescale(const RootScalar& r, Int target_order) { return r.rescaled(target_order); }

}  // namespace qcy
