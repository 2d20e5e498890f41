#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qcy/cyclo/root_scalar.hpp"

namespace qcy {

/// A set of linear congruences coefficient * x == target (mod modulus) in one unknown.
struct CongruenceSystem {
  struct Equation {
    Int coefficient;
    Int target;
  };

  Int modulus = 1;
  std::vector<Equation> equations;

  /// Solution class x == residue (mod period), period dividing modulus.
  struct Solution {
    Int residue;
    Int period;
  };

  std::optional<Solution> solve() const {
    if (modulus < 1) throw InvalidArgument("congruence modulus must be positive");
    Solution acc{0, 1};
    for (const auto& [a, t] : equations) {
      // a x == t (mod M)  <=>  x == (t/g) * (a/g)^{-1} (mod M/g), g = gcd(a, M), when g | t.
      const Int g = std::gcd(mod_floor(a, modulus), modulus);
      const Int tr = mod_floor(t, modulus);
      if (tr % g != 0) return std::nullopt;
      const Int m = modulus / g;
      const Int inv = inverse_mod(mod_floor(a, modulus) / g, m).value_or(0);
      const Int r = static_cast<Int>(static_cast<Int128>(tr / g) * inv % m);
      auto merged = merge(acc, Solution{r, m});
      if (!merged) return std::nullopt;
      acc = *merged;
    }
    return acc;
  }

  /// Generalised CRT: combine x == a.residue (mod a.period) with x == b.residue (mod b.period).
  static std::optional<Solution> merge(Solution a, Solution b) {
    auto [g, p, q] = extended_gcd(a.period, b.period);
    (void)q;
    const Int diff = b.residue - a.residue;
    if (diff % g != 0) return std::nullopt;
    const Int l = lcm_checked(a.period, b.period);
    const Int step = b.period / g;
    const Int128 k = static_cast<Int128>(diff / g) * p % step;
    Int128 x = (static_cast<Int128>(a.residue) + static_cast<Int128>(a.period) * k) % l;
    if (x < 0) x += l;
    return Solution{static_cast<Int>(x), l};
  }
};

/// One constraint c^power == value of a weighted power system.
struct PowerConstraint {
  Int power;
  RootScalar value;
};

/// Search modulus N * lcm(powers) used by solve_root_system, with N the lcm of the value orders.
inline Int root_system_modulus(std::span<const PowerConstraint> constraints) {
  Int n = 1, l = 1;
  for (const auto& c : constraints) {
    n = lcm_checked(n, c.value.order());
    l = lcm_checked(l, c.power);
  }
  return checked_mul(n, l);
}

/// Finds a root of unity c with c^power == value for every constraint.
///
/// Any solution is a root of unity whose order divides M = N * lcm(powers), so the
/// problem is the congruence system power * x == lifted exponent (mod M). The
/// returned scalar is the least non-negative solution, written with its exact order.
inline std::optional<RootScalar> solve_root_system(std::span<const PowerConstraint> constraints) {
  if (constraints.empty()) throw InvalidArgument("solve_root_system needs at least one constraint");
  for (const auto& c : constraints)
    if (c.power < 1) throw InvalidArgument("powers must be positive");
  const Int m = root_system_modulus(constraints);
  CongruenceSystem system{m, {}};
  for (const auto& c : constraints) system.equations.push_back({c.power, c.value.rescaled(m).exponent()});
  auto solution = system.solve();
  if (!solution) return std::nullopt;
  return RootScalar(m, solution->residue).reduced();
}

inline std::optional<RootScalar> solve_root_system(std::initializer_list<PowerConstraint> constraints) {
  return solve_root_system(std::span<const PowerConstraint>(constraints.begin(), constraints.size()));
}

}  // namespace qcy
