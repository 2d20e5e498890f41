#pragma once

#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "qcy/points/strata.hpp"

namespace qcy {

/// A number of closed points, possibly infinite.
class PointCount {
 public:
  static PointCount finite(Int n) { return PointCount(false, n); }
  static PointCount infinite() { return PointCount(true, 0); }

  bool is_infinite() const { return infinite_; }
  /// The count; throws for an infinite count.
  Int value() const {
    if (infinite_) throw InvalidArgument("point count is infinite");
    return value_;
  }

  friend PointCount operator+(const PointCount& a, const PointCount& b) {
    if (a.infinite_ || b.infinite_) return infinite();
    return finite(checked_add(a.value_, b.value_));
  }

  friend bool operator==(const PointCount&, const PointCount&) = default;

  friend std::ostream& operator<<(std::ostream& os, const PointCount& c) {
    return c.infinite_ ? os << "Infinite" : os << c.value_;
  }

 private:
  PointCount(bool inf, Int v) : infinite_(inf), value_(v) {}
  bool infinite_;
  Int value_;
};

/// Result of counting one-dimensional representations on a chart.
struct ChartCount {
  PointCount count = PointCount::finite(0);
  /// One line per solution locus.
  std::vector<std::string> loci;
  /// A pair of commuting chart generators that carries a positive-dimensional family.
  std::optional<std::pair<std::size_t, std::size_t>> infinite_pair;
};

/// One-dimensional representations y_i -> b_i of the chart algebra with parameters
/// chart_q, subject to 1 + sum_i y_i^{m_i} = 0. `names` labels the generators in the
/// reported loci (default y1, y2, ...).
///
/// b_i b_j = 0 whenever q_{ij} != 1, so the support of b is a set of pairwise commuting
/// generators. Two commuting generators carry a curve of solutions; a single generator
/// y_i gives the m_i roots of y_i^{m_i} = -1.
inline ChartCount chart_simple_count(const ScalarMatrix& chart_q, const std::vector<Int>& exponents,
                                     std::vector<std::string> names = {}) {
  require_antisymmetric(chart_q);
  if (exponents.size() != chart_q.size()) throw InvalidArgument("one exponent per chart generator is required");
  if (names.empty())
    for (std::size_t i = 0; i < exponents.size(); ++i) names.push_back("y" + std::to_string(i + 1));
  if (names.size() != exponents.size()) throw InvalidArgument("one name per chart generator is required");
  for (Int m : exponents)
    if (m < 1) throw InvalidArgument("chart exponents must be positive");
  ChartCount out;
  for (std::size_t i = 0; i < chart_q.size(); ++i)
    for (std::size_t j = i + 1; j < chart_q.size(); ++j)
      if (chart_q[i][j].is_one()) {
        out.count = PointCount::infinite();
        out.infinite_pair = std::make_pair(i, j);
        out.loci.push_back(names[i] + "^" + std::to_string(exponents[i]) + " + " + names[j] + "^" + std::to_string(exponents[j]) +
                           " = -1 with " + names[i] + ", " + names[j] + " commuting: a curve");
        return out;
      }
  Int total = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    total = checked_add(total, exponents[i]);
    std::string others;
    for (std::size_t j = 0; j < exponents.size(); ++j)
      if (j != i) others += (others.empty() ? "" : ", ") + names[j] + " = 0";
    out.loci.push_back(names[i] + "^" + std::to_string(exponents[i]) + " = -1" +
                       (others.empty() ? "" : ", " + others) + ": " + std::to_string(exponents[i]) + " points");
  }
  out.count = PointCount::finite(total);
  return out;
}

/// Closed points of proj k[x, y] with deg x = a, deg y = b.
struct TwoVarClassification {
  Int a = 1, b = 1, g = 1, a_reduced = 1, b_reduced = 1;
  /// Shifts pi R/(x)(-i), i = 0..b-1.
  Int x_line_shifts = 1;
  /// Shifts pi R/(y)(-j), j = 0..a-1.
  Int y_line_shifts = 1;
  /// Shifts of the family pi R/(beta x^{b'} - alpha y^{a'})(-k), k = 0..g-1.
  Int family_shifts = 1;
  /// Every point is thin when g > 1.
  bool all_thin = false;
};

inline TwoVarClassification classify_two_var(Int a, Int b) {
  if (a < 1 || b < 1) throw InvalidArgument("degrees must be positive");
  TwoVarClassification c;
  c.a = a;
  c.b = b;
  c.g = std::gcd(a, b);
  c.a_reduced = a / c.g;
  c.b_reduced = b / c.g;
  c.x_line_shifts = b;
  c.y_line_shifts = a;
  c.family_shifts = c.g;
  c.all_thin = c.g > 1;
  return c;
}

/// Closed points of proj k[x, y]/(x^{d/a} + y^{d/b}): the Fermat form splits into
/// t = d g / (a b) factors beta x^{b'} - alpha y^{a'}, each contributing g shifts.
inline Int two_var_fermat_count(Int a, Int b, Int d) {
  if (a < 1 || b < 1 || d < 1) throw InvalidArgument("degrees must be positive");
  const Int g = std::gcd(a, b);
  if (d % a != 0 || d % b != 0)
    throw DivisibilityError("degrees " + std::to_string(a) + " and " + std::to_string(b) + " must divide " + std::to_string(d));
  const Int num = checked_mul(d, g);
  const Int den = checked_mul(a, b);
  if (num % den != 0)
    throw DivisibilityError("d g / (a b) = " + std::to_string(num) + "/" + std::to_string(den) + " is not an integer");
  return (num / den) * g;
}

struct CensusChart {
  /// 0: x_0 inverted; 1: x_0 = 0, x_1 inverted; 2: x_0 = x_1 = 0.
  int id = 0;
  std::string description;
  ChartCount result;
};

struct CensusReport {
  std::vector<CensusChart> charts;
  PointCount total = PointCount::finite(0);
  /// First chart with infinitely many points.
  std::optional<int> infinite_chart;
};

/// Ordinary and thin closed points of proj(C/(f)) for weights (1, 1, a, b), counted chart by chart.
inline CensusReport census_weighted_surface(const AlgebraSpec& spec) {
  if (spec.size() != 4 || spec.weight(0) != 1 || spec.weight(1) != 1)
    throw InvalidArgument("census needs four variables with weights (1, 1, a, b)");
  const Int d = spec.degree();
  for (std::size_t i = 0; i < 4; ++i)
    if (d % spec.weight(i) != 0)
      throw DivisibilityError("weight a_" + std::to_string(i) + " = " + std::to_string(spec.weight(i)) +
                              " does not divide d = " + std::to_string(d));
  const Int a = spec.weight(2), b = spec.weight(3);
  CensusReport report;

  const ChartParameters first = chart_parameters(spec, 0);
  report.charts.push_back({0, "x0 inverted: quantum affine 3-space, 1 + y1^" + std::to_string(d) + " + y2^" + std::to_string(d / a) +
                                  " + y3^" + std::to_string(d / b) + " = 0",
                           chart_simple_count(first.q, {d, d / a, d / b})});

  const RootScalar s = second_chart_scalar(spec);
  const ScalarMatrix pair{{RootScalar::one(s.order()), s.inverse()}, {s, RootScalar::one(s.order())}};
  report.charts.push_back({1, "x0 = 0, x1 inverted: quantum plane, 1 + z2^" + std::to_string(d / a) + " + z3^" + std::to_string(d / b) + " = 0",
                           chart_simple_count(pair, {d / a, d / b}, {"z2", "z3"})});

  ChartCount last;
  const auto cls = classify_two_var(a, b);
  const Int t = two_var_fermat_count(a, b, d) / cls.g;
  last.count = PointCount::finite(two_var_fermat_count(a, b, d));
  for (Int k = 0; k < cls.g; ++k)
    last.loci.push_back(std::to_string(t) + " factors beta x^" + std::to_string(cls.b_reduced) + " - alpha y^" +
                        std::to_string(cls.a_reduced) + ", shift " + std::to_string(k) + ": " + std::to_string(t) + " points");
  report.charts.push_back({2, "x0 = x1 = 0: proj k[x, y], deg (" + std::to_string(a) + ", " + std::to_string(b) + "), x^" +
                                  std::to_string(d / a) + " + y^" + std::to_string(d / b) + " = 0",
                           last});

  for (const auto& c : report.charts) {
    report.total = report.total + c.result.count;
    if (c.result.count.is_infinite() && !report.infinite_chart) report.infinite_chart = c.id;
  }
  return report;
}

}  // namespace qcy
