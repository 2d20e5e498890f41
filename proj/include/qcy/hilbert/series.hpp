#pragma once

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "qcy/cyclo/integer.hpp"
#include "qcy/error.hpp"

namespace qcy {

/// numerator(t) / prod_k (1 - t^{a_k}), with the denominator kept as its list of exponents.
struct RationalForm {
  std::vector<Int> numerator;  // coefficient of t^i at index i
  std::vector<Int> denominator;
};

namespace detail {

/// Coefficients 0..upto of a rational form, by repeated prefix sums: dividing by
/// (1 - t^a) is c_i += c_{i-a}.
inline std::vector<Int> expand_rational(const RationalForm& f, Int upto) {
  std::vector<Int> c(static_cast<std::size_t>(upto + 1), 0);
  for (std::size_t i = 0; i < f.numerator.size() && i < c.size(); ++i) c[i] = f.numerator[i];
  for (Int a : f.denominator)
    for (std::size_t i = static_cast<std::size_t>(a); i < c.size(); ++i) c[i] = checked_add(c[i], c[i - static_cast<std::size_t>(a)]);
  return c;
}

/// Lazily extended coefficient cache. Reads of computed entries take a shared lock;
/// extension is exclusive.
class CoefficientStream {
 public:
  using Generator = std::function<std::vector<Int>(Int upto)>;

  explicit CoefficientStream(Generator g) : generate_(std::move(g)) {}

  Int at(Int i) const {
    {
      std::shared_lock lock(mu_);
      if (static_cast<std::size_t>(i) < cache_.size()) return cache_[static_cast<std::size_t>(i)];
    }
    std::unique_lock lock(mu_);
    if (static_cast<std::size_t>(i) >= cache_.size()) {
      const Int target = std::max<Int>(i, 2 * static_cast<Int>(cache_.size()) + 8);
      cache_ = generate_(target);
    }
    return cache_[static_cast<std::size_t>(i)];
  }

  std::size_t cached() const {
    std::shared_lock lock(mu_);
    return cache_.size();
  }

 private:
  Generator generate_;
  mutable std::shared_mutex mu_;
  mutable std::vector<Int> cache_;
};

}  // namespace detail

/// Hilbert series of a graded algebra, sum_i dim A_i t^i.
///
/// Either a factored rational form (with the coefficient stream derived from it), or a
/// bare coefficient rule for transforms such as Veronese subrings that have no stored form.
class HilbertSeries {
 public:
  using Rule = std::function<Int(Int)>;

  static HilbertSeries rational(std::vector<Int> numerator, std::vector<Int> denominator) {
    for (Int a : denominator)
      if (a < 1) throw InvalidArgument("denominator factors need positive exponents");
    HilbertSeries s;
    s.form_ = RationalForm{std::move(numerator), std::move(denominator)};
    const RationalForm form = *s.form_;
    s.stream_ = std::make_shared<detail::CoefficientStream>([form](Int upto) { return detail::expand_rational(form, upto); });
    return s;
  }

  static HilbertSeries from_rule(Rule rule) {
    HilbertSeries s;
    s.stream_ = std::make_shared<detail::CoefficientStream>([rule = std::move(rule)](Int upto) {
      std::vector<Int> c;
      c.reserve(static_cast<std::size_t>(upto + 1));
      for (Int i = 0; i <= upto; ++i) c.push_back(rule(i));
      return c;
    });
    return s;
  }

  /// dim A_i; zero in negative degrees.
  Int coefficient(Int i) const { return i < 0 ? 0 : stream_->at(i); }

  std::vector<Int> coefficients(Int upto) const {
    std::vector<Int> c;
    for (Int i = 0; i <= upto; ++i) c.push_back(coefficient(i));
    return c;
  }

  const std::optional<RationalForm>& form() const { return form_; }
  bool has_form() const { return form_.has_value(); }

  /// Coefficient by power-series division of the numerator by the expanded denominator,
  /// an independent route to the same number.
  Int coefficient_by_division(Int i) const {
    if (!form_) throw Unsupported("series has no rational form");
    if (i < 0) return 0;
    const std::size_t n = static_cast<std::size_t>(i) + 1;
    std::vector<Int> q(n, 0);
    q[0] = 1;
    for (Int a : form_->denominator)
      for (std::size_t k = n; k-- > static_cast<std::size_t>(a);) q[k] = checked_add(q[k], -q[k - static_cast<std::size_t>(a)]);
    std::vector<Int> s(n, 0);
    for (std::size_t k = 0; k < n; ++k) {
      Int v = k < form_->numerator.size() ? form_->numerator[k] : 0;
      for (std::size_t j = 1; j <= k; ++j)
        if (q[j] != 0) v = checked_add(v, -checked_mul(q[j], s[k - j]));
      s[k] = v;
    }
    return s.back();
  }

 private:
  HilbertSeries() = default;

  std::optional<RationalForm> form_;
  std::shared_ptr<detail::CoefficientStream> stream_;
};

/// Hilbert series of a quantum polynomial ring with generator degrees `weights`:
/// 1 / prod_i (1 - t^{a_i}).
inline HilbertSeries series_qpoly(const std::vector<Int>& weights) {
  for (Int a : weights)
    if (a < 1) throw InvalidArgument("weights must be positive");
  return HilbertSeries::rational({1}, weights);
}

/// Series of A/(f) for a regular central f of degree d: numerator times (1 - t^d).
inline HilbertSeries quotient_by_regular(const HilbertSeries& s, Int d) {
  if (d < 1) throw InvalidArgument("relation degree must be at least 1");
  if (!s.has_form()) throw Unsupported("quotient needs a series with a rational form");
  std::vector<Int> num = s.form()->numerator;
  num.resize(std::max(num.size(), static_cast<std::size_t>(d) + 1), 0);
  for (std::size_t i = num.size(); i-- > static_cast<std::size_t>(d);) num[i] = checked_add(num[i], -num[i - static_cast<std::size_t>(d)]);
  return HilbertSeries::rational(std::move(num), s.form()->denominator);
}

/// Veronese subring A^{(r)}: keeps every r-th graded piece.
inline HilbertSeries veronese(const HilbertSeries& s, Int r) {
  if (r < 1) throw InvalidArgument("Veronese step must be at least 1");
  return HilbertSeries::from_rule([s, r](Int i) { return s.coefficient(checked_mul(r, i)); });
}

/// The k x k block pattern of the quasi-Veronese algebra: entry (p, q) in degree i is A_{ki+q-p}.
inline std::vector<std::vector<HilbertSeries>> quasi_veronese_table(const HilbertSeries& s, Int k) {
  if (k < 1) throw InvalidArgument("quasi-Veronese size must be at least 1");
  std::vector<std::vector<HilbertSeries>> table;
  for (Int p = 0; p < k; ++p) {
    std::vector<HilbertSeries> row;
    for (Int q = 0; q < k; ++q) row.push_back(HilbertSeries::from_rule([s, k, p, q](Int i) { return s.coefficient(k * i + q - p); }));
    table.push_back(std::move(row));
  }
  return table;
}

/// Bigraded series N(t, u) / prod_k (1 - t^{a_k} u^{b_k}).
class BigradedSeries {
 public:
  using Bidegree = std::pair<Int, Int>;

  BigradedSeries(std::vector<std::vector<Int>> numerator, std::vector<Bidegree> denominator)
      : numerator_(std::move(numerator)), denominator_(std::move(denominator)), cache_(std::make_shared<Cache>()) {
    for (const auto& [a, b] : denominator_)
      if (a < 0 || b < 0 || (a == 0 && b == 0)) throw InvalidArgument("bigraded factor needs a non-zero non-negative bidegree");
  }

  /// Coefficient of t^i u^j.
  Int coefficient(Int i, Int j) const {
    if (i < 0 || j < 0) return 0;
    {
      std::shared_lock lock(cache_->mu);
      if (fits(i, j)) return cache_->table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    std::unique_lock lock(cache_->mu);
    if (!fits(i, j)) {
      const Int rows = cache_->table.empty() ? 0 : static_cast<Int>(cache_->table.size());
      const Int cols = cache_->table.empty() ? 0 : static_cast<Int>(cache_->table[0].size());
      cache_->table = expand(std::max<Int>(i, 2 * rows + 4), std::max<Int>(j, 2 * cols + 4));
    }
    return cache_->table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }

  const std::vector<std::vector<Int>>& numerator() const { return numerator_; }
  const std::vector<Bidegree>& denominator() const { return denominator_; }

  /// Multiplies the numerator by (1 - t^p u^q), the quotient by a regular central element of bidegree (p, q).
  BigradedSeries quotient_by_regular(Int p, Int q) const {
    if (p < 0 || q < 0 || (p == 0 && q == 0)) throw InvalidArgument("relation bidegree must be non-zero and non-negative");
    std::vector<std::vector<Int>> num = numerator_;
    std::size_t width = 0;
    for (const auto& row : num) width = std::max(width, row.size());
    num.resize(num.size() + static_cast<std::size_t>(p));
    for (auto& row : num) row.resize(width + static_cast<std::size_t>(q), 0);
    for (std::size_t i = num.size(); i-- > static_cast<std::size_t>(p);)
      for (std::size_t j = num[i].size(); j-- > static_cast<std::size_t>(q);)
        num[i][j] = checked_add(num[i][j], -num[i - static_cast<std::size_t>(p)][j - static_cast<std::size_t>(q)]);
    return BigradedSeries(std::move(num), denominator_);
  }

 private:
  struct Cache {
    std::shared_mutex mu;
    std::vector<std::vector<Int>> table;
  };

  bool fits(Int i, Int j) const {
    return static_cast<std::size_t>(i) < cache_->table.size() && static_cast<std::size_t>(j) < cache_->table[0].size();
  }

  std::vector<std::vector<Int>> expand(Int maxi, Int maxj) const {
    std::vector<std::vector<Int>> c(static_cast<std::size_t>(maxi + 1), std::vector<Int>(static_cast<std::size_t>(maxj + 1), 0));
    for (std::size_t i = 0; i < numerator_.size() && i < c.size(); ++i)
      for (std::size_t j = 0; j < numerator_[i].size() && j < c[i].size(); ++j) c[i][j] = numerator_[i][j];
    for (const auto& [a, b] : denominator_)
      for (std::size_t i = static_cast<std::size_t>(a); i < c.size(); ++i)
        for (std::size_t j = static_cast<std::size_t>(b); j < c[i].size(); ++j)
          c[i][j] = checked_add(c[i][j], c[i - static_cast<std::size_t>(a)][j - static_cast<std::size_t>(b)]);
    return c;
  }

  std::vector<std::vector<Int>> numerator_;
  std::vector<Bidegree> denominator_;
  std::shared_ptr<Cache> cache_;
};

/// Tensor product of two polynomial-type rings, the first in degrees (a, 0), the second in (0, b).
inline BigradedSeries bigraded_series(const std::vector<Int>& weights_a, const std::vector<Int>& weights_b) {
  std::vector<BigradedSeries::Bidegree> den;
  for (Int a : weights_a) {
    if (a < 1) throw InvalidArgument("weights must be positive");
    den.emplace_back(a, 0);
  }
  for (Int b : weights_b) {
    if (b < 1) throw InvalidArgument("weights must be positive");
    den.emplace_back(0, b);
  }
  return BigradedSeries({{1}}, std::move(den));
}

/// Segre product dimensions: the coefficients c_{ii}.
inline HilbertSeries diagonal(const BigradedSeries& s) {
  return HilbertSeries::from_rule([s](Int i) { return s.coefficient(i, i); });
}

}  // namespace qcy
