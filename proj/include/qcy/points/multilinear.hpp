#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "qcy/qalgebra.hpp"

namespace qcy {

/// Element of the free algebra k<x_0..x_n> over Z[zeta_N]: words are kept as written, not normal-ordered.
class WordPoly {
 public:
  using Word = std::vector<std::size_t>;
  using Terms = std::map<Word, CycInt>;

  WordPoly(std::size_t variables, Int order) : variables_(variables), order_(order) {}

  static WordPoly word(std::size_t variables, Int order, Word w, const CycInt& c) {
    WordPoly p(variables, order);
    p.add_term(std::move(w), c);
    return p;
  }

  /// The normal-ordered words x_0^{e_0} x_1^{e_1} ... of a skew polynomial.
  static WordPoly from_normal_order(const SkewPoly& s) {
    WordPoly p(s.variables(), s.order());
    for (const auto& [e, c] : s.terms()) {
      Word w;
      for (std::size_t i = 0; i < e.size(); ++i)
        for (Int k = 0; k < e[i]; ++k) w.push_back(i);
      p.add_term(std::move(w), c);
    }
    return p;
  }

  std::size_t variables() const { return variables_; }
  Int order() const { return order_; }
  const Terms& terms() const { return terms_; }

  void add_term(Word w, const CycInt& c) {
    for (std::size_t v : w)
      if (v >= variables_) throw InvalidArgument("word uses a variable out of range");
    if (c.order() != order_) throw OrderMismatch("coefficient order differs from the polynomial order");
    auto [it, inserted] = terms_.try_emplace(std::move(w), c);
    if (!inserted) it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  friend WordPoly operator+(WordPoly a, const WordPoly& b) {
    for (const auto& [w, c] : b.terms_) a.add_term(w, c);
    return a;
  }

  friend WordPoly operator-(WordPoly a, const WordPoly& b) {
    for (const auto& [w, c] : b.terms_) a.add_term(w, -c);
    return a;
  }

  /// Concatenation product.
  friend WordPoly operator*(const WordPoly& a, const WordPoly& b) {
    if (a.order_ != b.order_) throw OrderMismatch("word polynomials of different orders");
    WordPoly out(a.variables_, a.order_);
    for (const auto& [u, cu] : a.terms_)
      for (const auto& [v, cv] : b.terms_) {
        Word w = u;
        w.insert(w.end(), v.begin(), v.end());
        out.add_term(std::move(w), cu * cv);
      }
    return out;
  }

 private:
  std::size_t variables_;
  Int order_;
  Terms terms_;
};

/// Commutative polynomial in the slot variables y_{r,i} (slot r, original variable i),
/// of degree at most one in each slot.
class MultilinearPoly {
 public:
  using Slot = std::pair<Int, std::size_t>;
  /// Slot variables sorted by slot, at most one per slot.
  using Monomial = std::vector<Slot>;
  using Terms = std::map<Monomial, CycInt>;

  explicit MultilinearPoly(Int order) : order_(order) {}

  Int order() const { return order_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(Monomial m, const CycInt& c) {
    std::sort(m.begin(), m.end());
    for (std::size_t k = 1; k < m.size(); ++k)
      if (m[k].first == m[k - 1].first) throw InvalidArgument("a slot may carry at most one variable");
    if (c.order() != order_) throw OrderMismatch("coefficient order differs from the polynomial order");
    auto [it, inserted] = terms_.try_emplace(std::move(m), c);
    if (!inserted) it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  /// Moves every slot r to r + k.
  MultilinearPoly shifted(Int k) const {
    MultilinearPoly out(order_);
    for (const auto& [m, c] : terms_) {
      Monomial moved = m;
      for (auto& s : moved) s.first += k;
      out.add_term(std::move(moved), c);
    }
    return out;
  }

  /// Value at alpha[r][i] = value of y_{r,i}.
  CycInt evaluate(const std::vector<std::vector<CycInt>>& alpha) const {
    CycInt total = CycInt::zero(order_);
    for (const auto& [m, c] : terms_) {
      CycInt v = c;
      for (const auto& [slot, var] : m) v = v * alpha.at(static_cast<std::size_t>(slot)).at(var);
      total += v;
    }
    return total;
  }

  friend MultilinearPoly operator+(MultilinearPoly a, const MultilinearPoly& b) {
    for (const auto& [m, c] : b.terms_) a.add_term(m, c);
    return a;
  }

  friend MultilinearPoly operator-(MultilinearPoly a, const MultilinearPoly& b) {
    for (const auto& [m, c] : b.terms_) a.add_term(m, -c);
    return a;
  }

  /// Product of polynomials in disjoint slot ranges.
  friend MultilinearPoly operator*(const MultilinearPoly& a, const MultilinearPoly& b) {
    MultilinearPoly out(a.order_);
    for (const auto& [u, cu] : a.terms_)
      for (const auto& [v, cv] : b.terms_) {
        Monomial m = u;
        m.insert(m.end(), v.begin(), v.end());
        out.add_term(std::move(m), cu * cv);
      }
    return out;
  }

  friend bool operator==(const MultilinearPoly& a, const MultilinearPoly& b) {
    return a.order_ == b.order_ && a.terms_ == b.terms_;
  }

  friend std::ostream& operator<<(std::ostream& os, const MultilinearPoly& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (const auto& [m, c] : p.terms_) {
      os << (first ? "" : " + ") << "[" << c << "]";
      first = false;
      for (const auto& [slot, var] : m) os << " y" << slot << "," << var;
    }
    return os;
  }

 private:
  Int order_;
  Terms terms_;
};

/// Replaces each word x_{i_0} ... x_{i_{d-1}} by y_{0,i_0} ... y_{d-1,i_{d-1}}.
inline MultilinearPoly multilinearize(const WordPoly& p) {
  MultilinearPoly out(p.order());
  std::optional<std::size_t> degree;
  for (const auto& [w, c] : p.terms()) {
    if (degree && *degree != w.size()) throw InvalidArgument("multilinearization needs a homogeneous element");
    degree = w.size();
    MultilinearPoly::Monomial m;
    for (std::size_t r = 0; r < w.size(); ++r) m.emplace_back(static_cast<Int>(r), w[r]);
    out.add_term(std::move(m), c);
  }
  return out;
}

/// Multilinearization of a normal-ordered element; only defined for algebras generated in degree 1.
inline MultilinearPoly multilinearize(const SkewPoly& p, const AlgebraSpec& spec) {
  if (!spec.all_weights_one()) throw Unsupported("multilinearization needs all weights equal to 1");
  return multilinearize(WordPoly::from_normal_order(p));
}

}  // namespace qcy
