#pragma once

#include <charconv>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qcy/cycert.hpp"
#include "qcy/points/strata.hpp"
#include "qcy/qalgebra.hpp"

namespace qcy {

/// Malformed manifest text. Lines and columns are 1-based.
class ParseError : public Error {
 public:
  /// Line 0 marks an error that belongs to no particular line, such as an unreadable file.
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

constexpr Int kManifestSchema = 1;

enum class ManifestKind { algebra, segre, mixed };

inline const char* to_string(ManifestKind k) {
  switch (k) {
    case ManifestKind::algebra: return "algebra";
    case ManifestKind::segre: return "segre";
    case ManifestKind::mixed: return "mixed";
  }
  return "unknown";
}

/// A parsed manifest. `second` is set for segre and mixed manifests.
struct Manifest {
  std::string name;
  ManifestKind kind = ManifestKind::algebra;
  AlgebraSpec first;
  std::optional<AlgebraSpec> second;
  MixedShape shape = MixedShape::wide;
  EquationShape f_shape = EquationShape::fermat;
  EquationShape g_shape = EquationShape::fermat;
  /// FNV-1a 64 of the raw text, as 16 hex digits.
  std::string digest;
};

inline std::string fnv1a64(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int k = 15; k >= 0; --k, h >>= 4) out[static_cast<std::size_t>(k)] = hex[h & 0xf];
  return out;
}

namespace detail {

struct ManifestLine {
  std::size_t line = 0;
  std::size_t value_column = 0;
  std::string value;
};

struct Token {
  std::string text;
  std::size_t column;
};

inline std::vector<Token> tokens_of(const ManifestLine& l) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < l.value.size()) {
    while (i < l.value.size() && (l.value[i] == ' ' || l.value[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < l.value.size() && l.value[i] != ' ' && l.value[i] != '\t') ++i;
    if (i > start) out.push_back({l.value.substr(start, i - start), l.value_column + start});
  }
  return out;
}

inline Int parse_int(const Token& t, std::size_t line) {
  Int v = 0;
  const char* end = t.text.data() + t.text.size();
  auto [ptr, ec] = std::from_chars(t.text.data(), end, v);
  if (ec != std::errc() || ptr != end) throw ParseError(line, t.column, "expected an integer, got '" + t.text + "'");
  return v;
}

inline IntVector parse_ints(const ManifestLine& l) {
  IntVector out;
  for (const auto& t : tokens_of(l)) out.push_back(parse_int(t, l.line));
  if (out.empty()) throw ParseError(l.line, l.value_column, "expected a list of integers");
  return out;
}

inline std::string parse_word(const ManifestLine& l) {
  auto t = tokens_of(l);
  if (t.size() != 1) throw ParseError(l.line, l.value_column, "expected a single word");
  return t[0].text;
}

}  // namespace detail

/// Parses the line-oriented manifest format:
///
///   # comment
///   schema = 1
///   kind = algebra | segre | mixed
///   name = free text
///   order = N
///   weights = a_0 a_1 ...
///   row = e_00 e_01 ...        (one per variable; omitted rows mean a commutative algebra)
///   b.order, b.weights, b.row  (second factor of segre and mixed manifests)
///   mixed.shape = wide | narrow
///   equation.f = none | fermat
///   equation.g = none | fermat | mixed
///
/// Exponents are integers mod N; q_{ij} = zeta_N^{e_ij}.
inline Manifest parse_manifest(const std::string& text) {
  static const std::vector<std::string> keys{"schema", "kind",   "name",    "order",       "weights",    "row",
                                             "b.order", "b.weights", "b.row", "mixed.shape", "equation.f", "equation.g"};
  std::map<std::string, std::vector<detail::ManifestLine>> seen;
  std::size_t line_no = 0;
  std::istringstream in(text);
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::string line = raw.substr(0, raw.find('#'));
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(line_no, first + 1, "expected 'key = value'");
    std::string key = line.substr(first, eq - first);
    key.erase(key.find_last_not_of(" \t") + 1);
    if (key.empty()) throw ParseError(line_no, first + 1, "missing key before '='");
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) throw ParseError(line_no, first + 1, "unknown key '" + key + "'");
    auto& slot = seen[key];
    if (!slot.empty() && key != "row" && key != "b.row")
      throw ParseError(line_no, first + 1, "duplicate key '" + key + "' (first on line " + std::to_string(slot.front().line) + ")");
    std::string value = line.substr(eq + 1);
    std::size_t value_col = eq + 2;
    const auto vstart = value.find_first_not_of(" \t");
    if (vstart == std::string::npos) throw ParseError(line_no, eq + 1, "missing value for '" + key + "'");
    value_col += vstart;
    value = value.substr(vstart);
    value.erase(value.find_last_not_of(" \t") + 1);
    slot.push_back({line_no, value_col, value});
  }
  const std::size_t eof_line = line_no + 1;
  auto require = [&](const std::string& key) -> const detail::ManifestLine& {
    auto it = seen.find(key);
    if (it == seen.end()) throw ParseError(eof_line, 1, "missing required key '" + key + "'");
    return it->second.front();
  };

  const auto& schema = require("schema");
  auto st = detail::tokens_of(schema);
  if (st.size() != 1 || detail::parse_int(st[0], schema.line) != kManifestSchema)
    throw ParseError(schema.line, schema.value_column, "unsupported schema '" + schema.value + "', expected " + std::to_string(kManifestSchema));

  Manifest m;
  m.digest = fnv1a64(text);
  if (seen.count("name")) m.name = seen["name"].front().value;
  if (seen.count("kind")) {
    const auto& l = seen["kind"].front();
    const std::string k = detail::parse_word(l);
    if (k == "algebra")
      m.kind = ManifestKind::algebra;
    else if (k == "segre")
      m.kind = ManifestKind::segre;
    else if (k == "mixed")
      m.kind = ManifestKind::mixed;
    else
      throw ParseError(l.line, l.value_column, "kind must be algebra, segre or mixed");
  }

  auto build = [&](const std::string& prefix) {
    const auto& order_line = require(prefix + "order");
    const IntVector order = detail::parse_ints(order_line);
    if (order.size() != 1 || order[0] < 1) throw ParseError(order_line.line, order_line.value_column, "order must be one positive integer");
    const auto& wl = require(prefix + "weights");
    const IntVector weights = detail::parse_ints(wl);
    for (std::size_t i = 0; i < weights.size(); ++i)
      if (weights[i] < 1) throw ParseError(wl.line, detail::tokens_of(wl)[i].column, "weights must be positive");
    const std::size_t n = weights.size();
    IntMatrix rows;
    auto it = seen.find(prefix + "row");
    if (it == seen.end()) {
      rows.assign(n, IntVector(n, 0));
    } else {
      for (const auto& rl : it->second) {
        IntVector r = detail::parse_ints(rl);
        if (r.size() != n)
          throw ParseError(rl.line, rl.value_column,
                           "row has " + std::to_string(r.size()) + " entries but there are " + std::to_string(n) + " weights");
        rows.push_back(std::move(r));
      }
      if (rows.size() != n)
        throw ParseError(it->second.back().line, 1,
                         std::to_string(rows.size()) + " rows given but there are " + std::to_string(n) + " weights");
    }
    AlgebraSpec spec;
    try {
      spec = AlgebraSpec(weights, order[0], rows);
    } catch (const InvalidArgument& e) {
      throw ParseError(wl.line, wl.value_column, e.what());
    }
    const auto report = validate_spec(spec, false);
    if (!report.ok()) {
      const auto& v = report.violations.front();
      const std::size_t i = v.indices.front(), j = v.indices.back();
      if (it == seen.end()) throw InternalDefect("a commutative spec failed structural validation");
      const auto& rl = it->second[i];
      throw ParseError(rl.line, detail::tokens_of(rl)[j].column, v.message + " (exponents mod " + std::to_string(order[0]) + ")");
    }
    return spec;
  };
  m.first = build("");

  const bool two = m.kind != ManifestKind::algebra;
  for (const char* k : {"b.order", "b.weights", "b.row"})
    if (!two && seen.count(k)) throw ParseError(seen[k].front().line, 1, std::string("'") + k + "' needs kind segre or mixed");
  if (two) m.second = build("b.");

  if (seen.count("mixed.shape")) {
    const auto& l = seen["mixed.shape"].front();
    if (m.kind != ManifestKind::mixed) throw ParseError(l.line, 1, "'mixed.shape' needs kind mixed");
    const std::string s = detail::parse_word(l);
    if (s == "wide")
      m.shape = MixedShape::wide;
    else if (s == "narrow")
      m.shape = MixedShape::narrow;
    else
      throw ParseError(l.line, l.value_column, "mixed.shape must be wide or narrow");
  }

  auto equation = [&](const char* key, bool allow_mixed) -> std::optional<EquationShape> {
    if (!seen.count(key)) return std::nullopt;
    const auto& l = seen[key].front();
    const std::string s = detail::parse_word(l);
    if (s == "none") return EquationShape::none;
    if (s == "fermat") return EquationShape::fermat;
    if (s == "mixed" && allow_mixed) return EquationShape::mixed;
    throw ParseError(l.line, l.value_column, std::string(key) + (allow_mixed ? " must be none, fermat or mixed" : " must be none or fermat"));
  };
  if (m.kind == ManifestKind::mixed) m.g_shape = EquationShape::mixed;
  if (auto f = equation("equation.f", false)) m.f_shape = *f;
  if (auto g = equation("equation.g", true)) {
    if (m.kind == ManifestKind::algebra) throw ParseError(seen["equation.g"].front().line, 1, "'equation.g' needs kind segre or mixed");
    m.g_shape = *g;
  }
  return m;
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, 0, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace qcy
