#pragma once

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qcy/cycert.hpp"
#include "qcy/hilbert.hpp"
#include "qcy/manifest.hpp"
#include "qcy/points.hpp"
#include "qcy/search.hpp"

namespace qcy::cli {

using Json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitHypothesis = 3;
constexpr int kExitDefect = 4;
constexpr Int kOutputSchema = 1;

/// The command ran but its input violates the hypotheses it needs.
class HypothesisViolation : public Error {
 public:
  using Error::Error;
};

enum class Format { structured, human };

struct Options {
  std::string input;
  std::optional<Int> max_degree, order, bound, chart, vars;
};

/// A rendered report plus the exit code it implies.
struct Outcome {
  Json report;
  int exit_code = kExitOk;
};

inline Json scalar_json(const RootScalar& s) {
  const RootScalar r = s.reduced();
  return Json::array({r.order(), r.exponent()});
}

inline Json scalars_json(const std::vector<RootScalar>& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(scalar_json(s));
  return out;
}

inline Json spec_json(const AlgebraSpec& s) {
  return {{"weights", s.weights()}, {"order", s.order()}, {"exponents", s.exponents()}};
}

inline Json count_json(const PointCount& c) {
  if (c.is_infinite()) return {{"infinite", true}};
  return c.value();
}

inline Json optional_int(const std::optional<Int>& v) { return v ? Json(*v) : Json(nullptr); }

inline Json certificate_json(const CyCertificate& c) {
  Json products = Json::array();
  for (const auto& p : c.column_products) products.push_back(scalars_json(p));
  Json offending = Json::array();
  for (auto [f, j] : c.offending_columns) offending.push_back({{"factor", f}, {"column", j}});
  return {{"criterion", to_string(c.criterion)},
          {"verdict", to_string(c.verdict)},
          {"witness", scalars_json(c.witness)},
          {"witness_verified", witness_verifies(c)},
          {"column_products", products},
          {"offending_columns", offending},
          {"violations", c.violations},
          {"expected_dimension", c.expected_dimension}};
}

namespace detail {

inline const AlgebraSpec& single(const Manifest& m, const char* command) {
  if (m.kind != ManifestKind::algebra)
    throw HypothesisViolation(std::string(command) + " needs a manifest of kind algebra, got " + to_string(m.kind));
  return m.first;
}

inline void require_hypotheses(const AlgebraSpec& s) {
  const auto r = validate_spec(s, true);
  if (r.ok()) return;
  std::string msg = "hypotheses violated:";
  for (const auto& v : r.violations) msg += " " + v.message + ";";
  msg.pop_back();
  throw HypothesisViolation(msg);
}

/// The scalar matrix a torus command works on: the algebra's own, or that of chart I.
inline std::pair<ScalarMatrix, std::string> torus_matrix(const AlgebraSpec& s, const std::optional<Int>& chart) {
  if (!chart) return {s.scalars(), "algebra"};
  if (*chart < 0) throw InvalidArgument("chart index must be non-negative");
  return {chart_parameters(s, static_cast<std::size_t>(*chart)).q, "chart " + std::to_string(*chart)};
}

inline Json strata_json(const ScalarMatrix& q, const std::vector<Int>& h, bool equation) {
  Json out = Json::array();
  for (const auto& st : support_strata(q, h, equation))
    out.push_back({{"support", st.support}, {"equation", st.equation}, {"dimension", optional_int(st.dimension)}});
  return out;
}

inline Json series_json(const HilbertSeries& s, Int upto) {
  Json out{{"coefficients", s.coefficients(upto)}};
  if (const auto& f = s.form()) out["form"] = Json{{"numerator", f->numerator}, {"denominator", f->denominator}};
  return out;
}

}  // namespace detail

inline Json cmd_certify(const Manifest& m) {
  switch (m.kind) {
    case ManifestKind::algebra: return certificate_json(certify_weighted(m.first));
    case ManifestKind::segre: return certificate_json(certify_segre(m.first, *m.second));
    case ManifestKind::mixed: {
      Json j = certificate_json(certify_mixed(m.first, *m.second, m.shape));
      j["shape"] = m.shape == MixedShape::wide ? "wide" : "narrow";
      return j;
    }
  }
  throw InternalDefect("unhandled manifest kind");
}

inline Json cmd_census(const Manifest& m) {
  const AlgebraSpec& s = detail::single(m, "census");
  const CensusReport r = census_weighted_surface(s);
  Json charts = Json::array();
  for (const auto& c : r.charts) {
    Json j{{"id", c.id}, {"description", c.description}, {"count", count_json(c.result.count)}, {"loci", c.result.loci}};
    if (c.result.infinite_pair) j["commuting_pair"] = {c.result.infinite_pair->first, c.result.infinite_pair->second};
    charts.push_back(std::move(j));
  }
  return {{"charts", charts},
          {"total", count_json(r.total)},
          {"infinite_chart", r.infinite_chart ? Json(*r.infinite_chart) : Json(nullptr)},
          {"cy", certify_weighted(s).is_cy()}};
}

inline Json cmd_point_scheme(const Manifest& m) {
  const bool f_eq = m.f_shape == EquationShape::fermat;
  if (m.kind == ManifestKind::algebra) {
    const AlgebraSpec& s = m.first;
    if (!s.all_weights_one()) throw Unsupported("point schemes need all weights equal to 1");
    const std::vector<Int> h(s.size(), static_cast<Int>(s.size()));
    std::optional<Int> best;
    for (const auto& st : support_strata(s.scalars(), h, f_eq))
      if (st.dimension && (!best || *st.dimension > *best)) best = st.dimension;
    return {{"f", to_string(m.f_shape)},
            {"strata", detail::strata_json(s.scalars(), h, f_eq)},
            {"dimension", optional_int(best)},
            {"special", is_special(s.scalars())},
            {"pi_degree", pi_degree(s.scalars())}};
  }
  const AlgebraSpec& a = m.first;
  const AlgebraSpec& b = *m.second;
  const auto dim = point_scheme_dim_product(a, b, m.f_shape, m.g_shape);
  return {{"f", to_string(m.f_shape)},
          {"g", to_string(m.g_shape)},
          {"strata_a", detail::strata_json(a.scalars(), std::vector<Int>(a.size(), static_cast<Int>(a.size())), f_eq)},
          {"strata_b", detail::strata_json(b.scalars(), std::vector<Int>(b.size(), static_cast<Int>(b.size())),
                                           m.g_shape == EquationShape::fermat)},
          {"dimension", optional_int(dim)}};
}

inline Json cmd_pi_degree(const Manifest& m, const std::optional<Int>& chart) {
  const auto [q, source] = detail::torus_matrix(detail::single(m, "pi-degree"), chart);
  const ExponentMatrix em = to_exponent_matrix(q);
  return {{"matrix", source},
          {"order", em.order},
          {"exponents", em.exponents},
          {"image_size", image_size(em.exponents, em.order)},
          {"pi_degree", pi_degree(q)}};
}

inline Json cmd_center(const Manifest& m, const std::optional<Int>& chart) {
  const auto [q, source] = detail::torus_matrix(detail::single(m, "center"), chart);
  const CenterLattice c = center_lattice(q);
  return {{"matrix", source},
          {"order", c.order},
          {"exponents", c.exponent_matrix},
          {"generators", c.generators},
          {"diagonal", c.diagonal},
          {"diagonal_powers", c.diagonal_powers},
          {"mixed_generators", c.mixed_generators},
          {"presentation", c.presentation_hint},
          {"membership_mismatches_up_to_degree_6", center_membership_mismatches(q, c.generators, 6)}};
}

inline Json cmd_hilbert(const Manifest& m, Int max_degree) {
  if (max_degree < 0) throw InvalidArgument("max degree must be non-negative");
  if (m.kind == ManifestKind::algebra) {
    const AlgebraSpec& s = m.first;
    detail::require_hypotheses(s);
    const HilbertSeries ambient = series_qpoly(s.weights());
    const HilbertSeries quotient = quotient_by_regular(ambient, s.degree());
    return {{"ambient", detail::series_json(ambient, max_degree)},
            {"relation_degree", s.degree()},
            {"quotient", detail::series_json(quotient, max_degree)}};
  }
  const AlgebraSpec& a = m.first;
  const AlgebraSpec& b = *m.second;
  detail::require_hypotheses(a);
  detail::require_hypotheses(b);
  std::pair<Int, Int> f, g;
  if (m.kind == ManifestKind::segre) {
    f = {static_cast<Int>(a.size()), 0};
    g = {0, static_cast<Int>(b.size())};
  } else {
    f = {static_cast<Int>(a.size()) - 1, 0};
    g = {1, static_cast<Int>(b.size())};
  }
  const BigradedSeries q = bigraded_series(a.weights(), b.weights()).quotient_by_regular(f.first, f.second).quotient_by_regular(g.first, g.second);
  return {{"relation_bidegrees", {{f.first, f.second}, {g.first, g.second}}},
          {"diagonal", diagonal(q).coefficients(max_degree)}};
}

inline Json cmd_enumerate_weights(Int n_vars, Int bound) {
  const WeightEnumeration e = enumerate_cy_weights(n_vars, bound);
  Json systems = Json::array();
  for (const auto& s : e.systems)
    systems.push_back({{"weights", s.weights}, {"degree", s.degree}, {"in_reference_list", s.in_reference}});
  Json reference = Json::array();
  for (const auto& r : e.reference) {
    Json j{{"weights", r.weights}, {"status", to_string(r.status)}};
    if (!r.non_divisors.empty()) j["non_divisors"] = r.non_divisors;
    reference.push_back(std::move(j));
  }
  return {{"n_vars", n_vars}, {"bound", bound}, {"count", e.systems.size()}, {"systems", systems}, {"reference_list", reference}};
}

inline Json cmd_search_q(const Manifest& m, const std::optional<Int>& order) {
  const AlgebraSpec& s = detail::single(m, "search-q");
  const Int n = order.value_or(s.degree());
  const auto& w = s.weights();
  const bool census_shape = w.size() == 4 && w[0] == 1 && w[1] == 1;
  Json specs = Json::array();
  for (const auto& found : search_q_params(w, n)) {
    const CyCertificate c = certify_weighted(found);
    Json j{{"exponents", found.exponents()}, {"witness", scalar_json(c.witness.at(0))}, {"column_products", scalars_json(c.column_products.at(0))}};
    if (census_shape) j["census_total"] = count_json(census_weighted_surface(found).total);
    specs.push_back(std::move(j));
  }
  return {{"weights", w}, {"order", n}, {"count", specs.size()}, {"specs", specs}};
}

/// Renders a report as indented `key: value` lines. Arrays of scalars print inline as tuples.
inline void render_human(const Json& j, std::ostream& os, int indent = 0) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  auto inline_value = [](const Json& v) -> std::optional<std::string> {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_primitive()) return v.dump();
    if (v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_primitive() && !x.is_string(); })) {
      std::string s = "(";
      for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + v[k].dump();
      return s + ")";
    }
    if (v.is_object() && v.size() == 1 && v.contains("infinite")) return std::string("Infinite");
    return std::nullopt;
  };
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (auto s = inline_value(v))
        os << pad << k << ": " << *s << "\n";
      else {
        os << pad << k << ":" << (v.empty() ? " (none)" : "") << "\n";
        render_human(v, os, indent + 2);
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (auto s = inline_value(v))
        os << pad << "- " << *s << "\n";
      else {
        os << pad << "-\n";
        render_human(v, os, indent + 2);
      }
    }
  } else {
    os << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

/// JSON with two-space indentation; arrays of non-string primitives stay on one line.
inline void render_structured(const Json& j, std::ostream& os, int indent = 0) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  const bool flat_array =
      j.is_array() && std::all_of(j.begin(), j.end(), [](const Json& x) { return x.is_primitive() && !x.is_string(); });
  if (j.is_primitive() || j.empty() || flat_array) {
    if (!flat_array || j.empty()) {
      os << j.dump();
      return;
    }
    os << "[";
    for (std::size_t k = 0; k < j.size(); ++k) os << (k ? ", " : "") << j[k].dump();
    os << "]";
    return;
  }
  os << (j.is_object() ? "{" : "[") << "\n";
  std::size_t k = 0;
  for (auto it = j.begin(); it != j.end(); ++it, ++k) {
    os << pad;
    if (j.is_object()) os << Json(it.key()).dump() << ": ";
    render_structured(*it, os, indent + 2);
    os << (k + 1 < j.size() ? ",\n" : "\n");
  }
  os << std::string(static_cast<std::size_t>(indent), ' ') << (j.is_object() ? "}" : "]");
}

inline void emit(const Json& doc, Format format, std::ostream& out) {
  if (format == Format::structured) {
    render_structured(doc, out);
    out << "\n";
  } else {
    render_human(doc, out);
  }
}

inline Json error_json(const std::string& kind, const std::string& message) { return {{"error", {{"kind", kind}, {"message", message}}}}; }

/// Runs one subcommand on already-parsed options and returns the report with its exit code.
inline Outcome run_command(const std::string& command, const Options& o) {
  Json doc{{"command", command}, {"output_schema", kOutputSchema}};
  auto load = [&]() {
    if (o.input.empty()) throw ParseError(0, 0, "--input FILE is required for " + command);
    Manifest m = parse_manifest(read_text_file(o.input));
    doc["manifest"] = {{"digest", m.digest}, {"name", m.name}, {"kind", to_string(m.kind)}, {"algebra", spec_json(m.first)}};
    if (m.second) doc["manifest"]["second_algebra"] = spec_json(*m.second);
    return m;
  };
  int code = kExitOk;
  if (command == "certify") {
    doc["result"] = cmd_certify(load());
    if (doc["result"]["verdict"] == to_string(Verdict::hypotheses_violated)) code = kExitHypothesis;
  } else if (command == "census") {
    doc["result"] = cmd_census(load());
  } else if (command == "point-scheme") {
    doc["result"] = cmd_point_scheme(load());
  } else if (command == "pi-degree") {
    doc["result"] = cmd_pi_degree(load(), o.chart);
  } else if (command == "center") {
    doc["result"] = cmd_center(load(), o.chart);
  } else if (command == "hilbert") {
    doc["result"] = cmd_hilbert(load(), o.max_degree.value_or(12));
  } else if (command == "search-q") {
    doc["result"] = cmd_search_q(load(), o.order);
  } else if (command == "enumerate-weights") {
    const Int n = o.vars.value_or(4), b = o.bound.value_or(25);
    doc["manifest"] = {{"digest", fnv1a64("enumerate-weights vars=" + std::to_string(n) + " bound=" + std::to_string(b))}};
    doc["result"] = cmd_enumerate_weights(n, b);
  } else {
    throw ParseError(0, 0, "unknown command '" + command + "'");
  }
  return {doc, code};
}

/// Maps an exception to its exit code and error document.
inline Outcome failure(const std::string& command) {
  try {
    throw;
  } catch (const ParseError& e) {
    Json doc = error_json("parse", e.what());
    if (e.line() > 0) doc["error"]["line"] = e.line(), doc["error"]["column"] = e.column();
    return {doc, kExitParse};
  } catch (const HypothesisViolation& e) {
    return {error_json("hypothesis", e.what()), kExitHypothesis};
  } catch (const InternalDefect& e) {
    return {error_json("internal", e.what()), kExitDefect};
  } catch (const DivisibilityError& e) {
    return {error_json("hypothesis", e.what()), kExitHypothesis};
  } catch (const Unsupported& e) {
    return {error_json("hypothesis", e.what()), kExitHypothesis};
  } catch (const InvalidArgument& e) {
    return {error_json("hypothesis", e.what()), kExitHypothesis};
  } catch (const OrderMismatch& e) {
    return {error_json("hypothesis", e.what()), kExitHypothesis};
  } catch (const std::exception& e) {
    return {error_json("internal", command + ": " + e.what()), kExitDefect};
  }
}

/// Entry point shared by the executable and the tests.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Calabi-Yau certification and point counts for quantum weighted hypersurfaces", "qcy"};
  app.require_subcommand(1);
  std::string format = "structured";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"structured", "human"}));
  Options o;
  auto add_input = [&](CLI::App* sub) { sub->add_option("--input", o.input, "Manifest file")->required(); };
  auto add_int = [&](CLI::App* sub, const char* flag, std::optional<Int>& target, const char* help) {
    sub->add_option_function<Int>(flag, [&target](const Int& v) { target = v; }, help);
  };
  std::vector<std::pair<std::string, CLI::App*>> subs;
  auto sub = [&](const char* name, const char* help) {
    CLI::App* s = app.add_subcommand(name, help);
    s->add_option("--format", format, "Output format")->check(CLI::IsMember({"structured", "human"}));
    subs.emplace_back(name, s);
    return s;
  };
  add_input(sub("certify", "Decide the Calabi-Yau property"));
  add_input(sub("census", "Count ordinary and thin points chart by chart"));
  add_input(sub("point-scheme", "Stratify the point scheme by coordinate support"));
  {
    CLI::App* s = sub("pi-degree", "PI degree of the quantum torus");
    add_input(s);
    add_int(s, "--chart", o.chart, "Use the chart where x_I is inverted");
  }
  {
    CLI::App* s = sub("center", "Centre lattice of the quantum torus");
    add_input(s);
    add_int(s, "--chart", o.chart, "Use the chart where x_I is inverted");
  }
  {
    CLI::App* s = sub("hilbert", "Hilbert series coefficients");
    add_input(s);
    add_int(s, "--max-degree", o.max_degree, "Highest degree printed (default 12)");
  }
  {
    CLI::App* s = sub("enumerate-weights", "Enumerate Calabi-Yau weight systems");
    add_int(s, "--bound", o.bound, "Largest weight (default 25)");
    add_int(s, "--vars", o.vars, "Number of variables (default 4)");
  }
  {
    CLI::App* s = sub("search-q", "Search quantum parameters for the manifest weights");
    add_input(s);
    add_int(s, "--order", o.order, "Root of unity order N (default: the degree)");
  }

  std::string command = "qcy";
  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    for (const auto& [name, s] : subs)
      if (s->parsed()) command = name;
    err << "qcy: " << e.what() << "\n";
    emit(error_json("parse", e.what()), Format::structured, out);
    return kExitParse;
  }
  for (const auto& [name, s] : subs)
    if (s->parsed()) command = name;
  const Format fmt = format == "human" ? Format::human : Format::structured;
  Outcome result;
  try {
    result = run_command(command, o);
  } catch (...) {
    result = failure(command);
    err << "qcy " << command << ": " << result.report["error"]["message"].get<std::string>() << "\n";
  }
  emit(result.report, fmt, out);
  return result.exit_code;
}

}  // namespace qcy::cli
