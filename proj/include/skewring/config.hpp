#ifndef SKEWRING_CONFIG_HPP
#define SKEWRING_CONFIG_HPP

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "skewring/algebra.hpp"
#include "skewring/maps.hpp"
#include "skewring/matrix.hpp"
#include "skewring/poly.hpp"
#include "skewring/series.hpp"
#include "skewring/text.hpp"

namespace skewring {

using json = nlohmann::ordered_json;

namespace detail {

[[noreturn]] inline void bad_config(const std::string& why) { throw Error(Errc::invalid_config, why); }

inline Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  bad_config("expected a rational as \"p/q\" string or integer, got " + j.dump());
}

inline std::vector<Rational> rationals_from_json(const json& j) {
  if (!j.is_array()) bad_config("expected an array of rationals, got " + j.dump());
  std::vector<Rational> out;
  for (const auto& v : j) out.push_back(rational_from_json(v));
  return out;
}

inline json rationals_to_json(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(format_rational(x));
  return out;
}

inline const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad_config(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// AlgebraSpec <-> JSON

inline json algebra_to_json(const AlgebraSpec& s) {
  json j;
  j["name"] = s.name;
  j["basis"] = s.basis;
  json table = json::array();
  for (const auto& row : s.table) {
    json r = json::array();
    for (const auto& cell : row) r.push_back(detail::rationals_to_json(cell));
    table.push_back(std::move(r));
  }
  j["table"] = std::move(table);
  j["unit"] = detail::rationals_to_json(s.unit);
  if (s.involution) {
    json inv = json::array();
    for (const auto& row : *s.involution) inv.push_back(detail::rationals_to_json(row));
    j["involution"] = std::move(inv);
  }
  if (s.division) j["division"] = true;
  return j;
}

inline AlgebraSpec algebra_from_json(const json& j) {
  AlgebraSpec s;
  s.name = detail::field(j, "name").get<std::string>();
  s.basis = detail::field(j, "basis").get<std::vector<std::string>>();
  for (const auto& row : detail::field(j, "table")) {
    std::vector<std::vector<Rational>> r;
    for (const auto& cell : row) r.push_back(detail::rationals_from_json(cell));
    s.table.push_back(std::move(r));
  }
  s.unit = detail::rationals_from_json(detail::field(j, "unit"));
  if (j.contains("involution")) {
    std::vector<std::vector<Rational>> inv;
    for (const auto& row : j.at("involution")) inv.push_back(detail::rationals_from_json(row));
    s.involution = std::move(inv);
  }
  s.division = j.value("division", false);
  return s;
}

// ---------------------------------------------------------------------------
// Ring descriptors

/// Builds a coefficient ring from its JSON descriptor. Strings name built-in
/// algebras ("Q", "Q(i)", "H", "O", "S", "H+"); objects are an AlgebraSpec,
/// {"matrix": R, "n": k}, {"jordan": R}, {"double": R} or
/// {"polynomial": R, "variable": "Y", "laurent": bool, "twist": T, "delta": T}.
inline RingPtr ring_from_json(const json& j);

/// Builds a twist map on `ring`. Role sigma additionally requires the map to
/// respect 1 and be bijective.
inline TwistMap twist_from_json(const json& j, const RingPtr& ring, MapRole role = MapRole::sigma);

namespace detail {

inline AlgebraPtr require_algebra(const RingPtr& r, const char* what) {
  auto a = std::dynamic_pointer_cast<const AlgebraRing>(r);
  if (!a) bad_config(std::string(what) + " requires a finite-dimensional algebra");
  return a;
}

inline std::shared_ptr<const MatrixRing> require_matrix(const RingPtr& r, const char* what) {
  auto m = std::dynamic_pointer_cast<const MatrixRing>(r);
  if (!m) bad_config(std::string(what) + " requires a matrix ring");
  return m;
}

inline Element element_from_json(const json& j, const RingPtr& ring) {
  if (j.is_string()) return parse_element(j.get<std::string>(), ring);
  auto coords = rationals_from_json(j);
  if (!ring->dimension() || *ring->dimension() != coords.size())
    bad_config("coordinate vector does not match the ring dimension");
  return ring->from_coordinates(coords);
}

}  // namespace detail

inline RingPtr ring_from_json(const json& j) {
  if (j.is_string()) {
    const auto name = j.get<std::string>();
    if (name == "Q") return rationals();
    if (name == "Q(i)" || name == "C") return gaussian_rationals();
    if (name == "H") return quaternions();
    if (name == "O") return octonions();
    if (name == "S") return sedenions();
    if (name == "H+") return jordan_quaternions();
    detail::bad_config("unknown ring \"" + name + "\"");
  }
  if (!j.is_object()) detail::bad_config("ring descriptor must be a string or object");
  if (j.contains("matrix")) {
    const auto n = detail::field(j, "n").get<std::int64_t>();
    if (n < 1) detail::bad_config("matrix size must be positive");
    return matrix_algebra(ring_from_json(j.at("matrix")), static_cast<std::size_t>(n));
  }
  if (j.contains("jordan"))
    return AlgebraRing::create(jordan_algebra(*detail::require_algebra(ring_from_json(j.at("jordan")), "jordan")));
  if (j.contains("double"))
    return AlgebraRing::create(
        cayley_dickson_double(*detail::require_algebra(ring_from_json(j.at("double")), "double")));
  if (j.contains("polynomial")) {
    RingPtr base = ring_from_json(j.at("polynomial"));
    const auto var = j.value("variable", std::string("Y"));
    const bool laurent = j.value("laurent", false);
    if (!j.contains("twist") && !j.contains("delta")) return polynomial_ring(base, var, laurent);
    // twisted inner ring: the twist is built on the coefficients
    TwistMap sigma = j.contains("twist") ? twist_from_json(j.at("twist"), base) : identity_map(base);
    RingConfig c{base, sigma, std::nullopt, var, laurent ? Shape::laurent : Shape::ore};
    if (j.contains("delta")) c.delta = twist_from_json(j.at("delta"), base, MapRole::delta);
    return SkewPolyRing::create(std::move(c));
  }
  return AlgebraRing::create(algebra_from_json(j));
}

inline TwistMap twist_from_json(const json& j, const RingPtr& ring, MapRole role) {
  const auto kind = detail::field(j, "kind").get<std::string>();
  auto build = [&]() -> TwistMap {
    if (kind == "identity") return identity_map(ring);
    if (kind == "zero") return zero_map(ring);
    if (kind == "q_twist") return q_twist(detail::require_algebra(ring, "q_twist"), detail::rational_from_json(detail::field(j, "q")));
    if (kind == "transpose") return transpose(detail::require_matrix(ring, "transpose"));
    if (kind == "diag_swap") return diag_swap(detail::require_matrix(ring, "diag_swap"));
    if (kind == "conj_transpose") return conj_transpose(detail::require_matrix(ring, "conj_transpose"));
    if (kind == "conjugation") return conjugation(ring);
    if (kind == "inner") return inner(ring, detail::element_from_json(detail::field(j, "unit"), ring));
    if (kind == "derivation")
      return standard_derivation(detail::element_from_json(detail::field(j, "a"), ring),
                                 detail::element_from_json(detail::field(j, "b"), ring));
    if (kind == "matrix") {
      const auto& rows = detail::field(j, "matrix");
      if (!rows.is_array() || rows.empty()) detail::bad_config("\"matrix\" must be a non-empty array of rows");
      QMatrix m(rows.size(), rows.size());
      for (std::size_t i = 0; i < rows.size(); ++i) {
        auto row = detail::rationals_from_json(rows[i]);
        if (row.size() != rows.size()) detail::bad_config("\"matrix\" must be square");
        for (std::size_t k = 0; k < row.size(); ++k) m(i, k) = row[k];
      }
      return linear_map(ring, m);
    }
    if (kind == "y_scale" || kind == "coefficientwise" || kind == "derivative") {
      auto poly = std::dynamic_pointer_cast<const SkewPolyRing>(ring);
      if (!poly) detail::bad_config(kind + " requires a polynomial coefficient ring");
      if (kind == "derivative") return derivative(poly);
      std::optional<TwistMap> base;
      if (j.contains("base")) base = twist_from_json(j.at("base"), poly->coefficients());
      if (kind == "coefficientwise") {
        if (!base) detail::bad_config("coefficientwise requires a \"base\" twist");
        return coefficientwise(poly, *base);
      }
      const Rational q = detail::rational_from_json(detail::field(j, "q"));
      return base ? variable_scale(poly, q, *base) : variable_scale(poly, q);
    }
    detail::bad_config("unknown twist kind \"" + kind + "\"");
  };
  TwistMap map = build();
  auto report = validate_twist_axioms(map, role);
  for (const auto& c : report.checks) {
    if (c.pass) continue;
    if (c.axiom == "respects_one") throw Error(Errc::does_not_respect_one, "does not respect one");
    if (c.axiom == "bijective") throw Error(Errc::not_bijective, "not bijective");
    throw Error(Errc::invalid_config, map.descriptor() + " fails axiom " + c.axiom);
  }
  return map;
}

// ---------------------------------------------------------------------------
// CLI configuration

enum class ConfigShape { ore, laurent, power_series, laurent_series };

inline const char* config_shape_name(ConfigShape s) {
  switch (s) {
    case ConfigShape::ore: return "ore";
    case ConfigShape::laurent: return "laurent";
    case ConfigShape::power_series: return "power_series";
    case ConfigShape::laurent_series: return "laurent_series";
  }
  return "?";
}

struct CliConfig {
  PolyRingPtr ring;
  ConfigShape shape = ConfigShape::ore;
  std::optional<std::int64_t> precision;
  std::string digest;

  bool is_series() const { return shape == ConfigShape::power_series || shape == ConfigShape::laurent_series; }
  SeriesKind series_kind() const {
    return shape == ConfigShape::laurent_series ? SeriesKind::laurent : SeriesKind::power;
  }
};

/// Fields: ring, twist, delta (optional), shape, precision (series shapes),
/// variable (default "X").
inline CliConfig config_from_json(const json& j) {
  CliConfig c;
  RingPtr coefficients = ring_from_json(detail::field(j, "ring"));
  TwistMap sigma = j.contains("twist") ? twist_from_json(j.at("twist"), coefficients) : identity_map(coefficients);
  std::optional<TwistMap> delta;
  if (j.contains("delta") && !j.at("delta").is_null())
    delta = twist_from_json(j.at("delta"), coefficients, MapRole::delta);
  const auto shape = j.value("shape", std::string("ore"));
  if (shape == "ore") c.shape = ConfigShape::ore;
  else if (shape == "laurent") c.shape = ConfigShape::laurent;
  else if (shape == "power_series") c.shape = ConfigShape::power_series;
  else if (shape == "laurent_series") c.shape = ConfigShape::laurent_series;
  else detail::bad_config("unknown shape \"" + shape + "\"");
  if (c.is_series()) {
    if (!j.contains("precision")) detail::bad_config("series shapes require a precision");
    c.precision = j.at("precision").get<std::int64_t>();
    if (*c.precision < 0) detail::bad_config("precision must be non-negative");
    if (delta) detail::bad_config("series shapes do not support a derivation");
  }
  const bool laurent = c.shape == ConfigShape::laurent || c.shape == ConfigShape::laurent_series;
  c.ring = SkewPolyRing::create(
      {coefficients, sigma, delta, j.value("variable", std::string("X")), laurent ? Shape::laurent : Shape::ore});
  c.digest = detail::digest(j.dump());
  return c;
}

inline CliConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) detail::bad_config("cannot open config file " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    detail::bad_config(std::string("malformed JSON: ") + e.what());
  }
  return config_from_json(j);
}

using Expr = std::variant<Element, TruncatedSeries>;

/// Series shapes require the O(X^N) marker; polynomial shapes reject it.
inline Expr parse_expr(std::string_view text, const CliConfig& config) {
  if (config.is_series()) {
    TruncatedSeries s = parse_series(text, config.ring, config.series_kind());
    if (config.precision && s.precision() > *config.precision) return s.truncated(*config.precision);
    return s;
  }
  return parse_element(text, config.ring);
}

inline std::string expr_text(const Expr& e) {
  return std::visit([](const auto& x) { return x.str(); }, e);
}

}  // namespace skewring

#endif
