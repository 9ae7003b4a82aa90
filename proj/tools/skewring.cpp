// Command-line front end: verify, mul, reduce, pi, classify.
// Exit status: 0 success, 1 a verification check failed, 2 bad input.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "skewring/skewring.hpp"

using namespace skewring;

namespace {

constexpr int kFailed = 1;
constexpr int kBadInput = 2;

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(Errc::invalid_config, "cannot write " + path);
  out << text;
}

std::vector<std::string> read_generators(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::invalid_config, "cannot open generator file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      throw Error(Errc::invalid_config, std::string("malformed generator file: ") + e.what());
    }
    return j.get<std::vector<std::string>>();
  }
  std::vector<std::string> out;
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);)
    if (line.find_first_not_of(" \t\r") != std::string::npos && line[line.find_first_not_of(" \t\r")] != '#')
      out.push_back(line);
  return out;
}

json map_json(const TwistMap& m) {
  json j;
  j["descriptor"] = m.descriptor();
  j["tags"] = m.tags().names();
  if (m.ring()->dimension()) {
    auto fo = detect_finite_order(m, 12);
    if (fo.order)
      j["order"] = *fo.order;
    else
      j["order"] = fo.infinite_certified ? "infinite" : "none up to 12";
  }
  return j;
}

int cmd_verify(const std::string& suite, const std::string& config_path, const std::string& format,
               const std::string& out, bool timing) {
  SuiteScope scope;
  std::string digest;
  if (!config_path.empty()) {
    CliConfig c = load_config(config_path);
    scope.push_back({"config", c.ring});
    digest = c.digest;
  }
  SuiteReport r = run_suite(suite, scope, digest);
  write_output(emit_report(r, format == "markdown" ? ReportFormat::markdown : ReportFormat::json, timing), out);
  return r.ok() ? 0 : kFailed;
}

int cmd_mul(const std::string& config_path, const std::string& a, const std::string& b) {
  CliConfig c = load_config(config_path);
  Expr x = parse_expr(a, c), y = parse_expr(b, c);
  if (c.is_series())
    std::cout << (std::get<TruncatedSeries>(x) * std::get<TruncatedSeries>(y)).str() << "\n";
  else
    std::cout << (std::get<Element>(x) * std::get<Element>(y)).str() << "\n";
  return 0;
}

int cmd_reduce(const std::string& config_path, const std::string& gens_path, const std::string& expr,
               const std::string& side, std::size_t steps) {
  CliConfig c = load_config(config_path);
  auto texts = read_generators(gens_path);
  if (texts.empty()) throw Error(Errc::invalid_config, "generator file is empty");
  json j;
  json records = json::array();
  if (c.is_series()) {
    if (side != "right") throw Error(Errc::invalid_config, "series reduction is right-sided");
    std::vector<TruncatedSeries> gens;
    for (const auto& t : texts) gens.push_back(std::get<TruncatedSeries>(parse_expr(t, c)));
    auto f = std::get<TruncatedSeries>(parse_expr(expr, c));
    auto r = right_reduce(f, gens, steps);
    for (const auto& s : r.steps) records.push_back({{"generator", s.generator}, {"cofactor", s.cofactor.str()}, {"side", "right"}});
    j["input"] = f.str();
    j["steps"] = std::move(records);
    j["remainder"] = r.remainder.str();
    j["irreducible"] = r.irreducible;
    j["replay_ok"] = replay(r) == f;
  } else {
    std::vector<Element> gens;
    for (const auto& t : texts) gens.push_back(std::get<Element>(parse_expr(t, c)));
    Element f = std::get<Element>(parse_expr(expr, c));
    auto r = reduce(f, gens, side == "left" ? CofactorSide::left : CofactorSide::right);
    for (const auto& s : r.steps)
      records.push_back({{"generator", s.generator}, {"cofactor", s.cofactor.str()}, {"side", cofactor_side_name(s.side)}});
    j["input"] = f.str();
    j["steps"] = std::move(records);
    j["remainder"] = r.remainder.str();
    j["irreducible"] = r.irreducible;
    j["replay_ok"] = replay(r) == f;
  }
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_pi(std::int64_t i, std::int64_t m, bool emit_words, const std::string& config_path, const std::string& apply) {
  if (i < 0 || m < 0) throw Error(Errc::invalid_argument, "indices must be non-negative");
  auto words = pi_words(i, m);
  std::cout << "pi_" << i << "^" << m << ": " << words.size() << " words\n";
  if (emit_words)
    for (const auto& w : words) {
      std::string shown;
      for (char ch : w) shown += std::string(shown.empty() ? "" : " o ") + (ch == 's' ? "sigma" : "delta");
      std::cout << shown << "\n";
    }
  if (!apply.empty()) {
    if (config_path.empty()) throw Error(Errc::invalid_config, "--apply needs --config");
    CliConfig c = load_config(config_path);
    const auto& ring = *c.ring;
    PiFamily fam{ring.sigma(), ring.delta() ? *ring.delta() : zero_map(ring.coefficients())};
    Element r = parse_element(apply, ring.coefficients());
    std::cout << pi_apply(fam, i, m, r).str() << "\n";
  }
  return 0;
}

int cmd_classify(const std::string& config_path) {
  CliConfig c = load_config(config_path);
  const auto& ring = *c.ring;
  json j;
  j["ring"] = ring.descriptor();
  j["shape"] = config_shape_name(c.shape);
  if (c.precision) j["precision"] = *c.precision;
  j["sigma"] = map_json(ring.sigma());
  if (ring.delta()) j["delta"] = map_json(*ring.delta());
  const RingPtr& coeffs = ring.coefficients();
  if (spanning_checkable(*coeffs)) {
    const bool assoc = spanning_associative(coeffs, 2);
    j["coefficients_associative"] = assoc;
    j["coefficients_commutative"] = coeffs->dimension() ? json(is_commutative(*coeffs)) : json(nullptr);
    if (!ring.delta())
      j["associative"] = assoc && ring.sigma().has(MapTag::automorphism);
  }
  j["digest"] = c.digest;
  std::cout << j.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact arithmetic in twisted polynomial, Laurent and series rings"};
  app.require_subcommand(1);

  std::string suite, config, format = "json", out, side = "right", gens, apply;
  std::vector<std::string> exprs;
  std::string expr;
  std::int64_t pi_i = 0, pi_m = 0;
  std::size_t steps = 20;
  bool emit_words = false, no_timing = false;

  auto* verify = app.add_subcommand("verify", "Run a named verification suite");
  verify->add_option("--suite", suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--config", config, "Ring configuration (JSON)");
  verify->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "markdown"}));
  verify->add_option("--out", out, "Write the report to a file");
  verify->add_flag("--no-timing", no_timing, "Omit elapsed times from the report");

  auto* mul = app.add_subcommand("mul", "Multiply two expressions");
  mul->add_option("--config", config, "Ring configuration (JSON)")->required();
  mul->add_option("exprs", exprs, "Two expressions")->required()->expected(2);

  auto* red = app.add_subcommand("reduce", "Reduce an expression by generators");
  red->add_option("--config", config, "Ring configuration (JSON)")->required();
  red->add_option("--gens", gens, "Generators: JSON array of strings or one per line")->required();
  red->add_option("--side", side, "Cofactor side")->check(CLI::IsMember({"left", "right"}));
  red->add_option("--steps", steps, "Series reduction steps");
  red->add_option("expr", expr, "Expression")->required();

  auto* pi = app.add_subcommand("pi", "Words of the operator pi_i^m");
  pi->add_option("--i", pi_i, "Number of sigma letters")->required();
  pi->add_option("--m", pi_m, "Word length")->required();
  pi->add_flag("--emit-words", emit_words, "Print each word");
  pi->add_option("--config", config, "Ring configuration supplying sigma and delta");
  pi->add_option("--apply", apply, "Coefficient to apply pi_i^m to");

  auto* classify = app.add_subcommand("classify", "Classify the twist maps of a configuration");
  classify->add_option("--config", config, "Ring configuration (JSON)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kBadInput;
  }

  try {
    if (*verify) return cmd_verify(suite, config, format, out, !no_timing);
    if (*mul) return cmd_mul(config, exprs[0], exprs[1]);
    if (*red) return cmd_reduce(config, gens, expr, side, steps);
    if (*pi) return cmd_pi(pi_i, pi_m, emit_words, config, apply);
    if (*classify) return cmd_classify(config);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}
