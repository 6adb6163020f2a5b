#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "bjq/acceptance.hpp"
#include "bjq/builtins.hpp"
#include "bjq/dynamics.hpp"
#include "bjq/grid_io.hpp"
#include "bjq/parse.hpp"
#include "bjq/testgen.hpp"

using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bjq::OrderingRule parse_rule(const std::string& name) {
  if (name == "bj" || name == "born-jordan") return bjq::OrderingRule::BornJordan;
  if (name == "weyl") return bjq::OrderingRule::Weyl;
  throw UsageError("unknown ordering rule '" + name + "' (expected bj or weyl)");
}

struct Options {
  bool pretty = false;
  int exit_code = 0;
};

void emit(const Options& opts, const json& report) {
  std::cout << (opts.pretty ? report.dump(2) : report.dump()) << "\n";
}

bjq::ClassicalPoly parse_expr(const std::string& text) {
  return bjq::parse_classical(text);
}

// Promote two polynomials onto a shared phase space.
void align(bjq::ClassicalPoly& a, bjq::ClassicalPoly& b) {
  int dof = std::max(a.dof(), b.dof());
  a = a.promoted(dof);
  b = b.promoted(dof);
}

bjq::GridSpec spec_from_flags(int n, double l, double hbar) {
  if (l > 0) return bjq::GridSpec::make(n, l, hbar);
  return bjq::GridSpec::with_default_length(n, hbar);
}

bool looks_like_file(const std::string& name) {
  return std::filesystem::exists(name);
}

json read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw bjq::FileFormatError("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw bjq::FileFormatError("'" + path + "': " + e.what());
  }
  return j;
}

double config_number(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number())
    throw bjq::FileFormatError(std::string("config: missing numeric field '") + key + "'");
  return j.at(key).get<double>();
}

bjq::GridSpec config_spec(const json& j) {
  int n = static_cast<int>(config_number(j, "N"));
  double hbar = j.contains("hbar") ? config_number(j, "hbar") : 1.0;
  try {
    if (j.contains("L")) return bjq::GridSpec::make(n, config_number(j, "L"), hbar);
    return bjq::GridSpec::with_default_length(n, hbar);
  } catch (const bjq::GridError& e) {
    throw bjq::FileFormatError(std::string("config: ") + e.what());
  }
}

bjq::PhaseSpaceGridFunction config_function(const json& j, const char* key,
                                            const bjq::GridSpec& spec) {
  if (!j.contains(key))
    throw bjq::FileFormatError(std::string("config: missing field '") + key + "'");
  const json& v = j.at(key);
  if (v.is_string()) {
    try {
      return bjq::builtin_function(spec, v.get<std::string>());
    } catch (const bjq::UnknownBuiltin& e) {
      throw bjq::FileFormatError(std::string("config: ") + e.what());
    }
  }
  if (v.is_object() && v.contains("file")) {
    bjq::PhaseSpaceGridFunction f = bjq::load_psfunction(v.at("file").get<std::string>());
    if (f.spec != spec) throw bjq::FileFormatError("config: file grid differs from N/L/hbar");
    return f;
  }
  throw bjq::FileFormatError(std::string("config: field '") + key +
                             "' must be a builtin name or {\"file\": path}");
}

bjq::GridState config_state(const json& j, const char* key, const bjq::GridSpec& spec) {
  if (!j.contains(key))
    throw bjq::FileFormatError(std::string("config: missing field '") + key + "'");
  const json& v = j.at(key);
  if (v.is_string()) {
    try {
      return bjq::builtin_state(spec, v.get<std::string>());
    } catch (const bjq::UnknownBuiltin& e) {
      throw bjq::FileFormatError(std::string("config: ") + e.what());
    }
  }
  if (v.is_object() && v.contains("file")) {
    bjq::GridState psi = bjq::load_state(v.at("file").get<std::string>());
    if (psi.spec != spec) throw bjq::FileFormatError("config: file grid differs from N/L/hbar");
    return psi;
  }
  throw bjq::FileFormatError(std::string("config: field '") + key +
                             "' must be a builtin name or {\"file\": path}");
}

std::string residual_pair_text(
    const std::vector<std::pair<bjq::OperatorPoly, bjq::OperatorPoly>>& pairs) {
  std::string out;
  for (const auto& [first, second] : pairs) {
    if (!out.empty()) out += "; ";
    out += "(" + bjq::print_canonical(first) + ", " + bjq::print_canonical(second) + ")";
  }
  return out;
}

void cmd_quantize(Options& opts, const std::string& rule_name, const std::string& expr) {
  bjq::OrderingRule rule = parse_rule(rule_name);
  bjq::ClassicalPoly f = parse_expr(expr);
  bjq::OperatorPoly op = bjq::quantize(f, rule);
  emit(opts, {{"check", "quantize"},
              {"inputs", {{"rule", bjq::rule_name(rule)}, {"expr", bjq::print_canonical(f)}}},
              {"result", bjq::print_canonical(op)}});
}

void cmd_bracket(Options& opts, bool quantum, bool poisson, const std::string& rule_name,
                 const std::string& expr1, const std::string& expr2) {
  if (quantum == poisson)
    throw UsageError("bracket: pass exactly one of --quantum / --poisson");
  bjq::ClassicalPoly f = parse_expr(expr1);
  bjq::ClassicalPoly g = parse_expr(expr2);
  align(f, g);
  json inputs = {{"expr1", bjq::print_canonical(f)}, {"expr2", bjq::print_canonical(g)}};
  std::string result;
  if (poisson) {
    inputs["bracket"] = "poisson";
    result = bjq::print_canonical(bjq::poisson_bracket(f, g));
  } else {
    inputs["bracket"] = "quantum";
    auto lift = [&](const bjq::ClassicalPoly& x) {
      if (rule_name.empty()) return bjq::as_standard_ordered(x);
      return bjq::quantize(x, parse_rule(rule_name));
    };
    if (rule_name.empty()) {
      // Read inputs literally as standard-ordered operator words.
      inputs["reading"] = "standard-ordered";
    } else {
      inputs["rule"] = bjq::rule_name(parse_rule(rule_name));
    }
    result = bjq::print_canonical(bjq::quantum_bracket(lift(f), lift(g)));
  }
  emit(opts, {{"check", "bracket"}, {"inputs", inputs}, {"result", result}});
}

void cmd_check_groenewold(Options& opts) {
  bjq::OperatorPoly d = bjq::groenewold_discrepancy();
  bjq::OperatorPoly expected =
      bjq::OperatorPoly::constant(1, bjq::HBarPolynomial::term(2, bjq::GaussianRational(mpq_class(1, 3))));
  bool pass = !d.is_zero() && d.is_scalar() && (d == expected || d == -expected);
  emit(opts, {{"check", "groenewold"},
              {"inputs", json::object()},
              {"result", bjq::print_canonical(d)},
              {"pass", pass},
              {"metrics", {{"magnitude_thirds_hbar2", pass ? 1 : 0}}}});
  opts.exit_code = pass ? 0 : 1;
}

void cmd_check_strengthened(Options& opts, const std::string& f1s, const std::string& g1s,
                            const std::string& f2s, const std::string& g2s,
                            const std::string& rule_name) {
  bjq::OrderingRule rule = parse_rule(rule_name);
  bjq::ClassicalPoly f1 = parse_expr(f1s), g1 = parse_expr(g1s);
  bjq::ClassicalPoly f2 = parse_expr(f2s), g2 = parse_expr(g2s);
  int dof = std::max({f1.dof(), g1.dof(), f2.dof(), g2.dof()});
  f1 = f1.promoted(dof);
  g1 = g1.promoted(dof);
  f2 = f2.promoted(dof);
  g2 = g2.promoted(dof);
  bjq::OperatorPoly residual = bjq::strengthened_rule_residual(f1, g1, f2, g2, rule);
  bool pass = residual.is_zero();
  emit(opts, {{"check", "strengthened"},
              {"inputs",
               {{"f1", bjq::print_canonical(f1)},
                {"g1", bjq::print_canonical(g1)},
                {"f2", bjq::print_canonical(f2)},
                {"g2", bjq::print_canonical(g2)},
                {"rule", bjq::rule_name(rule)}}},
              {"result", bjq::print_canonical(residual)},
              {"pass", pass},
              {"metrics", {{"residual_terms", residual.terms().size()}}}});
  opts.exit_code = pass ? 0 : 1;
}

void cmd_check_covariance(Options& opts, const char* check_name, const char* input_key,
                          const std::string& expr, const std::string& rule_name) {
  bjq::OrderingRule rule = parse_rule(rule_name);
  bjq::ClassicalPoly f = parse_expr(expr);
  auto pairs = bjq::heisenberg_covariance_residual(f, rule);
  int nonzero = 0;
  for (const auto& [first, second] : pairs)
    if (!first.is_zero() || !second.is_zero()) ++nonzero;
  bool pass = nonzero == 0;
  emit(opts, {{"check", check_name},
              {"inputs", {{input_key, bjq::print_canonical(f)}, {"rule", bjq::rule_name(rule)}}},
              {"result", residual_pair_text(pairs)},
              {"pass", pass},
              {"metrics", {{"nonzero_components", nonzero}}}});
  opts.exit_code = pass ? 0 : 1;
}

std::vector<bjq::HBarPolynomial> parse_scalar_list(const std::string& text) {
  std::vector<bjq::HBarPolynomial> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string piece =
        comma == std::string::npos ? text.substr(start) : text.substr(start, comma - start);
    if (piece.empty()) piece = "0";
    bjq::ClassicalPoly value = parse_expr(piece);
    if (!value.is_zero() && value.total_degree() > 0)
      throw UsageError("expected a constant, got '" + piece + "'");
    bjq::HBarPolynomial c;
    for (const auto& [e, coeff] : value.terms()) c = coeff;
    out.push_back(c);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

void cmd_check_dirac(Options& opts, const std::string& cs, const std::string& ks,
                     const std::string& ls, const std::string& fs, const std::string& gs,
                     const std::string& rule_name) {
  bjq::OrderingRule rule = parse_rule(rule_name);
  std::vector<bjq::HBarPolynomial> c = parse_scalar_list(cs);
  if (c.size() != 1) throw UsageError("--c takes a single constant");
  std::vector<bjq::HBarPolynomial> k = parse_scalar_list(ks);
  std::vector<bjq::HBarPolynomial> l = parse_scalar_list(ls);
  bjq::ClassicalPoly f = parse_expr(fs), g = parse_expr(gs);
  int dof = std::max({f.dof(), g.dof(), static_cast<int>(k.size()), static_cast<int>(l.size())});
  f = f.promoted(dof);
  g = g.promoted(dof);
  k.resize(dof);
  l.resize(dof);
  bjq::OperatorPoly residual = bjq::dirac_rule_residual(c[0], k, l, f, g, rule);
  bool pass = residual.is_zero();
  emit(opts, {{"check", "dirac"},
              {"inputs",
               {{"c", c[0].str()},
                {"f", bjq::print_canonical(f)},
                {"g", bjq::print_canonical(g)},
                {"rule", bjq::rule_name(rule)}}},
              {"result", bjq::print_canonical(residual)},
              {"pass", pass},
              {"metrics", {{"residual_terms", residual.terms().size()}}}});
  opts.exit_code = pass ? 0 : 1;
}

void cmd_grid_quantize(Options& opts, const std::string& rule_name, int n, double l,
                       double hbar, const std::string& func, const std::string& out) {
  bjq::OrderingRule rule = parse_rule(rule_name);
  bjq::PhaseSpaceGridFunction f = looks_like_file(func)
                                      ? bjq::load_psfunction(func)
                                      : bjq::builtin_function(spec_from_flags(n, l, hbar), func);
  bjq::GridOperator a = bjq::quantize_grid(f, rule);
  bjq::save_operator(out, a);
  emit(opts, {{"check", "grid-quantize"},
              {"inputs", {{"rule", bjq::rule_name(rule)}, {"func", func}, {"N", f.spec.N}}},
              {"result", out},
              {"metrics",
               {{"max_abs", a.mat.cwiseAbs().maxCoeff()},
                {"hermiticity_deviation", bjq::hermiticity_deviation(a)}}}});
}

void cmd_grid_wigner(Options& opts, const std::string& op, int n, double l, double hbar,
                     const std::string& out) {
  bjq::GridOperator a = looks_like_file(op)
                            ? bjq::load_operator(op)
                            : bjq::builtin_operator(spec_from_flags(n, l, hbar), op);
  bjq::PhaseSpaceGridFunction w = bjq::wigner_inverse(a);
  bjq::save_psfunction(out, w);
  emit(opts, {{"check", "grid-wigner"},
              {"inputs", {{"op", op}, {"N", a.spec.N}}},
              {"result", out},
              {"metrics",
               {{"min_real", w.samples.real().minCoeff()},
                {"max_real", w.samples.real().maxCoeff()},
                {"max_abs_imag", w.samples.imag().cwiseAbs().maxCoeff()}}}});
}

void cmd_grid_nullspace(Options& opts, int n, double l, double hbar) {
  bjq::GridSpec spec = spec_from_flags(n, l, hbar);
  auto census = bjq::nullspace_census(spec);
  json pairs = json::array();
  for (const auto& [m, s] : census) pairs.push_back({m, s});
  emit(opts, {{"check", "grid-nullspace"},
              {"inputs", {{"N", spec.N}}},
              {"result", pairs},
              {"metrics", {{"count", census.size()}}}});
}

void cmd_grid_matrix_check(Options& opts, int n, double l, double hbar, int m, int s) {
  bjq::GridSpec spec = spec_from_flags(n, l, hbar);
  double deviation = bjq::matrix_element_check(spec, m, s);
  emit(opts, {{"check", "grid-matrix-check"},
              {"inputs", {{"N", spec.N}, {"m", m}, {"s", s}}},
              {"result", ""},
              {"metrics", {{"deviation", deviation}}}});
}

void cmd_dyn_run(Options& opts, const std::string& config_path) {
  json config = read_config(config_path);
  bjq::GridSpec spec = config_spec(config);
  bjq::EvolutionJob job;
  job.spec = spec;
  job.h_classical = config_function(config, "hamiltonian", spec);
  job.rule = config.contains("rule") ? parse_rule(config.at("rule").get<std::string>())
                                     : bjq::OrderingRule::BornJordan;
  job.initial = config_state(config, "initial", spec);
  job.t_final = config_number(config, "t_final");
  job.dt = config_number(config, "dt");
  if (!(job.dt > 0) || job.t_final < job.dt)
    throw bjq::FileFormatError("config: need dt > 0 and t_final >= dt");
  std::vector<std::string> names;
  if (config.contains("observables")) {
    for (const json& entry : config.at("observables")) {
      if (entry.is_string()) {
        std::string name = entry.get<std::string>();
        names.push_back(name);
        if (name == "hamiltonian")
          job.observables.push_back(bjq::quantize_grid(job.h_classical, job.rule));
        else
          try {
            job.observables.push_back(bjq::builtin_operator(spec, name));
          } catch (const bjq::UnknownBuiltin& e) {
            throw bjq::FileFormatError(std::string("config: ") + e.what());
          }
      } else if (entry.is_object() && entry.contains("file")) {
        std::string path = entry.at("file").get<std::string>();
        names.push_back(path);
        bjq::GridOperator a = bjq::load_operator(path);
        if (a.spec != spec)
          throw bjq::FileFormatError("config: observable grid differs from N/L/hbar");
        job.observables.push_back(std::move(a));
      } else {
        throw bjq::FileFormatError("config: observables entries must be names or {\"file\": path}");
      }
    }
  }
  if (!config.contains("out") || !config.at("out").is_string())
    throw bjq::FileFormatError("config: missing output path field 'out'");
  std::string out_path = config.at("out").get<std::string>();

  auto series = bjq::propagate(job);
  std::ofstream out(out_path);
  if (!out) throw bjq::FileFormatError("cannot open '" + out_path + "' for writing");
  double norm0 = series.front().norm, norm_drift = 0;
  for (const bjq::SamplePoint& sample : series) {
    norm_drift = std::max(norm_drift, std::abs(sample.norm - norm0));
    json expectations = json::array();
    for (const auto& value : sample.expectations)
      expectations.push_back({value.real(), value.imag()});
    json line = {{"t", sample.t}, {"norm", sample.norm}, {"expectations", expectations}};
    out << line.dump() << "\n";
  }
  if (!out) throw bjq::FileFormatError("write to '" + out_path + "' failed");
  emit(opts, {{"check", "dyn-run"},
              {"inputs", {{"config", config_path}, {"observables", names}}},
              {"result", out_path},
              {"metrics",
               {{"samples", series.size()}, {"norm_drift", norm_drift}}}});
}

void cmd_dyn_divergence(Options& opts, const std::string& config_path) {
  json config = read_config(config_path);
  bjq::GridSpec spec = config_spec(config);
  bjq::PhaseSpaceGridFunction h = config_function(config, "hamiltonian", spec);
  bjq::GridState initial = config_state(config, "initial", spec);
  double t_final = config_number(config, "t_final");
  double dt = config.contains("dt") ? config_number(config, "dt") : 0.1;
  if (!(dt > 0) || t_final < dt)
    throw bjq::FileFormatError("config: need dt > 0 and t_final >= dt");
  bjq::RuleDivergenceReport report =
      bjq::rule_divergence_report(spec, h, initial, t_final, dt);
  json out = {{"check", "dyn-divergence"},
              {"inputs", {{"config", config_path}}},
              {"metrics",
               {{"hamiltonian_distance", report.hamiltonian_distance},
                {"max_trajectory_distance", report.max_trajectory_distance}}}};
  if (config.contains("out") && config.at("out").is_string()) {
    std::string out_path = config.at("out").get<std::string>();
    std::ofstream file(out_path);
    if (!file) throw bjq::FileFormatError("cannot open '" + out_path + "' for writing");
    for (const auto& [t, distance] : report.trajectory) {
      json line = {{"t", t}, {"distance", distance}};
      file << line.dump() << "\n";
    }
    if (!file) throw bjq::FileFormatError("write to '" + out_path + "' failed");
    out["result"] = out_path;
  }
  emit(opts, out);
}

void cmd_selftest(Options& opts) {
  auto results = bjq::acceptance::run_all(bjq::testgen::default_seed());
  json criteria = json::array();
  int passed = 0;
  for (const auto& r : results) {
    std::fprintf(stderr, "criterion %2d %s %s (%s)\n", r.id, r.pass ? "PASS" : "FAIL",
                 r.name.c_str(), r.detail.c_str());
    criteria.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    if (r.pass) ++passed;
  }
  bool pass = bjq::acceptance::all_pass(results);
  emit(opts, {{"check", "selftest"},
              {"inputs", json::object()},
              {"result", std::to_string(passed) + "/" + std::to_string(results.size())},
              {"pass", pass},
              {"metrics",
               {{"criteria_passed", passed}, {"criteria_total", results.size()}}},
              {"criteria", criteria}});
  opts.exit_code = pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  Options opts;
  CLI::App app{"Born-Jordan / Weyl quantization toolkit"};
  app.require_subcommand(1);
  app.add_flag("--pretty", opts.pretty, "indent JSON reports");

  // quantize
  std::string q_rule, q_expr;
  CLI::App* quantize = app.add_subcommand("quantize", "quantize a polynomial");
  quantize->add_option("--rule", q_rule, "bj or weyl")->required();
  quantize->add_option("--expr", q_expr, "classical polynomial")->required();
  quantize->callback([&] { cmd_quantize(opts, q_rule, q_expr); });

  // bracket
  bool b_quantum = false, b_poisson = false;
  std::string b_rule, b_expr1, b_expr2;
  CLI::App* bracket = app.add_subcommand("bracket", "bracket of two polynomials");
  bracket->add_flag("--quantum", b_quantum, "quantum bracket (-i/hbar commutator)");
  bracket->add_flag("--poisson", b_poisson, "Poisson bracket");
  bracket->add_option("--rule", b_rule, "quantize inputs first (bj or weyl)");
  bracket->add_option("expr1", b_expr1)->required();
  bracket->add_option("expr2", b_expr2)->required();
  bracket->callback([&] { cmd_bracket(opts, b_quantum, b_poisson, b_rule, b_expr1, b_expr2); });

  // check
  CLI::App* check = app.add_subcommand("check", "run a named identity check");
  check->require_subcommand(1);
  CLI::App* groenewold = check->add_subcommand("groenewold", "obstruction scalar");
  groenewold->callback([&] { cmd_check_groenewold(opts); });

  std::string s_f1 = "0", s_g1 = "0", s_f2 = "0", s_g2 = "0", s_rule;
  CLI::App* strengthened = check->add_subcommand("strengthened", "split-variable rule residual");
  strengthened->add_option("--f1", s_f1, "q-only polynomial");
  strengthened->add_option("--g1", s_g1, "p-only polynomial");
  strengthened->add_option("--f2", s_f2, "q-only polynomial");
  strengthened->add_option("--g2", s_g2, "p-only polynomial");
  strengthened->add_option("--rule", s_rule)->required();
  strengthened->callback(
      [&] { cmd_check_strengthened(opts, s_f1, s_g1, s_f2, s_g2, s_rule); });

  std::string cov_expr, cov_rule;
  CLI::App* covariance = check->add_subcommand("covariance", "coordinate bracket residuals");
  covariance->add_option("--expr", cov_expr)->required();
  covariance->add_option("--rule", cov_rule)->required();
  covariance->callback(
      [&] { cmd_check_covariance(opts, "covariance", "expr", cov_expr, cov_rule); });

  std::string ehr_h, ehr_rule;
  CLI::App* ehrenfest = check->add_subcommand("ehrenfest", "equation-of-motion residuals");
  ehrenfest->add_option("--hamiltonian", ehr_h)->required();
  ehrenfest->add_option("--rule", ehr_rule)->required();
  ehrenfest->callback(
      [&] { cmd_check_covariance(opts, "ehrenfest", "hamiltonian", ehr_h, ehr_rule); });

  std::string d_c = "0", d_k = "0", d_l = "0", d_f = "0", d_g = "0", d_rule;
  CLI::App* dirac = check->add_subcommand("dirac", "linear-variable bracket residual");
  dirac->add_option("--c", d_c, "constant");
  dirac->add_option("--k", d_k, "comma-separated q coefficients");
  dirac->add_option("--l", d_l, "comma-separated p coefficients");
  dirac->add_option("--f", d_f, "q-only polynomial");
  dirac->add_option("--g", d_g, "p-only polynomial");
  dirac->add_option("--rule", d_rule)->required();
  dirac->callback([&] { cmd_check_dirac(opts, d_c, d_k, d_l, d_f, d_g, d_rule); });

  // grid
  CLI::App* grid = app.add_subcommand("grid", "torus-backend transforms");
  grid->require_subcommand(1);

  std::string gq_rule, gq_func, gq_out;
  int gq_n = 64;
  double gq_l = 0, gq_hbar = 1.0;
  CLI::App* grid_quantize = grid->add_subcommand("quantize", "quantize sampled function");
  grid_quantize->add_option("--rule", gq_rule)->required();
  grid_quantize->add_option("--n", gq_n, "grid size");
  grid_quantize->add_option("--l", gq_l, "position period (default sqrt(2 pi hbar N))");
  grid_quantize->add_option("--hbar", gq_hbar);
  grid_quantize->add_option("--func", gq_func, "builtin name or psfunction file")->required();
  grid_quantize->add_option("--out", gq_out, "operator file to write")->required();
  grid_quantize->callback(
      [&] { cmd_grid_quantize(opts, gq_rule, gq_n, gq_l, gq_hbar, gq_func, gq_out); });

  std::string gw_op, gw_out;
  int gw_n = 64;
  double gw_l = 0, gw_hbar = 1.0;
  CLI::App* grid_wigner = grid->add_subcommand("wigner", "phase-space function of an operator");
  grid_wigner->add_option("--op", gw_op, "builtin name or operator file")->required();
  grid_wigner->add_option("--n", gw_n, "grid size");
  grid_wigner->add_option("--l", gw_l, "position period");
  grid_wigner->add_option("--hbar", gw_hbar);
  grid_wigner->add_option("--out", gw_out, "psfunction file to write")->required();
  grid_wigner->callback([&] { cmd_grid_wigner(opts, gw_op, gw_n, gw_l, gw_hbar, gw_out); });

  int gn_n = 64;
  double gn_l = 0, gn_hbar = 1.0;
  CLI::App* grid_nullspace = grid->add_subcommand("nullspace", "annihilated Fourier components");
  grid_nullspace->add_option("--n", gn_n, "grid size");
  grid_nullspace->add_option("--l", gn_l, "position period");
  grid_nullspace->add_option("--hbar", gn_hbar);
  grid_nullspace->callback([&] { cmd_grid_nullspace(opts, gn_n, gn_l, gn_hbar); });

  int gm_n = 64, gm_m = 0, gm_s = 0;
  double gm_l = 0, gm_hbar = 1.0;
  CLI::App* grid_matrix = grid->add_subcommand("matrix-check", "midpoint matrix-element deviation");
  grid_matrix->add_option("--n", gm_n, "grid size");
  grid_matrix->add_option("--l", gm_l, "position period");
  grid_matrix->add_option("--hbar", gm_hbar);
  grid_matrix->add_option("--m", gm_m)->required();
  grid_matrix->add_option("--s", gm_s)->required();
  grid_matrix->callback([&] { cmd_grid_matrix_check(opts, gm_n, gm_l, gm_hbar, gm_m, gm_s); });

  // dyn
  CLI::App* dyn = app.add_subcommand("dyn", "time evolution");
  dyn->require_subcommand(1);
  std::string dr_config;
  CLI::App* dyn_run = dyn->add_subcommand("run", "evolve and record expectations");
  dyn_run->add_option("--config", dr_config, "job description file")->required();
  dyn_run->callback([&] { cmd_dyn_run(opts, dr_config); });

  std::string dd_config;
  CLI::App* dyn_div = dyn->add_subcommand("divergence", "compare both rules on one Hamiltonian");
  dyn_div->add_option("--config", dd_config, "job description file")->required();
  dyn_div->callback([&] { cmd_dyn_divergence(opts, dd_config); });

  // selftest
  CLI::App* selftest = app.add_subcommand("selftest", "run the full acceptance suite");
  selftest->callback([&] { cmd_selftest(opts); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const bjq::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const bjq::FileFormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const bjq::UnknownBuiltin& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const bjq::GridError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return opts.exit_code;
}
