#include "bjq/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>

#include "bjq/builtins.hpp"
#include "bjq/crosscheck.hpp"
#include "bjq/dynamics.hpp"
#include "bjq/parse.hpp"
#include "bjq/testgen.hpp"

namespace bjq::acceptance {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

OperatorPoly scalar_op(int power, long num, unsigned long den) {
  mpq_class value(num, den);
  value.canonicalize();
  return OperatorPoly::constant(1, HBarPolynomial::term(power, GaussianRational(value)));
}

CriterionResult obstruction_scalar() {
  OperatorPoly d = groenewold_discrepancy();
  bool pass = !d.is_zero() && d.is_scalar() &&
              (d == scalar_op(2, 1, 3) || d == scalar_op(2, -1, 3));
  return {1, "obstruction-scalar", pass, "discrepancy = " + print_canonical(d)};
}

CriterionResult split_rule_zero_residual(std::uint64_t seed) {
  std::mt19937_64 rng(seed + 2);
  auto start = std::chrono::steady_clock::now();
  int failures = 0, total = 0;
  auto batch = [&](int dof, int count) {
    for (int t = 0; t < count; ++t) {
      ClassicalPoly f1 = testgen::random_poly(rng, dof, 6, 4, testgen::VarSet::QOnly);
      ClassicalPoly g1 = testgen::random_poly(rng, dof, 6, 4, testgen::VarSet::POnly);
      ClassicalPoly f2 = testgen::random_poly(rng, dof, 6, 4, testgen::VarSet::QOnly);
      ClassicalPoly g2 = testgen::random_poly(rng, dof, 6, 4, testgen::VarSet::POnly);
      OperatorPoly residual =
          strengthened_rule_residual(f1, g1, f2, g2, OrderingRule::BornJordan);
      if (!residual.is_zero()) ++failures;
      ++total;
    }
  };
  batch(1, 100);
  batch(2, 25);
  double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool pass = failures == 0 && elapsed < 10.0;
  return {2, "split-rule-zero-residual",
          pass,
          std::to_string(total) + " quadruples, " + std::to_string(failures) +
              " nonzero residuals, " + fmt(elapsed) + " s"};
}

CriterionResult split_rule_weyl_counterexample() {
  ClassicalPoly q3 = parse_classical("q^3");
  ClassicalPoly p3 = parse_classical("p^3");
  ClassicalPoly zero(1);
  OperatorPoly residual =
      strengthened_rule_residual(q3, zero, zero, p3, OrderingRule::Weyl);
  bool pass = residual == scalar_op(2, -3, 2) || residual == scalar_op(2, 3, 2);
  return {3, "split-rule-weyl-counterexample", pass,
          "residual = " + print_canonical(residual)};
}

CriterionResult ordering_gap() {
  ClassicalPoly f = parse_classical("q^2*p^2");
  OperatorPoly gap =
      quantize(f, OrderingRule::Weyl) - quantize(f, OrderingRule::BornJordan);
  bool pass = gap == scalar_op(2, 1, 6);
  return {4, "ordering-gap", pass, "weyl - born-jordan = " + print_canonical(gap)};
}

CriterionResult covariance_residuals(std::uint64_t seed) {
  std::mt19937_64 rng(seed + 5);
  int failures = 0;
  for (int t = 0; t < 100; ++t) {
    ClassicalPoly f = testgen::random_poly(rng, 1, 6, 5);
    for (OrderingRule rule : {OrderingRule::BornJordan, OrderingRule::Weyl}) {
      auto pairs = heisenberg_covariance_residual(f, rule);
      for (const auto& [first, second] : pairs)
        if (!first.is_zero() || !second.is_zero()) ++failures;
    }
  }
  return {5, "covariance-residuals", failures == 0,
          "100 random polynomials x 2 rules, " + std::to_string(failures) +
              " nonzero residual pairs"};
}

CriterionResult splitting_formula_equivalence() {
  int failures = 0;
  for (int r = 0; r <= 8; ++r)
    for (int s = 0; s <= 8; ++s) {
      ClassicalPoly mono = ClassicalPoly::monomial(1, {r, s}, HBarPolynomial(1));
      if (quantize(mono, OrderingRule::BornJordan) != crosscheck::bj_p_split(r, s))
        ++failures;
    }
  for (int r = 0; r <= 6; ++r)
    for (int s = 0; r + s <= 6; ++s) {
      ClassicalPoly mono = ClassicalPoly::monomial(1, {r, s}, HBarPolynomial(1));
      if (quantize(mono, OrderingRule::Weyl) != crosscheck::all_orderings_average(r, s))
        ++failures;
    }
  return {6, "splitting-formula-equivalence", failures == 0,
          std::to_string(failures) + " mismatches"};
}

CriterionResult fourier_null_census() {
  GridSpec spec = GridSpec::with_default_length(64);
  auto census = nullspace_census(spec);
  auto scanned = crosscheck::nullspace_brute_scan(spec, 1e-12);
  bool pass = census == scanned && !census.empty();
  double worst_null = 0, worst_norm = 0;
  for (const auto& [m, s] : census) {
    double maxabs =
        fourier_quantize(spec, m, s, OrderingRule::BornJordan).mat.cwiseAbs().maxCoeff();
    worst_null = std::max(worst_null, maxabs);
  }
  if (worst_null >= 1e-12) pass = false;
  for (int m = -32; m < 32; ++m)
    for (int s = -32; s < 32; ++s) {
      long long prod = static_cast<long long>(m) * s;
      if (prod != 0 && prod % 64 == 0) continue;
      double maxabs = fourier_quantize(spec, m, s, OrderingRule::BornJordan)
                          .mat.cwiseAbs()
                          .maxCoeff();
      worst_norm = std::max(worst_norm, std::abs(maxabs - std::abs(bj_weight(spec, m, s))));
    }
  if (worst_norm >= 1e-12) pass = false;
  return {7, "fourier-null-census", pass,
          std::to_string(census.size()) + " census pairs, max null entry " +
              fmt(worst_null) + ", max norm deviation " + fmt(worst_norm)};
}

CriterionResult midpoint_matrix_elements() {
  GridSpec spec = GridSpec::with_default_length(32);
  double worst = 0;
  for (int m = -16; m < 16; ++m)
    for (int s = -16; s < 16; ++s)
      worst = std::max(worst, matrix_element_check(spec, m, s));
  return {8, "midpoint-matrix-elements", worst < 1e-12, "max deviation " + fmt(worst)};
}

CriterionResult weyl_round_trip(std::uint64_t seed) {
  GridSpec spec = GridSpec::with_default_length(64);
  std::mt19937_64 rng(seed + 9);
  double worst = 0;
  for (int t = 0; t < 10; ++t) {
    PhaseSpaceGridFunction f = testgen::random_real_samples(rng, spec);
    PhaseSpaceGridFunction back =
        wigner_inverse(quantize_grid(f, OrderingRule::Weyl));
    worst = std::max(worst, (back.samples - f.samples).cwiseAbs().maxCoeff());
  }
  bool pass = worst < 1e-10;
  PhaseSpaceGridFunction null_mode = builtin_function(spec, "mixed:8,8");
  null_mode.samples -= builtin_function(spec, "harper").samples;
  double input_size = null_mode.samples.cwiseAbs().maxCoeff();
  double bj_size =
      quantize_grid(null_mode, OrderingRule::BornJordan).mat.cwiseAbs().maxCoeff();
  if (!(input_size > 0.5) || bj_size >= 1e-12) pass = false;
  return {9, "weyl-round-trip-bj-null-mode", pass,
          "max round-trip error " + fmt(worst) + ", null-mode image " + fmt(bj_size)};
}

CriterionResult phase_space_negativity() {
  GridSpec spec = GridSpec::with_default_length(64, 1.0);
  GridOperator proj = builtin_operator(spec, "gaussian-excited");
  PhaseSpaceGridFunction w = wigner_inverse(proj);
  double min_real = w.samples.real().minCoeff();
  return {10, "phase-space-negativity", min_real < -1e-3,
          "min sample " + fmt(min_real)};
}

CriterionResult position_function_diagonal() {
  GridSpec spec = GridSpec::with_default_length(64);
  double worst = 0;
  for (const char* name : {"cosq", "qwell"}) {
    PhaseSpaceGridFunction f = builtin_function(spec, name);
    Eigen::MatrixXcd diag = f.samples.col(0).asDiagonal();
    for (OrderingRule rule : {OrderingRule::BornJordan, OrderingRule::Weyl}) {
      GridOperator a = quantize_grid(f, rule);
      worst = std::max(worst, (a.mat - diag).cwiseAbs().maxCoeff());
    }
  }
  return {11, "position-function-diagonal", worst < 1e-12, "max deviation " + fmt(worst)};
}

CriterionResult dynamics_conservation_and_order() {
  GridSpec spec = GridSpec::with_default_length(64);
  EvolutionJob job;
  job.spec = spec;
  job.h_classical = builtin_function(spec, "harper");
  job.rule = OrderingRule::BornJordan;
  job.initial = builtin_state(spec, "gaussian");
  job.t_final = 10.0;
  job.dt = 0.1;
  job.observables.push_back(quantize_grid(job.h_classical, job.rule));
  auto series = propagate(job);
  double norm_drift = 0, energy_drift = 0;
  double norm0 = series.front().norm;
  double energy0 = series.front().expectations[0].real();
  for (const SamplePoint& sample : series) {
    norm_drift = std::max(norm_drift, std::abs(sample.norm - norm0));
    energy_drift =
        std::max(energy_drift, std::abs(sample.expectations[0].real() - energy0));
  }
  Propagator prop(quantize_grid(job.h_classical, job.rule));
  GridOperator a = builtin_operator(spec, "cosq");
  // Probe the finite-difference order on a displaced copy of the packet: the
  // centered gaussian is nearly stationary under this Hamiltonian, which
  // leaves the O(dt_fd^2) term of the central difference below roundoff and
  // makes the ratio meaningless.
  GridState probe{spec, displacement(spec, 8, 8).mat * job.initial.amp};
  double dev1 = heisenberg_residual(prop, probe, a, 3.0, 1e-3);
  double dev2 = heisenberg_residual(prop, probe, a, 3.0, 5e-4);
  double ratio = dev2 > 0 ? dev1 / dev2 : 0;
  bool pass = norm_drift <= 1e-10 && energy_drift <= 1e-10 && dev1 < 1e-4 &&
              dev2 < 1e-4 && ratio >= 3.5 && ratio <= 4.5;
  return {12, "dynamics-conservation-and-order", pass,
          "norm drift " + fmt(norm_drift) + ", energy drift " + fmt(energy_drift) +
              ", fd deviations " + fmt(dev1) + " / " + fmt(dev2) + ", ratio " +
              fmt(ratio)};
}

CriterionResult rule_divergence_mixed_term() {
  GridSpec spec = GridSpec::with_default_length(64);
  PhaseSpaceGridFunction mixed = builtin_function(spec, "mixed:8,8");
  PhaseSpaceGridFunction base = builtin_function(spec, "harper");
  auto term_norm = [&](OrderingRule rule) {
    return (quantize_grid(mixed, rule).mat - quantize_grid(base, rule).mat)
        .cwiseAbs()
        .maxCoeff();
  };
  double bj_norm = term_norm(OrderingRule::BornJordan);
  double weyl_norm = term_norm(OrderingRule::Weyl);
  RuleDivergenceReport report = rule_divergence_report(
      spec, mixed, builtin_state(spec, "gaussian"), 10.0, 0.1);
  bool pass = bj_norm < 1e-12 && std::abs(weyl_norm - 0.5) <= 1e-12 &&
              report.max_trajectory_distance > 1e-3;
  return {13, "rule-divergence-mixed-term", pass,
          "dropped-term norm " + fmt(bj_norm) + ", retained-term norm " +
              fmt(weyl_norm) + ", max trajectory distance " +
              fmt(report.max_trajectory_distance)};
}

CriterionResult parser_round_trip(std::uint64_t seed) {
  std::mt19937_64 rng(seed + 14);
  int failures = 0;
  for (int t = 0; t < 200; ++t) {
    int dof = 1 + static_cast<int>(rng() % 2);
    ClassicalPoly f = testgen::random_poly(rng, dof, 6, 6);
    ClassicalPoly back = parse_classical(print_canonical(f));
    if (back.promoted(f.dof()) != f) ++failures;
  }
  static const char* corpus[] = {
      "q",
      "p",
      "0",
      "7",
      "-q",
      "q + p",
      "1/2*q*p + 1/2*p*q",
      "3*q1*p2 - hbar^2/3",
      "q^2*p^2",
      "(q+p)^2",
      "i*hbar*q",
      "-2/3*hbar^2",
      "hbar",
      "2/4*q",
      "q10*p10",
      "q*q*q",
      "q - q",
      "((q))",
      "1/3*hbar^2/3",
      "(1+2*i)*p^3 - i*q",
  };
  for (const char* text : corpus) {
    std::string once = print_canonical(parse_classical(text));
    std::string twice = print_canonical(parse_classical(once));
    if (once != twice) ++failures;
  }
  struct Expected {
    const char* input;
    const char* canonical;
  };
  static const Expected expected[] = {
      {"1/2*q*p + 1/2*p*q", "q*p"},
      {"3*q1*p2 - hbar^2/3", "3*q1*p2 - 1/3*hbar^2"},
      {"(q+p)^2", "q^2 + 2*q*p + p^2"},
      {"2/4*q", "1/2*q"},
      {"q*q*q", "q^3"},
      {"q - q", "0"},
      {"1/3*hbar^2/3", "1/9*hbar^2"},
  };
  for (const Expected& e : expected)
    if (print_canonical(parse_classical(e.input)) != e.canonical) ++failures;
  return {14, "parser-round-trip", failures == 0,
          "200 random + 20 corpus inputs, " + std::to_string(failures) + " failures"};
}

}  // namespace

std::vector<CriterionResult> run_all(std::uint64_t seed) {
  std::vector<CriterionResult> results;
  results.push_back(obstruction_scalar());
  results.push_back(split_rule_zero_residual(seed));
  results.push_back(split_rule_weyl_counterexample());
  results.push_back(ordering_gap());
  results.push_back(covariance_residuals(seed));
  results.push_back(splitting_formula_equivalence());
  results.push_back(fourier_null_census());
  results.push_back(midpoint_matrix_elements());
  results.push_back(weyl_round_trip(seed));
  results.push_back(phase_space_negativity());
  results.push_back(position_function_diagonal());
  results.push_back(dynamics_conservation_and_order());
  results.push_back(rule_divergence_mixed_term());
  results.push_back(parser_round_trip(seed));
  return results;
}

bool all_pass(const std::vector<CriterionResult>& results) {
  for (const CriterionResult& r : results)
    if (!r.pass) return false;
  return true;
}

}  // namespace bjq::acceptance
