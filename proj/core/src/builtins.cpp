#include "bjq/builtins.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

namespace bjq {

namespace {

constexpr double kPi = std::numbers::pi;

bool parse_mixed(const std::string& name, int& m, int& s) {
  int consumed = 0;
  if (std::sscanf(name.c_str(), "mixed:%d,%d%n", &m, &s, &consumed) != 2) return false;
  return consumed == static_cast<int>(name.size());
}

}  // namespace

PhaseSpaceGridFunction builtin_function(const GridSpec& spec, const std::string& name) {
  const int n = spec.N;
  Eigen::MatrixXcd samples(n, n);
  int m = 0, s = 0;
  if (name == "one") {
    samples.setOnes();
  } else if (name == "harper") {
    for (int j = 0; j < n; ++j)
      for (int r = 0; r < n; ++r)
        samples(j, r) = -std::cos(2.0 * kPi * j / n) - std::cos(2.0 * kPi * r / n);
  } else if (name == "cosq") {
    for (int j = 0; j < n; ++j)
      for (int r = 0; r < n; ++r) samples(j, r) = std::cos(2.0 * kPi * j / n);
  } else if (name == "cosp") {
    for (int j = 0; j < n; ++j)
      for (int r = 0; r < n; ++r) samples(j, r) = std::cos(2.0 * kPi * r / n);
  } else if (name == "qwell") {
    for (int j = 0; j < n; ++j) {
      double x = spec.q(j) - spec.L / 2.0;
      for (int r = 0; r < n; ++r) samples(j, r) = x * x / 2.0;
    }
  } else if (parse_mixed(name, m, s)) {
    for (int j = 0; j < n; ++j)
      for (int r = 0; r < n; ++r) {
        double base = -std::cos(2.0 * kPi * j / n) - std::cos(2.0 * kPi * r / n);
        double arg = 2.0 * kPi *
                     (static_cast<double>(m) * j + static_cast<double>(s) * r) / n;
        samples(j, r) = base + std::cos(arg);
      }
  } else {
    throw UnknownBuiltin("unknown builtin function '" + name + "'");
  }
  return {spec, std::move(samples)};
}

GridState builtin_state(const GridSpec& spec, const std::string& name) {
  const int n = spec.N;
  Eigen::VectorXcd amp(n);
  if (name == "gaussian" || name == "gaussian-excited") {
    for (int j = 0; j < n; ++j) {
      double x = spec.q(j) - spec.L / 2.0;
      double value = std::exp(-x * x / (2.0 * spec.hbar));
      if (name == "gaussian-excited") value *= x;
      amp(j) = value;
    }
  } else if (name == "uniform") {
    amp.setOnes();
  } else {
    throw UnknownBuiltin("unknown builtin state '" + name + "'");
  }
  amp /= amp.norm();
  return {spec, std::move(amp)};
}

GridOperator builtin_operator(const GridSpec& spec, const std::string& name) {
  if (name == "identity")
    return {spec, Eigen::MatrixXcd::Identity(spec.N, spec.N)};
  if (name == "cosq") {
    GridOperator a = displacement(spec, 1, 0);
    GridOperator b = displacement(spec, -1, 0);
    return {spec, (a.mat + b.mat) / 2.0};
  }
  if (name == "cosp") {
    GridOperator a = displacement(spec, 0, 1);
    GridOperator b = displacement(spec, 0, -1);
    return {spec, (a.mat + b.mat) / 2.0};
  }
  if (name == "gaussian-excited") return projector(builtin_state(spec, name));
  throw UnknownBuiltin("unknown builtin operator '" + name + "'");
}

GridOperator projector(const GridState& psi) {
  return {psi.spec, psi.amp * psi.amp.adjoint()};
}

}  // namespace bjq
