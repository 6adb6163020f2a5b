#include "bjq/testgen.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>

namespace bjq::testgen {

std::uint64_t default_seed() {
  if (const char* env = std::getenv("BJQ_SEED")) {
    char* end = nullptr;
    unsigned long long value = std::strtoull(env, &end, 10);
    if (end && *end == '\0') return value;
  }
  return 987654321u;
}

ClassicalPoly random_poly(std::mt19937_64& rng, int dof, int max_degree, int max_terms,
                          VarSet vars, bool real_hbar_free) {
  std::uniform_int_distribution<int> term_count(1, max_terms);
  std::uniform_int_distribution<int> exp_dist(0, max_degree);
  std::uniform_int_distribution<int> num_dist(-9, 9);
  std::uniform_int_distribution<int> den_dist(1, 4);
  std::uniform_int_distribution<int> kind_dist(0, 2);   // real, imaginary, both
  std::uniform_int_distribution<int> hpow_dist(0, 2);
  for (;;) {
    ClassicalPoly f(dof);
    const int terms = term_count(rng);
    for (int t = 0; t < terms; ++t) {
      Exponents e(2 * dof, 0);
      for (;;) {
        int total = 0;
        for (int slot = 0; slot < 2 * dof; ++slot) {
          bool q_slot = slot < dof;
          if ((vars == VarSet::QOnly && !q_slot) || (vars == VarSet::POnly && q_slot)) {
            e[slot] = 0;
            continue;
          }
          e[slot] = exp_dist(rng);
          total += e[slot];
        }
        if (total <= max_degree) break;
      }
      int num = num_dist(rng);
      if (num == 0) num = 1;
      mpq_class value(num, den_dist(rng));
      value.canonicalize();
      GaussianRational coeff(value);
      int hpow = 0;
      if (!real_hbar_free) {
        int kind = kind_dist(rng);
        if (kind == 1) coeff = coeff * GaussianRational::imaginary_unit();
        if (kind == 2) coeff = coeff * (GaussianRational(1) + GaussianRational::imaginary_unit());
        hpow = hpow_dist(rng);
      }
      f.add_term(e, HBarPolynomial::term(hpow, coeff));
    }
    if (!f.is_zero()) return f;
  }
}

PhaseSpaceGridFunction random_real_samples(std::mt19937_64& rng, const GridSpec& spec) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Eigen::MatrixXcd samples(spec.N, spec.N);
  for (int j = 0; j < spec.N; ++j)
    for (int r = 0; r < spec.N; ++r) samples(j, r) = dist(rng);
  return {spec, std::move(samples)};
}

PhaseSpaceGridFunction random_band_limited(std::mt19937_64& rng, const GridSpec& spec,
                                           int components) {
  const int n = spec.N;
  std::uniform_int_distribution<int> mode(-(n / 2 - 1), n / 2 - 1);
  std::uniform_real_distribution<double> amp_dist(-1.0, 1.0);
  std::uniform_real_distribution<double> phase_dist(0.0, 2.0 * std::numbers::pi);
  Eigen::MatrixXcd samples = Eigen::MatrixXcd::Zero(n, n);
  for (int c = 0; c < components; ++c) {
    int m = mode(rng), s = mode(rng);
    double amp = amp_dist(rng), phase = phase_dist(rng);
    for (int j = 0; j < n; ++j)
      for (int r = 0; r < n; ++r) {
        double arg = 2.0 * std::numbers::pi *
                         (static_cast<double>(m) * j + static_cast<double>(s) * r) / n +
                     phase;
        samples(j, r) += amp * std::cos(arg);
      }
  }
  return {spec, std::move(samples)};
}

GridState random_state(std::mt19937_64& rng, const GridSpec& spec) {
  std::normal_distribution<double> dist(0.0, 1.0);
  Eigen::VectorXcd amp(spec.N);
  for (int j = 0; j < spec.N; ++j) amp(j) = std::complex<double>(dist(rng), dist(rng));
  amp /= amp.norm();
  return {spec, std::move(amp)};
}

}  // namespace bjq::testgen
