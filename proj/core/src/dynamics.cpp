#include "bjq/dynamics.hpp"

#include <cmath>

namespace bjq {

std::complex<double> expectation(const GridState& psi, const GridOperator& a) {
  check_same_spec(psi.spec, a.spec);
  return (psi.amp.adjoint() * (a.mat * psi.amp))(0, 0);
}

Propagator::Propagator(const GridOperator& h) : h_{h.spec, {}} {
  if (h.mat.rows() != h.spec.N || h.mat.cols() != h.spec.N)
    throw GridError("Propagator: matrix has wrong shape");
  if (hermiticity_deviation(h) > 1e-10)
    throw NonHermitianHamiltonian("Hamiltonian deviates from Hermitian by more than 1e-10");
  h_.mat = (h.mat + h.mat.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h_.mat);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("Propagator: eigendecomposition failed");
  evals_ = solver.eigenvalues();
  evecs_ = solver.eigenvectors();
}

GridState Propagator::evolve(const GridState& psi0, double t) const {
  check_same_spec(psi0.spec, h_.spec);
  Eigen::VectorXcd c = evecs_.adjoint() * psi0.amp;
  for (int k = 0; k < c.size(); ++k)
    c(k) *= std::polar(1.0, -evals_(k) * t / h_.spec.hbar);
  return {psi0.spec, evecs_ * c};
}

std::vector<SamplePoint> propagate(const EvolutionJob& job) {
  if (!(job.dt > 0)) throw GridError("propagate: dt must be positive");
  if (job.t_final < job.dt) throw GridError("propagate: t_final must be at least dt");
  if (std::abs(job.initial.norm() - 1.0) > 1e-12)
    throw GridError("propagate: initial state must be normalized");
  for (const GridOperator& a : job.observables) check_same_spec(a.spec, job.spec);
  check_same_spec(job.h_classical.spec, job.spec);

  Propagator prop(quantize_grid(job.h_classical, job.rule));
  const int steps = static_cast<int>(std::floor(job.t_final / job.dt + 1e-9));
  std::vector<SamplePoint> out;
  out.reserve(steps + 1);
  for (int k = 0; k <= steps; ++k) {
    double t = k * job.dt;
    GridState psi = prop.evolve(job.initial, t);
    SamplePoint sample{t, psi.norm(), {}, std::move(psi)};
    sample.expectations.reserve(job.observables.size());
    for (const GridOperator& a : job.observables)
      sample.expectations.push_back(expectation(sample.state, a));
    out.push_back(std::move(sample));
  }
  return out;
}

double heisenberg_residual(const Propagator& prop, const GridState& psi0,
                           const GridOperator& a, double t, double dt_fd) {
  if (!(dt_fd > 0)) throw GridError("heisenberg_residual: dt_fd must be positive");
  check_same_spec(a.spec, prop.spec());
  GridState plus = prop.evolve(psi0, t + dt_fd);
  GridState minus = prop.evolve(psi0, t - dt_fd);
  std::complex<double> fd =
      (expectation(plus, a) - expectation(minus, a)) / (2.0 * dt_fd);
  GridState at_t = prop.evolve(psi0, t);
  const Eigen::MatrixXcd& hm = prop.hamiltonian().mat;
  std::complex<double> scale(0.0, 1.0 / prop.spec().hbar);
  GridOperator bracket{prop.spec(), scale * (hm * a.mat - a.mat * hm)};
  return std::abs(fd - expectation(at_t, bracket));
}

RuleDivergenceReport rule_divergence_report(const GridSpec& spec,
                                            const PhaseSpaceGridFunction& h,
                                            const GridState& initial, double t_final,
                                            double dt) {
  check_same_spec(h.spec, spec);
  check_same_spec(initial.spec, spec);
  if (!(dt > 0)) throw GridError("rule_divergence_report: dt must be positive");
  GridOperator hb = quantize_grid(h, OrderingRule::BornJordan);
  GridOperator hw = quantize_grid(h, OrderingRule::Weyl);
  RuleDivergenceReport report;
  report.hamiltonian_distance = (hb.mat - hw.mat).cwiseAbs().maxCoeff();
  Propagator pb(hb), pw(hw);
  const int steps = static_cast<int>(std::floor(t_final / dt + 1e-9));
  report.trajectory.reserve(steps + 1);
  for (int k = 0; k <= steps; ++k) {
    double t = k * dt;
    GridState sb = pb.evolve(initial, t);
    GridState sw = pw.evolve(initial, t);
    double dist = (sb.amp - sw.amp).norm();
    report.trajectory.emplace_back(t, dist);
    if (dist > report.max_trajectory_distance) report.max_trajectory_distance = dist;
  }
  return report;
}

}  // namespace bjq
