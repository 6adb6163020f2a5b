#pragma once

#include <utility>
#include <vector>

#include "bjq/grid.hpp"

namespace bjq {

/// Raised when the operator handed to the propagator is not Hermitian within
/// 1e-10; signals a complex-valued classical Hamiltonian input.
struct NonHermitianHamiltonian : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::complex<double> expectation(const GridState& psi, const GridOperator& a);

/// Exact propagator e^{-i H t / hbar} from a dense Hermitian
/// eigendecomposition; no time-stepping error.
class Propagator {
 public:
  explicit Propagator(const GridOperator& h);

  const GridSpec& spec() const { return h_.spec; }
  /// The (symmetrized) Hamiltonian matrix actually evolved with.
  const GridOperator& hamiltonian() const { return h_; }

  GridState evolve(const GridState& psi0, double t) const;

 private:
  GridOperator h_;
  Eigen::VectorXd evals_;
  Eigen::MatrixXcd evecs_;
};

struct EvolutionJob {
  GridSpec spec;
  PhaseSpaceGridFunction h_classical;
  OrderingRule rule = OrderingRule::BornJordan;
  GridState initial;
  double t_final = 0;
  double dt = 0;
  std::vector<GridOperator> observables;
};

struct SamplePoint {
  double t;
  double norm;
  std::vector<std::complex<double>> expectations;
  GridState state;
};

/// Sample the evolution at t = 0, dt, 2*dt, ..., up to t_final. Each sample
/// is evolved directly from the initial state by the exact propagator.
std::vector<SamplePoint> propagate(const EvolutionJob& job);

/// Absolute deviation between the central finite difference
/// (<A>(t+dt_fd) - <A>(t-dt_fd)) / (2 dt_fd) and <(i/hbar)[H, A]> at time t.
/// Decays at second order in dt_fd.
double heisenberg_residual(const Propagator& prop, const GridState& psi0,
                           const GridOperator& a, double t, double dt_fd);

struct RuleDivergenceReport {
  double hamiltonian_distance = 0;       // max-abs entry of H_bj - H_weyl
  double max_trajectory_distance = 0;    // max over samples of ||psi_bj - psi_weyl||
  std::vector<std::pair<double, double>> trajectory;  // (t, distance)
};

/// Quantize the same classical Hamiltonian under both rules and evolve the
/// same initial state under each.
RuleDivergenceReport rule_divergence_report(const GridSpec& spec,
                                            const PhaseSpaceGridFunction& h,
                                            const GridState& initial, double t_final,
                                            double dt);

}  // namespace bjq
