#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bjq/quantize.hpp"

namespace bjq {

struct GridError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// N-point periodic position grid with conjugate momentum lattice.
/// Positions q_j = j*Delta with Delta = L/N; momenta p_r = r*2*pi*hbar/L.
/// Admissible wavenumbers k_m = 2*pi*m/L and displacement parameters
/// l_s = s*Delta/hbar carry integer labels m, s in the symmetric window
/// [-N/2, N/2); the commutation phase is theta(m,s) = 2*pi*m*s/N.
struct GridSpec {
  int N = 0;
  double L = 0;
  double hbar = 0;

  static GridSpec make(int n, double length, double hb);
  /// L chosen so position and momentum periods coincide: L = sqrt(2*pi*hbar*N).
  static GridSpec with_default_length(int n, double hb = 1.0);

  double delta() const { return L / N; }
  double momentum_step() const;
  double momentum_period() const { return momentum_step() * N; }
  double q(int j) const { return j * delta(); }
  double p(int r) const { return r * momentum_step(); }
  double wavenumber(int m) const;          // k_m
  double displacement_param(int s) const;  // l_s

  /// Reduce an integer label into the symmetric window [-N/2, N/2).
  int reduce(int x) const;

  friend bool operator==(const GridSpec& a, const GridSpec& b) {
    return a.N == b.N && a.L == b.L && a.hbar == b.hbar;
  }
  friend bool operator!=(const GridSpec& a, const GridSpec& b) { return !(a == b); }
};

struct GridOperator {
  GridSpec spec;
  Eigen::MatrixXcd mat;  // N x N, row/column indexed by grid positions
};

struct GridState {
  GridSpec spec;
  Eigen::VectorXcd amp;  // length N
  double norm() const { return amp.norm(); }
};

/// Complex samples F(q_j, p_r); row index j, column index r.
struct PhaseSpaceGridFunction {
  GridSpec spec;
  Eigen::MatrixXcd samples;
};

void check_same_spec(const GridSpec& a, const GridSpec& b);

/// Diagonal phase matrix, entries e^{i k_m q_j}.
GridOperator modulation(const GridSpec& spec, int m);

/// Cyclic shift, (T(s) psi)(q_j) = psi(q_{(j+s) mod N}).
GridOperator translation(const GridSpec& spec, int s);

/// Unitary displacement E(m,s) = e^{-i theta/2} T(s) M(m), the lattice
/// analog of e^{i(k q + l p)} combined by the lowest-order
/// Campbell-Baker-Hausdorff identity. Labels are reduced into the symmetric
/// window first. E(0,0) = identity; adjoint(E(m,s)) = E(-m,-s).
GridOperator displacement(const GridSpec& spec, int m, int s);

/// sin(theta/2)/(theta/2) with theta = 2*pi*m*s/N; exactly 1 when ms = 0 and
/// exactly 0 when ms is a nonzero multiple of N (the removable-singularity
/// and zero branches are taken on the integer product, not in floating point).
double bj_weight(const GridSpec& spec, int m, int s);

/// Quantized single Fourier component e^{i(k_m q + l_s p)}:
/// Weyl gives E(m,s); BornJordan gives bj_weight(m,s) * E(m,s).
GridOperator fourier_quantize(const GridSpec& spec, int m, int s, OrderingRule rule);

/// Discrete Fourier analysis of samples: F(q_j,p_r) =
/// sum_{m,s} c_{m,s} e^{2*pi*i(mj+sr)/N} with (m,s) in the symmetric window.
/// Returned matrix is indexed (m + N/2, s + N/2).
Eigen::MatrixXcd fourier_coefficients(const PhaseSpaceGridFunction& f);

/// Inverse of fourier_coefficients.
PhaseSpaceGridFunction synthesize(const GridSpec& spec, const Eigen::MatrixXcd& coeffs);

/// Fourier-synthesis quantization: analyze F, then sum
/// c_{m,s} * fourier_quantize(m,s,rule) in row-major (m,s) order.
GridOperator quantize_grid(const PhaseSpaceGridFunction& f, OrderingRule rule);

/// Recover the phase-space function of an operator through the displacement
/// basis: c_{m,s} = Tr[E(m,s)^dag A]/N, then Fourier synthesis. Exact inverse
/// of quantize_grid(..., Weyl) up to roundoff.
PhaseSpaceGridFunction wigner_inverse(const GridOperator& a);

/// All window pairs (m,s) with ms a nonzero multiple of N: exactly the
/// components the Born-Jordan quantizer annihilates. Row-major order.
std::vector<std::pair<int, int>> nullspace_census(const GridSpec& spec);

/// Max-abs deviation between the Born-Jordan Fourier operator and the
/// independently computed midpoint form
///   bj_weight * e^{i k_m (q_j + s*Delta/2)} at column (j+s) mod N.
double matrix_element_check(const GridSpec& spec, int m, int s);

/// ||A - A^dag||_max.
double hermiticity_deviation(const GridOperator& a);

}  // namespace bjq
