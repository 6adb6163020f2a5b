#include "bjq/grid.hpp"

#include <cmath>
#include <numbers>

namespace bjq {

namespace {

constexpr double kPi = std::numbers::pi;

int imod(long long x, int n) {
  return static_cast<int>(((x % n) + n) % n);
}

// w[u] = e^{2*pi*i*u/N}, u in [0, N). All Fourier phases are looked up here
// by integer index so sums are deterministic and phases of equal angle are
// bitwise equal.
std::vector<std::complex<double>> unit_roots(int n) {
  std::vector<std::complex<double>> w(n);
  for (int u = 0; u < n; ++u) {
    double ang = 2.0 * kPi * u / n;
    w[u] = {std::cos(ang), std::sin(ang)};
  }
  return w;
}

// h[v] = e^{i*pi*v/N}, v in [0, 2N): the half-angle phases e^{±i*theta/2}.
std::vector<std::complex<double>> half_roots(int n) {
  std::vector<std::complex<double>> h(2 * n);
  for (int v = 0; v < 2 * n; ++v) {
    double ang = kPi * v / n;
    h[v] = {std::cos(ang), std::sin(ang)};
  }
  return h;
}

}  // namespace

GridSpec GridSpec::make(int n, double length, double hb) {
  if (n < 4 || n % 2 != 0) throw GridError("GridSpec: N must be even and >= 4");
  if (!(length > 0)) throw GridError("GridSpec: L must be positive");
  if (!(hb > 0)) throw GridError("GridSpec: hbar must be positive");
  return {n, length, hb};
}

GridSpec GridSpec::with_default_length(int n, double hb) {
  if (!(hb > 0)) throw GridError("GridSpec: hbar must be positive");
  return make(n, std::sqrt(2.0 * kPi * hb * n), hb);
}

double GridSpec::momentum_step() const { return 2.0 * kPi * hbar / L; }

double GridSpec::wavenumber(int m) const { return 2.0 * kPi * m / L; }

double GridSpec::displacement_param(int s) const { return s * delta() / hbar; }

int GridSpec::reduce(int x) const {
  return imod(static_cast<long long>(x) + N / 2, N) - N / 2;
}

void check_same_spec(const GridSpec& a, const GridSpec& b) {
  if (a != b) throw GridError("grid spec mismatch");
}

GridOperator modulation(const GridSpec& spec, int m) {
  const int n = spec.N;
  auto w = unit_roots(n);
  Eigen::MatrixXcd mat = Eigen::MatrixXcd::Zero(n, n);
  for (int j = 0; j < n; ++j) mat(j, j) = w[imod(static_cast<long long>(m) * j, n)];
  return {spec, std::move(mat)};
}

GridOperator translation(const GridSpec& spec, int s) {
  const int n = spec.N;
  Eigen::MatrixXcd mat = Eigen::MatrixXcd::Zero(n, n);
  for (int j = 0; j < n; ++j) mat(j, imod(j + static_cast<long long>(s), n)) = 1.0;
  return {spec, std::move(mat)};
}

GridOperator displacement(const GridSpec& spec, int m, int s) {
  const int n = spec.N;
  const int mr = spec.reduce(m);
  const int sr = spec.reduce(s);
  auto w = unit_roots(n);
  auto h = half_roots(n);
  // E(m,s)[j, j'] = e^{-i*pi*m*s/N} e^{i k_m q_j'} at j' = (j+s) mod N.
  std::complex<double> phase = h[imod(-static_cast<long long>(mr) * sr, 2 * n)];
  Eigen::MatrixXcd mat = Eigen::MatrixXcd::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    int jp = imod(j + static_cast<long long>(sr), n);
    mat(j, jp) = phase * w[imod(static_cast<long long>(mr) * jp, n)];
  }
  return {spec, std::move(mat)};
}

double bj_weight(const GridSpec& spec, int m, int s) {
  const long long prod =
      static_cast<long long>(spec.reduce(m)) * static_cast<long long>(spec.reduce(s));
  if (prod == 0) return 1.0;
  if (prod % spec.N == 0) return 0.0;
  double x = kPi * static_cast<double>(prod) / spec.N;
  return std::sin(x) / x;
}

GridOperator fourier_quantize(const GridSpec& spec, int m, int s, OrderingRule rule) {
  GridOperator e = displacement(spec, m, s);
  if (rule == OrderingRule::BornJordan) e.mat *= bj_weight(spec, m, s);
  return e;
}

Eigen::MatrixXcd fourier_coefficients(const PhaseSpaceGridFunction& f) {
  const int n = f.spec.N;
  if (f.samples.rows() != n || f.samples.cols() != n)
    throw GridError("fourier_coefficients: sample matrix has wrong shape");
  auto w = unit_roots(n);
  Eigen::MatrixXcd g(n, n), c(n, n);
  for (int mi = 0; mi < n; ++mi) {
    const int m = mi - n / 2;
    for (int r = 0; r < n; ++r) {
      std::complex<double> acc = 0.0;
      for (int j = 0; j < n; ++j)
        acc += f.samples(j, r) * w[imod(-static_cast<long long>(m) * j, n)];
      g(mi, r) = acc;
    }
  }
  const double scale = 1.0 / (static_cast<double>(n) * n);
  for (int mi = 0; mi < n; ++mi)
    for (int si = 0; si < n; ++si) {
      const int s = si - n / 2;
      std::complex<double> acc = 0.0;
      for (int r = 0; r < n; ++r)
        acc += g(mi, r) * w[imod(-static_cast<long long>(s) * r, n)];
      c(mi, si) = acc * scale;
    }
  return c;
}

PhaseSpaceGridFunction synthesize(const GridSpec& spec, const Eigen::MatrixXcd& coeffs) {
  const int n = spec.N;
  if (coeffs.rows() != n || coeffs.cols() != n)
    throw GridError("synthesize: coefficient matrix has wrong shape");
  auto w = unit_roots(n);
  Eigen::MatrixXcd g(n, n), samples(n, n);
  for (int mi = 0; mi < n; ++mi)
    for (int r = 0; r < n; ++r) {
      std::complex<double> acc = 0.0;
      for (int si = 0; si < n; ++si) {
        const int s = si - n / 2;
        acc += coeffs(mi, si) * w[imod(static_cast<long long>(s) * r, n)];
      }
      g(mi, r) = acc;
    }
  for (int j = 0; j < n; ++j)
    for (int r = 0; r < n; ++r) {
      std::complex<double> acc = 0.0;
      for (int mi = 0; mi < n; ++mi) {
        const int m = mi - n / 2;
        acc += g(mi, r) * w[imod(static_cast<long long>(m) * j, n)];
      }
      samples(j, r) = acc;
    }
  return {spec, std::move(samples)};
}

GridOperator quantize_grid(const PhaseSpaceGridFunction& f, OrderingRule rule) {
  const int n = f.spec.N;
  Eigen::MatrixXcd coeffs = fourier_coefficients(f);
  auto w = unit_roots(n);
  auto h = half_roots(n);
  Eigen::MatrixXcd mat = Eigen::MatrixXcd::Zero(n, n);
  for (int mi = 0; mi < n; ++mi) {
    const int m = mi - n / 2;
    for (int si = 0; si < n; ++si) {
      const int s = si - n / 2;
      std::complex<double> scale = coeffs(mi, si);
      if (rule == OrderingRule::BornJordan) scale *= bj_weight(f.spec, m, s);
      scale *= h[imod(-static_cast<long long>(m) * s, 2 * n)];
      for (int j = 0; j < n; ++j) {
        int jp = imod(j + static_cast<long long>(s), n);
        mat(j, jp) += scale * w[imod(static_cast<long long>(m) * jp, n)];
      }
    }
  }
  return {f.spec, std::move(mat)};
}

PhaseSpaceGridFunction wigner_inverse(const GridOperator& a) {
  const int n = a.spec.N;
  if (a.mat.rows() != n || a.mat.cols() != n)
    throw GridError("wigner_inverse: matrix has wrong shape");
  auto w = unit_roots(n);
  auto h = half_roots(n);
  Eigen::MatrixXcd coeffs(n, n);
  for (int mi = 0; mi < n; ++mi) {
    const int m = mi - n / 2;
    for (int si = 0; si < n; ++si) {
      const int s = si - n / 2;
      // Tr[E(m,s)^dag A]: E is supported on one cyclic diagonal, so the
      // trace is a single sum over rows.
      std::complex<double> phase = h[imod(static_cast<long long>(m) * s, 2 * n)];
      std::complex<double> acc = 0.0;
      for (int j = 0; j < n; ++j) {
        int jp = imod(j + static_cast<long long>(s), n);
        acc += w[imod(-static_cast<long long>(m) * jp, n)] * a.mat(j, jp);
      }
      coeffs(mi, si) = phase * acc / static_cast<double>(n);
    }
  }
  return synthesize(a.spec, coeffs);
}

std::vector<std::pair<int, int>> nullspace_census(const GridSpec& spec) {
  std::vector<std::pair<int, int>> out;
  for (int m = -spec.N / 2; m < spec.N / 2; ++m)
    for (int s = -spec.N / 2; s < spec.N / 2; ++s) {
      long long prod = static_cast<long long>(m) * s;
      if (prod != 0 && prod % spec.N == 0) out.emplace_back(m, s);
    }
  return out;
}

double matrix_element_check(const GridSpec& spec, int m, int s) {
  const int n = spec.N;
  const int mr = spec.reduce(m);
  const int sr = spec.reduce(s);
  GridOperator bj = fourier_quantize(spec, mr, sr, OrderingRule::BornJordan);
  // Independent route: signed sinc weight times the midpoint phase
  // e^{i k_m (q_j + s*Delta/2)}, evaluated in plain floating point.
  double weight = bj_weight(spec, mr, sr);
  Eigen::MatrixXcd other = Eigen::MatrixXcd::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    double angle = spec.wavenumber(mr) * (spec.q(j) + sr * spec.delta() / 2.0);
    other(j, imod(j + static_cast<long long>(sr), n)) = weight * std::polar(1.0, angle);
  }
  return (bj.mat - other).cwiseAbs().maxCoeff();
}

double hermiticity_deviation(const GridOperator& a) {
  return (a.mat - a.mat.adjoint()).cwiseAbs().maxCoeff();
}

}  // namespace bjq
