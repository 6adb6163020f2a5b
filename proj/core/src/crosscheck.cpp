#include "bjq/crosscheck.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace bjq::crosscheck {

OperatorPoly normal_order_word(int dof, const Word& word, const HBarPolynomial& coeff) {
  for (std::size_t a = 0; a + 1 < word.size(); ++a) {
    if (word[a].first != 'p' || word[a + 1].first != 'q') continue;
    Word swapped = word;
    std::swap(swapped[a], swapped[a + 1]);
    OperatorPoly result = normal_order_word(dof, swapped, coeff);
    if (word[a].second == word[a + 1].second) {
      Word dropped = word;
      dropped.erase(dropped.begin() + a, dropped.begin() + a + 2);
      HBarPolynomial minus_i_hbar =
          HBarPolynomial::term(1, -GaussianRational::imaginary_unit());
      result += normal_order_word(dof, dropped, minus_i_hbar * coeff);
    }
    return result;
  }
  Exponents e(2 * dof, 0);
  for (const auto& [var, index] : word) e[(var == 'q' ? 0 : dof) + index - 1] += 1;
  return OperatorPoly::monomial(dof, e, coeff);
}

OperatorPoly all_orderings_average(int r, int s) {
  std::vector<char> letters(r + s);
  std::fill(letters.begin(), letters.begin() + s, 'p');
  std::fill(letters.begin() + s, letters.end(), 'q');
  OperatorPoly sum(1);
  long count = 0;
  do {
    Word word;
    word.reserve(letters.size());
    for (char v : letters) word.emplace_back(v, 1);
    sum += normal_order_word(1, word, HBarPolynomial(1));
    ++count;
  } while (std::next_permutation(letters.begin(), letters.end()));
  return HBarPolynomial(GaussianRational(mpq_class(1, count))) * sum;
}

OperatorPoly bj_p_split(int r, int s) {
  auto power = [](const OperatorPoly& base, int e) {
    OperatorPoly acc = OperatorPoly::identity(1);
    for (int t = 0; t < e; ++t) acc = op_mul(acc, base);
    return acc;
  };
  OperatorPoly q = OperatorPoly::operator_q(1, 1);
  OperatorPoly p = OperatorPoly::operator_p(1, 1);
  OperatorPoly qr = power(q, r);
  OperatorPoly sum(1);
  for (int j = 0; j <= s; ++j)
    sum += op_mul(power(p, j), op_mul(qr, power(p, s - j)));
  return HBarPolynomial(GaussianRational(mpq_class(1, s + 1))) * sum;
}

GridOperator bj_fourier_momentum_route(const GridSpec& spec, int m, int s) {
  const int n = spec.N;
  const int mr = spec.reduce(m);
  const int sr = spec.reduce(s);
  auto imod = [n](long long x) { return static_cast<int>(((x % n) + n) % n); };
  double weight = bj_weight(spec, mr, sr);
  Eigen::MatrixXcd bp = Eigen::MatrixXcd::Zero(n, n);
  for (int r = 0; r < n; ++r) {
    double angle = spec.displacement_param(sr) *
                   (spec.p(r) + spec.hbar * spec.wavenumber(mr) / 2.0);
    bp(imod(r + static_cast<long long>(mr)), r) = weight * std::polar(1.0, angle);
  }
  Eigen::MatrixXcd u(n, n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (int j = 0; j < n; ++j)
    for (int r = 0; r < n; ++r) {
      double angle = 2.0 * std::numbers::pi *
                     static_cast<double>(imod(static_cast<long long>(j) * r)) / n;
      u(j, r) = std::polar(scale, angle);
    }
  return {spec, u * bp * u.adjoint()};
}

std::vector<std::pair<int, int>> nullspace_brute_scan(const GridSpec& spec, double tol) {
  std::vector<std::pair<int, int>> out;
  for (int m = -spec.N / 2; m < spec.N / 2; ++m)
    for (int s = -spec.N / 2; s < spec.N / 2; ++s) {
      GridOperator a = fourier_quantize(spec, m, s, OrderingRule::BornJordan);
      if (a.mat.cwiseAbs().maxCoeff() < tol) out.emplace_back(m, s);
    }
  return out;
}

}  // namespace bjq::crosscheck
