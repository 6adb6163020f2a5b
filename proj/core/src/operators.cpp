#include "bjq/operators.hpp"

#include <algorithm>

namespace bjq {

OperatorPoly::OperatorPoly(int dof) : dof_(dof) {
  if (dof < 1) throw std::invalid_argument("OperatorPoly: dof must be >= 1");
}

OperatorPoly OperatorPoly::identity(int dof) {
  return constant(dof, HBarPolynomial(1));
}

OperatorPoly OperatorPoly::constant(int dof, HBarPolynomial c) {
  OperatorPoly a(dof);
  a.add_term(Exponents(2 * dof, 0), c);
  return a;
}

OperatorPoly OperatorPoly::operator_q(int dof, int i) {
  if (i < 1 || i > dof) throw std::out_of_range("operator_q: index out of range");
  OperatorPoly a(dof);
  Exponents e(2 * dof, 0);
  e[i - 1] = 1;
  a.add_term(e, HBarPolynomial(1));
  return a;
}

OperatorPoly OperatorPoly::operator_p(int dof, int i) {
  if (i < 1 || i > dof) throw std::out_of_range("operator_p: index out of range");
  OperatorPoly a(dof);
  Exponents e(2 * dof, 0);
  e[dof + i - 1] = 1;
  a.add_term(e, HBarPolynomial(1));
  return a;
}

OperatorPoly OperatorPoly::monomial(int dof, Exponents e, HBarPolynomial c) {
  if (static_cast<int>(e.size()) != 2 * dof)
    throw std::invalid_argument("monomial: exponent vector has wrong length");
  for (int x : e)
    if (x < 0) throw std::invalid_argument("monomial: negative exponent");
  OperatorPoly a(dof);
  a.add_term(e, c);
  return a;
}

void OperatorPoly::add_term(const Exponents& e, const HBarPolynomial& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

bool OperatorPoly::is_scalar() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const Exponents& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

HBarPolynomial OperatorPoly::scalar_part() const {
  auto it = terms_.find(Exponents(2 * dof_, 0));
  return it == terms_.end() ? HBarPolynomial() : it->second;
}

OperatorPoly operator+(const OperatorPoly& a, const OperatorPoly& b) {
  detail::check_same_dof(a.dof_, b.dof_);
  OperatorPoly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

OperatorPoly operator-(const OperatorPoly& a, const OperatorPoly& b) {
  detail::check_same_dof(a.dof_, b.dof_);
  OperatorPoly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
  return r;
}

OperatorPoly operator-(const OperatorPoly& a) {
  OperatorPoly r(a.dof_);
  for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
  return r;
}

OperatorPoly operator*(const HBarPolynomial& c, const OperatorPoly& a) {
  OperatorPoly r(a.dof_);
  for (const auto& [e, ca] : a.terms_) r.add_term(e, c * ca);
  return r;
}

OperatorPoly op_mul(const OperatorPoly& a, const OperatorPoly& b) {
  detail::check_same_dof(a.dof(), b.dof());
  const int n = a.dof();
  OperatorPoly r(n);
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) {
      // Move the ph block of the left monomial past the qh block of the
      // right one, independently per degree of freedom.
      std::vector<int> kmax(n), k(n, 0);
      for (int i = 0; i < n; ++i) kmax[i] = std::min(ea[n + i], eb[i]);
      for (;;) {
        int ktot = 0;
        mpz_class comb = 1;
        for (int i = 0; i < n; ++i) {
          if (k[i] == 0) continue;
          ktot += k[i];
          comb *= factorial(k[i]) * binomial(ea[n + i], k[i]) * binomial(eb[i], k[i]);
        }
        GaussianRational scale =
            GaussianRational::minus_i_power(ktot) * GaussianRational(mpq_class(comb));
        Exponents e(2 * n);
        for (int i = 0; i < n; ++i) {
          e[i] = ea[i] + eb[i] - k[i];
          e[n + i] = ea[n + i] + eb[n + i] - k[i];
        }
        r.add_term(e, HBarPolynomial::term(ktot, scale) * ca * cb);
        int i = 0;
        while (i < n && k[i] == kmax[i]) k[i++] = 0;
        if (i == n) break;
        ++k[i];
      }
    }
  return r;
}

OperatorPoly commutator(const OperatorPoly& a, const OperatorPoly& b) {
  return op_mul(a, b) - op_mul(b, a);
}

const HBarPolynomial& QUANTUM_BRACKET_SCALE() {
  static const HBarPolynomial scale =
      HBarPolynomial::term(-1, -GaussianRational::imaginary_unit());
  return scale;
}

OperatorPoly quantum_bracket(const OperatorPoly& a, const OperatorPoly& b) {
  OperatorPoly c = commutator(a, b);
  OperatorPoly r(c.dof());
  for (const auto& [e, coeff] : c.terms()) {
    if (coeff.min_power() < 1)
      throw InexactHbarDivision(
          "quantum_bracket: commutator coefficient not divisible by hbar");
    r.add_term(e, QUANTUM_BRACKET_SCALE() * coeff);
  }
  return r;
}

OperatorPoly adjoint(const OperatorPoly& a) {
  const int n = a.dof();
  OperatorPoly r(n);
  for (const auto& [e, c] : a.terms()) {
    Exponents pe(2 * n, 0), qe(2 * n, 0);
    for (int i = 0; i < n; ++i) {
      pe[n + i] = e[n + i];
      qe[i] = e[i];
    }
    r += op_mul(OperatorPoly::monomial(n, pe, c.conjugate()),
                OperatorPoly::monomial(n, qe, HBarPolynomial(1)));
  }
  return r;
}

OperatorPoly as_standard_ordered(const ClassicalPoly& f) {
  OperatorPoly r(f.dof());
  for (const auto& [e, c] : f.terms()) r.add_term(e, c);
  return r;
}

ClassicalPoly classical_limit(const OperatorPoly& a) {
  ClassicalPoly r(a.dof());
  for (const auto& [e, c] : a.terms()) {
    GaussianRational c0 = c.at_hbar_zero();
    if (!c0.is_zero()) r.add_term(e, HBarPolynomial(c0));
  }
  return r;
}

std::string print_canonical(const OperatorPoly& a) {
  return detail::render_poly(a.terms(), a.dof(), true);
}

}  // namespace bjq
