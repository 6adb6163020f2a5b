#include "bjq/classical.hpp"

#include <algorithm>

namespace bjq {

namespace detail {

void check_same_dof(int a, int b) {
  if (a != b)
    throw DofMismatch("degree-of-freedom mismatch: " + std::to_string(a) + " vs " +
                      std::to_string(b));
}

namespace {

std::string render_vars(const Exponents& e, int dof, bool hatted) {
  std::string out;
  const char* qname = hatted ? "qh" : "q";
  const char* pname = hatted ? "ph" : "p";
  for (int half = 0; half < 2; ++half) {
    const char* name = half == 0 ? qname : pname;
    for (int i = 0; i < dof; ++i) {
      int exp = e[half * dof + i];
      if (exp == 0) continue;
      if (!out.empty()) out += "*";
      out += name;
      if (dof > 1) out += std::to_string(i + 1);
      if (exp > 1) out += "^" + std::to_string(exp);
    }
  }
  return out;
}

// One monomial as (sign, body) with the sign pulled out when the coefficient
// is a single real or pure-imaginary hbar term; otherwise the coefficient is
// parenthesized and the sign stays '+'.
std::pair<bool, std::string> render_term(const HBarPolynomial& c, const Exponents& e,
                                         int dof, bool hatted) {
  std::string vars = render_vars(e, dof, hatted);
  bool negative = false;
  std::string coeff;
  const auto& ts = c.terms();
  if (ts.size() == 1 &&
      (ts.begin()->second.is_real() || ts.begin()->second.is_pure_imaginary())) {
    const int k = ts.begin()->first;
    const GaussianRational& g = ts.begin()->second;
    const mpq_class& part = g.is_real() ? g.re : g.im;
    negative = sgn(part) < 0;
    mpq_class mag = abs(part);
    if (mag != 1) coeff = mag.get_str();
    if (g.is_pure_imaginary()) coeff += coeff.empty() ? "i" : "*i";
    if (k != 0) {
      std::string hb = k == 1 ? "hbar" : "hbar^" + std::to_string(k);
      coeff += coeff.empty() ? hb : "*" + hb;
    }
  } else if (ts.size() == 1) {
    // One genuinely complex coefficient: parenthesize the complex part only,
    // keeping the hbar power outside, as in "(1+2*i)*hbar".
    const int k = ts.begin()->first;
    coeff = "(" + ts.begin()->second.str() + ")";
    if (k != 0) coeff += k == 1 ? "*hbar" : "*hbar^" + std::to_string(k);
  } else {
    coeff = "(" + c.str() + ")";
  }
  std::string body;
  if (coeff.empty()) body = vars.empty() ? "1" : vars;
  else if (vars.empty()) body = coeff;
  else body = coeff + "*" + vars;
  return {negative, body};
}

}  // namespace

std::string render_poly(const std::map<Exponents, HBarPolynomial>& terms, int dof,
                        bool hatted) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    auto [negative, body] = render_term(it->second, it->first, dof, hatted);
    if (first) {
      out = (negative ? "-" : "") + body;
      first = false;
    } else {
      out += (negative ? " - " : " + ") + body;
    }
  }
  return out;
}

}  // namespace detail

ClassicalPoly::ClassicalPoly(int dof) : dof_(dof) {
  if (dof < 1) throw std::invalid_argument("ClassicalPoly: dof must be >= 1");
}

ClassicalPoly ClassicalPoly::constant(int dof, HBarPolynomial c) {
  ClassicalPoly f(dof);
  f.add_term(Exponents(2 * dof, 0), c);
  return f;
}

ClassicalPoly ClassicalPoly::variable_q(int dof, int i) {
  if (i < 1 || i > dof) throw std::out_of_range("variable_q: index out of range");
  ClassicalPoly f(dof);
  Exponents e(2 * dof, 0);
  e[i - 1] = 1;
  f.add_term(e, HBarPolynomial(1));
  return f;
}

ClassicalPoly ClassicalPoly::variable_p(int dof, int i) {
  if (i < 1 || i > dof) throw std::out_of_range("variable_p: index out of range");
  ClassicalPoly f(dof);
  Exponents e(2 * dof, 0);
  e[dof + i - 1] = 1;
  f.add_term(e, HBarPolynomial(1));
  return f;
}

ClassicalPoly ClassicalPoly::monomial(int dof, Exponents e, HBarPolynomial c) {
  if (static_cast<int>(e.size()) != 2 * dof)
    throw std::invalid_argument("monomial: exponent vector has wrong length");
  for (int x : e)
    if (x < 0) throw std::invalid_argument("monomial: negative exponent");
  ClassicalPoly f(dof);
  f.add_term(e, c);
  return f;
}

void ClassicalPoly::add_term(const Exponents& e, const HBarPolynomial& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

int ClassicalPoly::total_degree() const {
  int deg = 0;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (int x : e) d += x;
    deg = std::max(deg, d);
  }
  return deg;
}

bool ClassicalPoly::depends_only_on_q() const {
  for (const auto& [e, c] : terms_)
    for (int i = dof_; i < 2 * dof_; ++i)
      if (e[i] != 0) return false;
  return true;
}

bool ClassicalPoly::depends_only_on_p() const {
  for (const auto& [e, c] : terms_)
    for (int i = 0; i < dof_; ++i)
      if (e[i] != 0) return false;
  return true;
}

ClassicalPoly ClassicalPoly::promoted(int new_dof) const {
  if (new_dof < dof_) throw std::invalid_argument("promoted: cannot shrink dof");
  ClassicalPoly f(new_dof);
  for (const auto& [e, c] : terms_) {
    Exponents ne(2 * new_dof, 0);
    for (int i = 0; i < dof_; ++i) {
      ne[i] = e[i];
      ne[new_dof + i] = e[dof_ + i];
    }
    f.add_term(ne, c);
  }
  return f;
}

ClassicalPoly operator+(const ClassicalPoly& a, const ClassicalPoly& b) {
  detail::check_same_dof(a.dof_, b.dof_);
  ClassicalPoly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

ClassicalPoly operator-(const ClassicalPoly& a, const ClassicalPoly& b) {
  detail::check_same_dof(a.dof_, b.dof_);
  ClassicalPoly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
  return r;
}

ClassicalPoly operator-(const ClassicalPoly& a) {
  ClassicalPoly r(a.dof_);
  for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
  return r;
}

ClassicalPoly operator*(const ClassicalPoly& a, const ClassicalPoly& b) {
  detail::check_same_dof(a.dof_, b.dof_);
  ClassicalPoly r(a.dof_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e(ea.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

ClassicalPoly operator*(const HBarPolynomial& c, const ClassicalPoly& a) {
  ClassicalPoly r(a.dof_);
  for (const auto& [e, ca] : a.terms_) r.add_term(e, c * ca);
  return r;
}

namespace {

// d/dx of the single variable at slot `idx` in the exponent vector.
ClassicalPoly derivative(const ClassicalPoly& f, int idx) {
  ClassicalPoly r(f.dof());
  for (const auto& [e, c] : f.terms()) {
    if (e[idx] == 0) continue;
    Exponents ne = e;
    ne[idx] -= 1;
    r.add_term(ne, HBarPolynomial(e[idx]) * c);
  }
  return r;
}

}  // namespace

ClassicalPoly partial_q(const ClassicalPoly& f, int i) {
  if (i < 1 || i > f.dof()) throw std::out_of_range("partial_q: index out of range");
  return derivative(f, i - 1);
}

ClassicalPoly partial_p(const ClassicalPoly& f, int i) {
  if (i < 1 || i > f.dof()) throw std::out_of_range("partial_p: index out of range");
  return derivative(f, f.dof() + i - 1);
}

ClassicalPoly poisson_bracket(const ClassicalPoly& f, const ClassicalPoly& g) {
  detail::check_same_dof(f.dof(), g.dof());
  ClassicalPoly r(f.dof());
  for (int i = 1; i <= f.dof(); ++i) {
    r += partial_q(f, i) * partial_p(g, i);
    r -= partial_p(f, i) * partial_q(g, i);
  }
  return r;
}

std::string print_canonical(const ClassicalPoly& f) {
  return detail::render_poly(f.terms(), f.dof(), false);
}

}  // namespace bjq
