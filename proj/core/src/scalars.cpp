#include "bjq/scalars.hpp"

namespace bjq {

mpz_class binomial(unsigned n, unsigned k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

mpz_class factorial(unsigned n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

GaussianRational GaussianRational::i_power(unsigned k) {
  switch (k % 4) {
    case 0: return GaussianRational(1);
    case 1: return imaginary_unit();
    case 2: return GaussianRational(-1);
    default: return -imaginary_unit();
  }
}

GaussianRational GaussianRational::minus_i_power(unsigned k) {
  switch (k % 4) {
    case 0: return GaussianRational(1);
    case 1: return -imaginary_unit();
    case 2: return GaussianRational(-1);
    default: return imaginary_unit();
  }
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw std::domain_error("GaussianRational: division by zero");
  mpq_class n = re * re + im * im;
  return {mpq_class(re / n), mpq_class(-im / n)};
}

std::string GaussianRational::str() const {
  if (is_zero()) return "0";
  std::string out;
  if (sgn(re) != 0) out += re.get_str();
  if (sgn(im) != 0) {
    mpq_class mag = abs(im);
    std::string part;
    if (mag != 1) part = mag.get_str() + "*i";
    else part = "i";
    if (out.empty()) {
      out = (sgn(im) < 0 ? "-" : "") + part;
    } else {
      out += (sgn(im) < 0 ? "-" : "+") + part;
    }
  }
  return out;
}

void HBarPolynomial::set(int power, GaussianRational c) {
  if (!c.is_zero()) terms_[power] = std::move(c);
}

void HBarPolynomial::add_term(int power, const GaussianRational& c) {
  auto it = terms_.find(power);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(power, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

bool HBarPolynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

int HBarPolynomial::min_power() const {
  if (terms_.empty()) throw std::domain_error("HBarPolynomial: min_power of zero");
  return terms_.begin()->first;
}

int HBarPolynomial::max_power() const {
  if (terms_.empty()) throw std::domain_error("HBarPolynomial: max_power of zero");
  return terms_.rbegin()->first;
}

GaussianRational HBarPolynomial::coefficient(int power) const {
  auto it = terms_.find(power);
  return it == terms_.end() ? GaussianRational() : it->second;
}

HBarPolynomial HBarPolynomial::conjugate() const {
  HBarPolynomial r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, c.conjugate());
  return r;
}

HBarPolynomial HBarPolynomial::shifted(int delta) const {
  HBarPolynomial r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(k + delta, c);
  return r;
}

HBarPolynomial operator+(const HBarPolynomial& a, const HBarPolynomial& b) {
  HBarPolynomial r = a;
  for (const auto& [k, c] : b.terms_) r.add_term(k, c);
  return r;
}

HBarPolynomial operator-(const HBarPolynomial& a, const HBarPolynomial& b) {
  HBarPolynomial r = a;
  for (const auto& [k, c] : b.terms_) r.add_term(k, -c);
  return r;
}

HBarPolynomial operator-(const HBarPolynomial& a) {
  HBarPolynomial r;
  for (const auto& [k, c] : a.terms_) r.terms_.emplace(k, -c);
  return r;
}

HBarPolynomial operator*(const HBarPolynomial& a, const HBarPolynomial& b) {
  HBarPolynomial r;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) r.add_term(ka + kb, ca * cb);
  return r;
}

std::string HBarPolynomial::str() const {
  if (terms_.empty()) return "0";
  // Single pure-complex constant keeps the compact scalar form.
  if (is_constant()) return terms_.begin()->second.str();
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const int k = it->first;
    const GaussianRational& c = it->second;
    bool negative = false;
    std::string body;
    if (c.is_real() || c.is_pure_imaginary()) {
      const mpq_class& part = c.is_real() ? c.re : c.im;
      negative = sgn(part) < 0;
      mpq_class mag = abs(part);
      if (mag != 1) body = mag.get_str();
      if (c.is_pure_imaginary()) body += (body.empty() ? "i" : "*i");
    } else {
      body = "(" + c.str() + ")";
    }
    if (k != 0) {
      std::string hb = k == 1 ? "hbar" : "hbar^" + std::to_string(k);
      body += body.empty() ? hb : "*" + hb;
    }
    if (body.empty()) body = "1";
    if (first) {
      out = (negative ? "-" : "") + body;
      first = false;
    } else {
      out += (negative ? " - " : " + ") + body;
    }
  }
  return out;
}

HBarPolynomial hbar_divide(const HBarPolynomial& x) { return x.shifted(-1); }

}  // namespace bjq
