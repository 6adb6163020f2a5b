#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>

namespace bjq {

mpz_class binomial(unsigned n, unsigned k);
mpz_class factorial(unsigned n);

/// Exact complex rational re + im*i. GMP keeps fractions reduced with
/// positive denominators, so equality is plain structural equality.
struct GaussianRational {
  mpq_class re{0};
  mpq_class im{0};

  GaussianRational() = default;
  GaussianRational(long v) : re(v) {}
  GaussianRational(mpq_class r) : re(std::move(r)) {}
  GaussianRational(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}

  static GaussianRational imaginary_unit() { return {mpq_class(0), mpq_class(1)}; }
  static GaussianRational i_power(unsigned k);        // i^k
  static GaussianRational minus_i_power(unsigned k);  // (-i)^k

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }
  bool is_pure_imaginary() const { return sgn(re) == 0 && sgn(im) != 0; }

  GaussianRational conjugate() const { return {re, mpq_class(-im)}; }
  GaussianRational inverse() const;  // throws std::domain_error on zero

  /// Canonical text: "a/b", "c/d*i", "a/b+c/d*i" or "a/b-c/d*i"; "0" for zero.
  std::string str() const;

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {mpq_class(a.re + b.re), mpq_class(a.im + b.im)};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {mpq_class(a.re - b.re), mpq_class(a.im - b.im)};
  }
  friend GaussianRational operator-(const GaussianRational& a) {
    return {mpq_class(-a.re), mpq_class(-a.im)};
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {mpq_class(a.re * b.re - a.im * b.im), mpq_class(a.re * b.im + a.im * b.re)};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    return a * b.inverse();
  }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
    return !(a == b);
  }
  GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
  GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
  GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
};

/// Laurent polynomial in the formal symbol hbar over GaussianRational.
/// Negative powers are representable (hbar_divide produces them transiently)
/// but every public quantization/bracket result has min power >= 0.
class HBarPolynomial {
 public:
  HBarPolynomial() = default;
  HBarPolynomial(long v) { set(0, GaussianRational(v)); }
  HBarPolynomial(GaussianRational c) { set(0, std::move(c)); }

  static HBarPolynomial hbar(int power = 1) {
    HBarPolynomial h;
    h.set(power, GaussianRational(1));
    return h;
  }
  static HBarPolynomial term(int power, GaussianRational c) {
    HBarPolynomial h;
    h.set(power, std::move(c));
    return h;
  }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;  // zero or a single hbar^0 term
  int min_power() const;     // throws std::domain_error on zero
  int max_power() const;     // throws std::domain_error on zero
  const std::map<int, GaussianRational>& terms() const { return terms_; }

  GaussianRational coefficient(int power) const;
  GaussianRational at_hbar_zero() const { return coefficient(0); }

  HBarPolynomial conjugate() const;      // hbar is real
  HBarPolynomial shifted(int delta) const;

  std::string str() const;

  void add_term(int power, const GaussianRational& c);

  friend HBarPolynomial operator+(const HBarPolynomial& a, const HBarPolynomial& b);
  friend HBarPolynomial operator-(const HBarPolynomial& a, const HBarPolynomial& b);
  friend HBarPolynomial operator-(const HBarPolynomial& a);
  friend HBarPolynomial operator*(const HBarPolynomial& a, const HBarPolynomial& b);
  friend bool operator==(const HBarPolynomial& a, const HBarPolynomial& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const HBarPolynomial& a, const HBarPolynomial& b) {
    return !(a == b);
  }
  HBarPolynomial& operator+=(const HBarPolynomial& o) { return *this = *this + o; }
  HBarPolynomial& operator-=(const HBarPolynomial& o) { return *this = *this - o; }
  HBarPolynomial& operator*=(const HBarPolynomial& o) { return *this = *this * o; }

 private:
  void set(int power, GaussianRational c);
  std::map<int, GaussianRational> terms_;  // power -> nonzero coefficient
};

/// x / hbar, shifting every power down by one. Always defined; the
/// OperatorPoly invariant catches illegal negative powers downstream.
HBarPolynomial hbar_divide(const HBarPolynomial& x);

}  // namespace bjq
