#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "bjq/scalars.hpp"

namespace bjq {

struct DofMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Exponent vector of length 2n: q1..qn exponents then p1..pn exponents.
using Exponents = std::vector<int>;

/// Commuting polynomial on 2n-dimensional phase space with HBarPolynomial
/// coefficients. Terms are kept sorted by exponent vector; no zero
/// coefficients are stored.
class ClassicalPoly {
 public:
  explicit ClassicalPoly(int dof);
  static ClassicalPoly constant(int dof, HBarPolynomial c);
  static ClassicalPoly variable_q(int dof, int i);  // i is 1-based
  static ClassicalPoly variable_p(int dof, int i);
  static ClassicalPoly monomial(int dof, Exponents e, HBarPolynomial c);

  int dof() const { return dof_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponents, HBarPolynomial>& terms() const { return terms_; }

  void add_term(const Exponents& e, const HBarPolynomial& c);

  int total_degree() const;  // 0 for the zero polynomial
  bool depends_only_on_q() const;
  bool depends_only_on_p() const;

  /// Same polynomial viewed on a larger phase space.
  ClassicalPoly promoted(int new_dof) const;

  friend ClassicalPoly operator+(const ClassicalPoly& a, const ClassicalPoly& b);
  friend ClassicalPoly operator-(const ClassicalPoly& a, const ClassicalPoly& b);
  friend ClassicalPoly operator-(const ClassicalPoly& a);
  friend ClassicalPoly operator*(const ClassicalPoly& a, const ClassicalPoly& b);
  friend ClassicalPoly operator*(const HBarPolynomial& c, const ClassicalPoly& a);
  friend bool operator==(const ClassicalPoly& a, const ClassicalPoly& b) {
    return a.dof_ == b.dof_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const ClassicalPoly& a, const ClassicalPoly& b) {
    return !(a == b);
  }
  ClassicalPoly& operator+=(const ClassicalPoly& o) { return *this = *this + o; }
  ClassicalPoly& operator-=(const ClassicalPoly& o) { return *this = *this - o; }

 private:
  int dof_;
  std::map<Exponents, HBarPolynomial> terms_;
};

ClassicalPoly partial_q(const ClassicalPoly& f, int i);
ClassicalPoly partial_p(const ClassicalPoly& f, int i);

/// Sum_i (dF/dq_i dG/dp_i - dF/dp_i dG/dq_i), exact.
ClassicalPoly poisson_bracket(const ClassicalPoly& f, const ClassicalPoly& g);

/// Deterministic text form; monomials in descending lexicographic exponent
/// order, e.g. "q^2*p - 1/3*hbar^2".
std::string print_canonical(const ClassicalPoly& f);

namespace detail {
void check_same_dof(int a, int b);
std::string render_poly(const std::map<Exponents, HBarPolynomial>& terms, int dof,
                        bool hatted);
}  // namespace detail

}  // namespace bjq
