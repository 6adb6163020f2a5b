#pragma once

#include "bjq/classical.hpp"

namespace bjq {

/// Raised when a quantum bracket would need an inexact division by hbar.
/// Signals an internal algebra bug: [A,B] of valid operator polynomials is
/// always a multiple of hbar.
struct InexactHbarDivision : std::logic_error {
  using std::logic_error::logic_error;
};

/// Noncommutative polynomial in qh_1..qh_n, ph_1..ph_n with
/// [qh_i, ph_j] = i*hbar*delta_ij, stored in standard order: every monomial
/// is qh^alpha ph^beta (all qh factors left of all ph factors). The normal
/// form is unique, so equality is structural.
class OperatorPoly {
 public:
  explicit OperatorPoly(int dof);
  static OperatorPoly identity(int dof);
  static OperatorPoly constant(int dof, HBarPolynomial c);
  static OperatorPoly operator_q(int dof, int i);  // i is 1-based
  static OperatorPoly operator_p(int dof, int i);
  /// Standard-ordered monomial c * qh^alpha ph^beta.
  static OperatorPoly monomial(int dof, Exponents e, HBarPolynomial c);

  int dof() const { return dof_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponents, HBarPolynomial>& terms() const { return terms_; }

  void add_term(const Exponents& e, const HBarPolynomial& c);

  /// True when the value is a scalar multiple of the identity (or zero).
  bool is_scalar() const;
  /// Coefficient of the identity component.
  HBarPolynomial scalar_part() const;

  friend OperatorPoly operator+(const OperatorPoly& a, const OperatorPoly& b);
  friend OperatorPoly operator-(const OperatorPoly& a, const OperatorPoly& b);
  friend OperatorPoly operator-(const OperatorPoly& a);
  friend OperatorPoly operator*(const HBarPolynomial& c, const OperatorPoly& a);
  friend bool operator==(const OperatorPoly& a, const OperatorPoly& b) {
    return a.dof_ == b.dof_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const OperatorPoly& a, const OperatorPoly& b) {
    return !(a == b);
  }
  OperatorPoly& operator+=(const OperatorPoly& o) { return *this = *this + o; }
  OperatorPoly& operator-=(const OperatorPoly& o) { return *this = *this - o; }

 private:
  int dof_;
  std::map<Exponents, HBarPolynomial> terms_;
};

/// Normal-ordered operator product. Moving ph_i^b past qh_i^c uses the exact
/// closed form of the repeated rewrite ph*qh -> qh*ph - i*hbar:
///   ph^b qh^c = sum_k (-i*hbar)^k k! C(b,k) C(c,k) qh^(c-k) ph^(b-k).
OperatorPoly op_mul(const OperatorPoly& a, const OperatorPoly& b);

inline OperatorPoly operator*(const OperatorPoly& a, const OperatorPoly& b) {
  return op_mul(a, b);
}

/// AB - BA in normal form.
OperatorPoly commutator(const OperatorPoly& a, const OperatorPoly& b);

/// -i/hbar, the scale relating the commutator to the quantum bracket.
const HBarPolynomial& QUANTUM_BRACKET_SCALE();

/// (-i/hbar)[A,B]. The division by hbar must be exact; a commutator
/// coefficient with hbar power < 1 raises InexactHbarDivision.
OperatorPoly quantum_bracket(const OperatorPoly& a, const OperatorPoly& b);

/// Hermitian adjoint: reverse each monomial (qh^a ph^b -> ph^b qh^a),
/// conjugate the coefficient (hbar stays real), re-normal-order.
OperatorPoly adjoint(const OperatorPoly& a);

/// Read a commuting polynomial literally as a standard-ordered operator:
/// q^a p^b becomes qh^a ph^b with the same coefficient.
OperatorPoly as_standard_ordered(const ClassicalPoly& f);

/// Set hbar to zero in the normal form and read the symbols as commuting
/// variables.
ClassicalPoly classical_limit(const OperatorPoly& a);

/// Text form mirroring the classical printer with hatted symbols, e.g.
/// "qh^2*ph^2 - 2*i*hbar*qh*ph - 2/3*hbar^2".
std::string print_canonical(const OperatorPoly& a);

}  // namespace bjq
