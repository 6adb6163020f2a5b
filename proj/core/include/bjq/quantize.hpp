#pragma once

#include <utility>
#include <vector>

#include "bjq/operators.hpp"

namespace bjq {

enum class OrderingRule { BornJordan, Weyl };

const char* rule_name(OrderingRule rule);  // "born-jordan" / "weyl"

/// Raised when an argument required to be q-only contains a p variable or
/// vice versa.
struct MixedVariableInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Linear quantization map. A monomial q^alpha p^beta (multi-indices over n
/// degrees of freedom) goes to the splitting average
///   sum over j <= alpha of  w(|j|, |alpha|) prod_i C(alpha_i, j_i)
///                           * qh^j ph^beta qh^(alpha-j)
/// with weights
///   BornJordan: w(k, m) = k! (m-k)! / (m+1)!
///   Weyl:       w(k, m) = 1 / 2^m.
/// The split is shared by all degrees of freedom. The Weyl weights factor per
/// dof; the Born-Jordan ones do not, which matters for n >= 2 (e.g.
/// BJ(q1 q2 p1 p2) carries -hbar^2/3 where the per-dof product would give
/// -hbar^2/4). For n = 1 both reduce to the familiar one-variable forms
/// (1/(r+1)) sum_j qh^j ph^s qh^(r-j) and (1/2^r) sum_j C(r,j) qh^j ph^s qh^(r-j).
OperatorPoly quantize(const ClassicalPoly& f, OrderingRule rule);

/// The two values of Q(q^2 p^2) forced by pushing the correspondence rule
/// through {q^3,p^3} and {q^2 p, q p^2}, as A - B. A pure scalar multiple
/// of the identity, of magnitude hbar^2/3.
OperatorPoly groenewold_discrepancy();

/// Residual of the split-variable commutation rule on (F1+G1, F2+G2):
///   {Q(F1+G1), Q(F2+G2)}_Q - Q({F1+G1, F2+G2}).
/// F1, F2 must be q-only; G1, G2 p-only. Zero iff the rule satisfies the
/// strengthened rule on this instance (always zero for BornJordan).
OperatorPoly strengthened_rule_residual(const ClassicalPoly& f1, const ClassicalPoly& g1,
                                        const ClassicalPoly& f2, const ClassicalPoly& g2,
                                        OrderingRule rule);

/// Residual of the bracket of a linear variable c + k.q + l.p against
/// F(q) + G(p):
///   {Q(c + k.q + l.p), Q(F+G)}_Q - (k.grad_p G(ph) - l.grad_q F(qh)).
/// Zero for both rules.
OperatorPoly dirac_rule_residual(const HBarPolynomial& c,
                                 const std::vector<HBarPolynomial>& k,
                                 const std::vector<HBarPolynomial>& l,
                                 const ClassicalPoly& f, const ClassicalPoly& g,
                                 OrderingRule rule);

/// Per degree of freedom i, the pair
///   ({qh_i, Q(F)}_Q - Q(dF/dp_i),  {ph_i, Q(F)}_Q + Q(dF/dq_i)).
/// Both components are zero for both rules, for every F.
std::vector<std::pair<OperatorPoly, OperatorPoly>> heisenberg_covariance_residual(
    const ClassicalPoly& f, OrderingRule rule);

}  // namespace bjq
