#include "bjq/quantize.hpp"

namespace bjq {

const char* rule_name(OrderingRule rule) {
  return rule == OrderingRule::BornJordan ? "born-jordan" : "weyl";
}

namespace {

// Splitting average for one monomial q^alpha p^beta: distribute the position
// factors around the momentum block,
//   sum over j <= alpha of  w(|j|) prod_i C(alpha_i, j_i) qh^j ph^beta qh^(alpha-j).
// A single split position is shared by every degree of freedom, so the
// Born-Jordan weights |j|!(|alpha|-|j|)!/(|alpha|+1)! do not factor per dof;
// the Weyl weights 1/2^|alpha| do.
OperatorPoly quantize_term(int n, const Exponents& e, const HBarPolynomial& c,
                           OrderingRule rule) {
  int total_q = 0;
  for (int i = 0; i < n; ++i) total_q += e[i];

  OperatorPoly sum(n);
  Exponents j(n, 0);
  for (;;) {
    int jq = 0;
    mpz_class comb = 1;
    for (int i = 0; i < n; ++i) {
      jq += j[i];
      comb *= binomial(e[i], j[i]);
    }
    mpq_class weight;
    if (rule == OrderingRule::BornJordan)
      weight = mpq_class(comb * factorial(jq) * factorial(total_q - jq),
                         factorial(total_q + 1));
    else
      weight = mpq_class(comb, mpz_class(1) << total_q);
    weight.canonicalize();

    Exponents left(e);  // qh^j ph^beta, already standard ordered
    for (int i = 0; i < n; ++i) left[i] = j[i];
    Exponents right(2 * n, 0);  // qh^(alpha-j)
    for (int i = 0; i < n; ++i) right[i] = e[i] - j[i];
    sum += op_mul(
        OperatorPoly::monomial(n, left, HBarPolynomial(GaussianRational(weight))),
        OperatorPoly::monomial(n, right, HBarPolynomial(GaussianRational(1L))));

    int i = 0;
    while (i < n && j[i] == e[i]) j[i++] = 0;
    if (i == n) break;
    ++j[i];
  }
  return c * sum;
}

}  // namespace

OperatorPoly quantize(const ClassicalPoly& f, OrderingRule rule) {
  const int n = f.dof();
  OperatorPoly result(n);
  for (const auto& [e, c] : f.terms()) result += quantize_term(n, e, c, rule);
  return result;
}

OperatorPoly groenewold_discrepancy() {
  OperatorPoly q = OperatorPoly::operator_q(1, 1);
  OperatorPoly p = OperatorPoly::operator_p(1, 1);
  OperatorPoly q3 = q * q * q;
  OperatorPoly p3 = p * p * p;
  OperatorPoly qpq = q * p * q;
  OperatorPoly pqp = p * q * p;
  OperatorPoly a =
      HBarPolynomial(GaussianRational(mpq_class(1, 9))) * quantum_bracket(q3, p3);
  OperatorPoly b =
      HBarPolynomial(GaussianRational(mpq_class(1, 3))) * quantum_bracket(qpq, pqp);
  return a - b;
}

namespace {

void require_q_only(const ClassicalPoly& f, const char* what) {
  if (!f.depends_only_on_q())
    throw MixedVariableInput(std::string(what) + " must depend only on q variables");
}

void require_p_only(const ClassicalPoly& g, const char* what) {
  if (!g.depends_only_on_p())
    throw MixedVariableInput(std::string(what) + " must depend only on p variables");
}

}  // namespace

OperatorPoly strengthened_rule_residual(const ClassicalPoly& f1, const ClassicalPoly& g1,
                                        const ClassicalPoly& f2, const ClassicalPoly& g2,
                                        OrderingRule rule) {
  detail::check_same_dof(f1.dof(), g1.dof());
  detail::check_same_dof(f1.dof(), f2.dof());
  detail::check_same_dof(f1.dof(), g2.dof());
  require_q_only(f1, "F1");
  require_q_only(f2, "F2");
  require_p_only(g1, "G1");
  require_p_only(g2, "G2");
  ClassicalPoly lhs1 = f1 + g1;
  ClassicalPoly lhs2 = f2 + g2;
  return quantum_bracket(quantize(lhs1, rule), quantize(lhs2, rule)) -
         quantize(poisson_bracket(lhs1, lhs2), rule);
}

OperatorPoly dirac_rule_residual(const HBarPolynomial& c,
                                 const std::vector<HBarPolynomial>& k,
                                 const std::vector<HBarPolynomial>& l,
                                 const ClassicalPoly& f, const ClassicalPoly& g,
                                 OrderingRule rule) {
  const int n = f.dof();
  detail::check_same_dof(n, g.dof());
  if (static_cast<int>(k.size()) != n || static_cast<int>(l.size()) != n)
    throw std::invalid_argument("dirac_rule_residual: k, l must have dof entries");
  require_q_only(f, "F");
  require_p_only(g, "G");
  ClassicalPoly linear = ClassicalPoly::constant(n, c);
  for (int i = 1; i <= n; ++i) {
    linear += k[i - 1] * ClassicalPoly::variable_q(n, i);
    linear += l[i - 1] * ClassicalPoly::variable_p(n, i);
  }
  OperatorPoly expected(n);
  for (int i = 1; i <= n; ++i) {
    expected += k[i - 1] * as_standard_ordered(partial_p(g, i));
    expected -= l[i - 1] * as_standard_ordered(partial_q(f, i));
  }
  return quantum_bracket(quantize(linear, rule), quantize(f + g, rule)) - expected;
}

std::vector<std::pair<OperatorPoly, OperatorPoly>> heisenberg_covariance_residual(
    const ClassicalPoly& f, OrderingRule rule) {
  const int n = f.dof();
  OperatorPoly qf = quantize(f, rule);
  std::vector<std::pair<OperatorPoly, OperatorPoly>> out;
  out.reserve(n);
  for (int i = 1; i <= n; ++i) {
    OperatorPoly first = quantum_bracket(OperatorPoly::operator_q(n, i), qf) -
                         quantize(partial_p(f, i), rule);
    OperatorPoly second = quantum_bracket(OperatorPoly::operator_p(n, i), qf) +
                          quantize(partial_q(f, i), rule);
    out.emplace_back(std::move(first), std::move(second));
  }
  return out;
}

}  // namespace bjq
