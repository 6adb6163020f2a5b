#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bjq/crosscheck.hpp"
#include "bjq/quantize.hpp"
#include "bjq/testgen.hpp"

using bjq::ClassicalPoly;
using bjq::GaussianRational;
using bjq::HBarPolynomial;
using bjq::OperatorPoly;
using bjq::OrderingRule;

namespace {

ClassicalPoly mono(int r, int s) {
  return ClassicalPoly::monomial(1, {r, s}, HBarPolynomial(1));
}

OperatorPoly scalar1(int power, long num, long den) {
  mpq_class v(num, den);
  v.canonicalize();
  return OperatorPoly::constant(1, HBarPolynomial::term(power, GaussianRational(v)));
}

}  // namespace

TEST_CASE("rule names") {
  CHECK(std::string(bjq::rule_name(OrderingRule::BornJordan)) == "born-jordan");
  CHECK(std::string(bjq::rule_name(OrderingRule::Weyl)) == "weyl");
}

TEST_CASE("q^2 p^2 under both rules") {
  OperatorPoly bj = bjq::quantize(mono(2, 2), OrderingRule::BornJordan);
  CHECK(bjq::print_canonical(bj) == "qh^2*ph^2 - 2*i*hbar*qh*ph - 2/3*hbar^2");
  OperatorPoly weyl = bjq::quantize(mono(2, 2), OrderingRule::Weyl);
  CHECK(bjq::print_canonical(weyl) == "qh^2*ph^2 - 2*i*hbar*qh*ph - 1/2*hbar^2");
  // The two rules differ by a pure scalar on this monomial.
  CHECK(weyl - bj == scalar1(2, 1, 6));
}

TEST_CASE("low degree monomials coincide under both rules") {
  for (int r = 0; r <= 2; ++r)
    for (int s = 0; s <= 2; ++s) {
      if (r + s >= 4) continue;  // both rules agree below total degree 4
      CHECK(bjq::quantize(mono(r, s), OrderingRule::BornJordan) ==
            bjq::quantize(mono(r, s), OrderingRule::Weyl));
    }
  // qp maps to the symmetrized product under both rules.
  OperatorPoly qp = bjq::quantize(mono(1, 1), OrderingRule::BornJordan);
  CHECK(bjq::print_canonical(qp) == "qh*ph - 1/2*i*hbar");
}

TEST_CASE("quantization is linear") {
  std::mt19937_64 rng(1001);
  for (OrderingRule rule : {OrderingRule::BornJordan, OrderingRule::Weyl}) {
    for (int trial = 0; trial < 15; ++trial) {
      int dof = 1 + static_cast<int>(rng() % 2);
      ClassicalPoly f = bjq::testgen::random_poly(rng, dof, 5, 4);
      ClassicalPoly g = bjq::testgen::random_poly(rng, dof, 5, 4);
      CHECK(bjq::quantize(f + g, rule) == bjq::quantize(f, rule) + bjq::quantize(g, rule));
      HBarPolynomial c = HBarPolynomial::term(1, GaussianRational(mpq_class(3, 2)));
      CHECK(bjq::quantize(c * f, rule) == c * bjq::quantize(f, rule));
    }
  }
}

TEST_CASE("real symbols map to Hermitian operators") {
  std::mt19937_64 rng(1002);
  for (OrderingRule rule : {OrderingRule::BornJordan, OrderingRule::Weyl}) {
    for (int trial = 0; trial < 15; ++trial) {
      int dof = 1 + static_cast<int>(rng() % 2);
      ClassicalPoly f =
          bjq::testgen::random_poly(rng, dof, 6, 4, bjq::testgen::VarSet::All, true);
      OperatorPoly a = bjq::quantize(f, rule);
      CHECK(bjq::adjoint(a) == a);
    }
  }
}

TEST_CASE("classical limit recovers the symbol") {
  std::mt19937_64 rng(1003);
  for (OrderingRule rule : {OrderingRule::BornJordan, OrderingRule::Weyl}) {
    for (int trial = 0; trial < 15; ++trial) {
      int dof = 1 + static_cast<int>(rng() % 2);
      ClassicalPoly f =
          bjq::testgen::random_poly(rng, dof, 6, 4, bjq::testgen::VarSet::All, true);
      CHECK(bjq::classical_limit(bjq::quantize(f, rule)) == f);
    }
  }
}

TEST_CASE("single variable polynomials quantize by substitution") {
  std::mt19937_64 rng(1004);
  for (OrderingRule rule : {OrderingRule::BornJordan, OrderingRule::Weyl}) {
    ClassicalPoly f = bjq::testgen::random_poly(rng, 1, 6, 4, bjq::testgen::VarSet::QOnly);
    CHECK(bjq::quantize(f, rule) == bjq::as_standard_ordered(f));
    ClassicalPoly g = bjq::testgen::random_poly(rng, 1, 6, 4, bjq::testgen::VarSet::POnly);
    CHECK(bjq::quantize(g, rule) == bjq::as_standard_ordered(g));
  }
}

TEST_CASE("q split equals p split for the equal weight rule") {
  for (int r = 0; r <= 5; ++r)
    for (int s = 0; s <= 5; ++s)
      CHECK(bjq::quantize(mono(r, s), OrderingRule::BornJordan) ==
            bjq::crosscheck::bj_p_split(r, s));
}

TEST_CASE("binomial split equals the all orderings average") {
  for (int r = 0; r <= 4; ++r)
    for (int s = 0; s <= 4 - r; ++s)
      CHECK(bjq::quantize(mono(r, s), OrderingRule::Weyl) ==
            bjq::crosscheck::all_orderings_average(r, s));
}

TEST_CASE("obstruction scalar") {
  OperatorPoly d = bjq::groenewold_discrepancy();
  CHECK(d.is_scalar());
  CHECK(d == scalar1(2, -1, 3));
  CHECK(bjq::print_canonical(d) == "-1/3*hbar^2");
}

TEST_CASE("split rule residual vanishes for the equal weight rule") {
  std::mt19937_64 rng(1005);
  for (int trial = 0; trial < 20; ++trial) {
    int dof = 1 + static_cast<int>(rng() % 2);
    ClassicalPoly f1 = bjq::testgen::random_poly(rng, dof, 6, 3, bjq::testgen::VarSet::QOnly);
    ClassicalPoly g1 = bjq::testgen::random_poly(rng, dof, 6, 3, bjq::testgen::VarSet::POnly);
    ClassicalPoly f2 = bjq::testgen::random_poly(rng, dof, 6, 3, bjq::testgen::VarSet::QOnly);
    ClassicalPoly g2 = bjq::testgen::random_poly(rng, dof, 6, 3, bjq::testgen::VarSet::POnly);
    OperatorPoly residual =
        bjq::strengthened_rule_residual(f1, g1, f2, g2, OrderingRule::BornJordan);
    CHECK(residual.is_zero());
  }
}

TEST_CASE("split rule residual for the symmetric rule on cubics") {
  ClassicalPoly zero(1);
  OperatorPoly residual = bjq::strengthened_rule_residual(
      mono(3, 0), zero, zero, mono(0, 3), OrderingRule::Weyl);
  CHECK(residual == scalar1(2, -3, 2));
  // The equal weight rule clears the same input.
  CHECK(bjq::strengthened_rule_residual(mono(3, 0), zero, zero, mono(0, 3),
                                        OrderingRule::BornJordan)
            .is_zero());
}

TEST_CASE("split rule residual rejects mixed input") {
  ClassicalPoly zero(1);
  CHECK_THROWS_AS(
      bjq::strengthened_rule_residual(mono(1, 1), zero, zero, zero, OrderingRule::Weyl),
      bjq::MixedVariableInput);
  CHECK_THROWS_AS(
      bjq::strengthened_rule_residual(zero, mono(1, 0), zero, zero, OrderingRule::Weyl),
      bjq::MixedVariableInput);
}

TEST_CASE("linear generators act like classical flows") {
  std::mt19937_64 rng(1006);
  for (OrderingRule rule : {OrderingRule::BornJordan, OrderingRule::Weyl}) {
    for (int trial = 0; trial < 10; ++trial) {
      int dof = 1 + static_cast<int>(rng() % 2);
      HBarPolynomial c(3);
      std::vector<HBarPolynomial> k, l;
      for (int i = 0; i < dof; ++i) {
        k.push_back(HBarPolynomial(static_cast<long>(rng() % 7) - 3));
        l.push_back(HBarPolynomial(static_cast<long>(rng() % 7) - 3));
      }
      ClassicalPoly f = bjq::testgen::random_poly(rng, dof, 6, 3, bjq::testgen::VarSet::QOnly);
      ClassicalPoly g = bjq::testgen::random_poly(rng, dof, 6, 3, bjq::testgen::VarSet::POnly);
      CHECK(bjq::dirac_rule_residual(c, k, l, f, g, rule).is_zero());
    }
  }
}

TEST_CASE("coordinate brackets reproduce the classical derivatives") {
  std::mt19937_64 rng(1007);
  for (OrderingRule rule : {OrderingRule::BornJordan, OrderingRule::Weyl}) {
    for (int trial = 0; trial < 10; ++trial) {
      int dof = 1 + static_cast<int>(rng() % 2);
      ClassicalPoly f = bjq::testgen::random_poly(rng, dof, 6, 4);
      for (const auto& [first, second] : bjq::heisenberg_covariance_residual(f, rule)) {
        CHECK(first.is_zero());
        CHECK(second.is_zero());
      }
    }
  }
}

TEST_CASE("the symmetric rule factorizes over degrees of freedom") {
  // q1^2 p1^2 * q2 p2 quantizes to the product of the single dof answers.
  ClassicalPoly f = ClassicalPoly::monomial(2, {2, 1, 2, 1}, HBarPolynomial(1));
  ClassicalPoly f1 = ClassicalPoly::monomial(2, {2, 0, 2, 0}, HBarPolynomial(1));
  ClassicalPoly f2 = ClassicalPoly::monomial(2, {0, 1, 0, 1}, HBarPolynomial(1));
  CHECK(bjq::quantize(f, OrderingRule::Weyl) ==
        bjq::quantize(f1, OrderingRule::Weyl) * bjq::quantize(f2, OrderingRule::Weyl));
}

TEST_CASE("the equal weight rule shares the split across degrees of freedom") {
  // Hand reduction of the split of q1 q2 p1 p2 with one shared split point:
  //   1/3 ph1 ph2 qh1 qh2 + 1/6 qh1 ph1 ph2 qh2 + 1/6 qh2 ph1 ph2 qh1
  //     + 1/3 qh1 qh2 ph1 ph2
  //   = qh1 qh2 ph1 ph2 - (i hbar/2)(qh1 ph1 + qh2 ph2) - hbar^2/3.
  ClassicalPoly f = ClassicalPoly::monomial(2, {1, 1, 1, 1}, HBarPolynomial(1));
  OperatorPoly bj = bjq::quantize(f, OrderingRule::BornJordan);
  OperatorPoly expected(2);
  expected.add_term({1, 1, 1, 1}, HBarPolynomial(1));
  HBarPolynomial half_i =
      HBarPolynomial::term(1, GaussianRational(mpq_class(0), mpq_class(-1, 2)));
  expected.add_term({1, 0, 1, 0}, half_i);
  expected.add_term({0, 1, 0, 1}, half_i);
  expected.add_term({0, 0, 0, 0},
                    HBarPolynomial::term(2, GaussianRational(mpq_class(-1, 3))));
  CHECK(bj == expected);

  // The per-dof product lands at -hbar^2/4 instead; the gap is a scalar.
  ClassicalPoly f1 = ClassicalPoly::monomial(2, {1, 0, 1, 0}, HBarPolynomial(1));
  ClassicalPoly f2 = ClassicalPoly::monomial(2, {0, 1, 0, 1}, HBarPolynomial(1));
  OperatorPoly product = bjq::quantize(f1, OrderingRule::BornJordan) *
                         bjq::quantize(f2, OrderingRule::BornJordan);
  OperatorPoly gap = bj - product;
  CHECK(gap.is_scalar());
  CHECK(gap == OperatorPoly::constant(
                   2, HBarPolynomial::term(2, GaussianRational(mpq_class(-1, 12)))));

  // The distinction is what keeps the split rule exact with cross terms:
  // the per-dof product leaves a residual of -hbar^2/3 on this quadruple.
  ClassicalPoly zero(2);
  ClassicalPoly q12q2 = ClassicalPoly::monomial(2, {2, 1, 0, 0}, HBarPolynomial(1));
  ClassicalPoly p12p2 = ClassicalPoly::monomial(2, {0, 0, 2, 1}, HBarPolynomial(1));
  CHECK(bjq::strengthened_rule_residual(q12q2, zero, zero, p12p2,
                                        OrderingRule::BornJordan)
            .is_zero());
}

namespace {

// Independent route: split on the momentum side instead,
//   sum over j <= beta of prod_i C(beta_i, j_i) |j|!(|beta|-|j|)!/(|beta|+1)!
//                         * ph^j qh^alpha ph^(beta-j).
OperatorPoly bj_by_p_split(const ClassicalPoly& f) {
  const int n = f.dof();
  OperatorPoly result(n);
  for (const auto& [e, c] : f.terms()) {
    int total_p = 0;
    for (int i = 0; i < n; ++i) total_p += e[n + i];
    bjq::Exponents j(n, 0);
    OperatorPoly sum(n);
    for (;;) {
      int jp = 0;
      mpz_class comb = 1;
      for (int i = 0; i < n; ++i) {
        jp += j[i];
        comb *= bjq::binomial(e[n + i], j[i]);
      }
      mpq_class w(comb * bjq::factorial(jp) * bjq::factorial(total_p - jp),
                  bjq::factorial(total_p + 1));
      w.canonicalize();
      bjq::Exponents pj(2 * n, 0), qa(2 * n, 0), rest(2 * n, 0);
      for (int i = 0; i < n; ++i) {
        pj[n + i] = j[i];
        qa[i] = e[i];
        rest[n + i] = e[n + i] - j[i];
      }
      sum += OperatorPoly::monomial(n, pj, HBarPolynomial(GaussianRational(w))) *
             OperatorPoly::monomial(n, qa, HBarPolynomial(1)) *
             OperatorPoly::monomial(n, rest, HBarPolynomial(1));
      int i = 0;
      while (i < n && j[i] == e[n + i]) j[i++] = 0;
      if (i == n) break;
      ++j[i];
    }
    result += c * sum;
  }
  return result;
}

}  // namespace

TEST_CASE("q side and p side splits agree with two degrees of freedom") {
  for (int a1 = 0; a1 <= 2; ++a1)
    for (int a2 = 0; a2 <= 2; ++a2)
      for (int b1 = 0; b1 <= 2; ++b1)
        for (int b2 = 0; b2 <= 2; ++b2) {
          ClassicalPoly f =
              ClassicalPoly::monomial(2, {a1, a2, b1, b2}, HBarPolynomial(1));
          CHECK(bjq::quantize(f, OrderingRule::BornJordan) == bj_by_p_split(f));
        }
}
