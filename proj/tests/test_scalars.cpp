#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bjq/scalars.hpp"

using bjq::GaussianRational;
using bjq::HBarPolynomial;

namespace {

GaussianRational random_gaussian(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  mpq_class re(num(rng), den(rng));
  mpq_class im(num(rng), den(rng));
  re.canonicalize();
  im.canonicalize();
  return {re, im};
}

}  // namespace

TEST_CASE("binomial and factorial") {
  CHECK(bjq::binomial(0, 0) == 1);
  CHECK(bjq::binomial(5, 2) == 10);
  CHECK(bjq::binomial(10, 10) == 1);
  CHECK(bjq::binomial(4, 7) == 0);
  CHECK(bjq::factorial(0) == 1);
  CHECK(bjq::factorial(6) == 720);
  // Pascal's rule on a band of values.
  for (unsigned n = 1; n <= 20; ++n)
    for (unsigned k = 1; k <= n; ++k)
      CHECK(bjq::binomial(n, k) == bjq::binomial(n - 1, k - 1) + bjq::binomial(n - 1, k));
}

TEST_CASE("gaussian rational basics") {
  GaussianRational zero;
  CHECK(zero.is_zero());
  CHECK(zero.is_real());

  GaussianRational three(3);
  CHECK(three.is_real());
  CHECK_FALSE(three.is_zero());
  CHECK(three.str() == "3");

  GaussianRational i = GaussianRational::imaginary_unit();
  CHECK(i.is_pure_imaginary());
  CHECK((i * i) == GaussianRational(-1));
  CHECK(i.str() == "i");
  CHECK((-i).str() == "-i");

  GaussianRational z(mpq_class(1, 2), mpq_class(3, 4));
  CHECK(z.str() == "1/2+3/4*i");
  CHECK(z.conjugate().str() == "1/2-3/4*i");
  CHECK((z + z.conjugate()).is_real());
  CHECK((z - z.conjugate()).is_pure_imaginary());
}

TEST_CASE("i powers cycle with period four") {
  GaussianRational i = GaussianRational::imaginary_unit();
  GaussianRational acc(1);
  for (unsigned k = 0; k < 12; ++k) {
    CHECK(GaussianRational::i_power(k) == acc);
    CHECK(GaussianRational::minus_i_power(k) == acc.conjugate());
    acc *= i;
  }
}

TEST_CASE("gaussian rational field axioms on random values") {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 200; ++trial) {
    GaussianRational a = random_gaussian(rng);
    GaussianRational b = random_gaussian(rng);
    GaussianRational c = random_gaussian(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + GaussianRational() == a);
    CHECK(a * GaussianRational(1) == a);
    CHECK((a - a).is_zero());
    if (!a.is_zero()) {
      CHECK(a * a.inverse() == GaussianRational(1));
      CHECK(a / a == GaussianRational(1));
    }
    CHECK((a * b).conjugate() == a.conjugate() * b.conjugate());
  }
}

TEST_CASE("inverse of zero throws") {
  CHECK_THROWS_AS(GaussianRational().inverse(), std::domain_error);
}

TEST_CASE("hbar polynomial basics") {
  HBarPolynomial zero;
  CHECK(zero.is_zero());
  CHECK(zero.str() == "0");
  CHECK_THROWS_AS(zero.min_power(), std::domain_error);
  CHECK_THROWS_AS(zero.max_power(), std::domain_error);

  HBarPolynomial one(1);
  CHECK(one.is_constant());
  CHECK(one.str() == "1");

  HBarPolynomial h = HBarPolynomial::hbar();
  CHECK(h.str() == "hbar");
  CHECK((h * h).str() == "hbar^2");
  CHECK(HBarPolynomial::hbar(2).min_power() == 2);
  CHECK(HBarPolynomial::hbar(-1).str() == "hbar^-1");

  HBarPolynomial mix = HBarPolynomial::term(2, GaussianRational(mpq_class(-2, 3)));
  CHECK(mix.str() == "-2/3*hbar^2");

  HBarPolynomial sum = one + HBarPolynomial::term(1, GaussianRational(2) * GaussianRational::imaginary_unit());
  CHECK(sum.str() == "2*i*hbar + 1");
}

TEST_CASE("hbar polynomial ring axioms on random values") {
  std::mt19937_64 rng(777);
  std::uniform_int_distribution<int> power(-2, 3);
  auto random_poly = [&] {
    HBarPolynomial p;
    int terms = static_cast<int>(rng() % 3) + 1;
    for (int t = 0; t < terms; ++t) p.add_term(power(rng), random_gaussian(rng));
    return p;
  };
  for (int trial = 0; trial < 200; ++trial) {
    HBarPolynomial a = random_poly();
    HBarPolynomial b = random_poly();
    HBarPolynomial c = random_poly();
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a - a).is_zero());
    CHECK(a.conjugate().conjugate() == a);
    CHECK((a * b).conjugate() == a.conjugate() * b.conjugate());
    // Dividing by hbar undoes multiplying by hbar.
    CHECK(bjq::hbar_divide(a * HBarPolynomial::hbar()) == a);
    CHECK(a.shifted(2).shifted(-2) == a);
  }
}

TEST_CASE("hbar polynomial structure queries") {
  HBarPolynomial p = HBarPolynomial::term(0, GaussianRational(5)) +
                     HBarPolynomial::term(2, GaussianRational(mpq_class(1, 3)));
  CHECK(p.min_power() == 0);
  CHECK(p.max_power() == 2);
  CHECK(p.coefficient(0) == GaussianRational(5));
  CHECK(p.coefficient(1).is_zero());
  CHECK(p.coefficient(2) == GaussianRational(mpq_class(1, 3)));
  CHECK(p.at_hbar_zero() == GaussianRational(5));
  CHECK(p.terms().size() == 2);
}

TEST_CASE("hbar polynomial conjugate flips imaginary terms") {
  HBarPolynomial p = HBarPolynomial::term(1, GaussianRational::imaginary_unit());
  CHECK(p.conjugate() == -p);
  HBarPolynomial q = HBarPolynomial::term(2, GaussianRational(7));
  CHECK(q.conjugate() == q);
}

TEST_CASE("string forms match the canonical layout") {
  // Descending powers, compact rational pieces.
  HBarPolynomial p = HBarPolynomial::term(2, GaussianRational(mpq_class(-1, 2))) +
                     HBarPolynomial::term(0, GaussianRational(1)) +
                     HBarPolynomial::term(1, GaussianRational(0, mpq_class(3)));
  CHECK(p.str() == "-1/2*hbar^2 + 3*i*hbar + 1");

  HBarPolynomial mixed = HBarPolynomial::term(1, GaussianRational(mpq_class(1), mpq_class(2)));
  CHECK(mixed.str() == "(1+2*i)*hbar");
}
