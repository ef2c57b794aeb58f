#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"

#include "coderiv/polynomial.hpp"
#include "coderiv/rational.hpp"

using namespace coderiv;

namespace {

Poly t() { return Poly::variable("t"); }
Poly u() { return Poly::variable("u"); }

Poly random_poly(std::mt19937_64 &rng) {
  Poly p;
  int terms = static_cast<int>(rng() % 4);
  for (int i = 0; i < terms; ++i) {
    long num = static_cast<long>(rng() % 11) - 5;
    unsigned et = static_cast<unsigned>(rng() % 3);
    unsigned eu = static_cast<unsigned>(rng() % 3);
    Poly term{Rational(num)};
    for (unsigned k = 0; k < et; ++k) term *= t();
    for (unsigned k = 0; k < eu; ++k) term *= u();
    p += term;
  }
  return p;
}

}  // namespace

TEST_CASE("rational helpers") {
  CHECK(scalar_is_zero(Rational(0)));
  CHECK_FALSE(scalar_is_zero(Rational(3, 7)));

  CHECK(is_rational_square(Rational(0)));
  CHECK(is_rational_square(Rational(4)));
  CHECK(is_rational_square(Rational(9, 16)));
  CHECK_FALSE(is_rational_square(Rational(2)));
  CHECK_FALSE(is_rational_square(Rational(-4)));
  CHECK_FALSE(is_rational_square(Rational(1, 3)));

  CHECK(rational_str(Rational(-5, 2)) == "-5/2");
  CHECK(rational_str(Rational(7)) == "7");
}

TEST_CASE("polynomial ring axioms on random elements") {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 50; ++trial) {
    Poly a = random_poly(rng);
    Poly b = random_poly(rng);
    Poly c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + Poly() == a);
    CHECK(a * Poly(1) == a);
    CHECK((a - a).is_zero());
    CHECK(a * Poly() == Poly());
  }
}

TEST_CASE("polynomial evaluation is a ring homomorphism") {
  std::mt19937_64 rng(777);
  std::map<std::string, Rational> point{{"t", Rational(3, 2)},
                                        {"u", Rational(-2)}};
  for (int trial = 0; trial < 40; ++trial) {
    Poly a = random_poly(rng);
    Poly b = random_poly(rng);
    CHECK((a + b).eval(point) == a.eval(point) + b.eval(point));
    CHECK((a * b).eval(point) == a.eval(point) * b.eval(point));
  }
  Poly p = t() * t() + Poly(2) * u() - Poly(Rational(1, 2));
  CHECK(p.eval(point) == Rational(3, 2) * Rational(3, 2) + Rational(-4) -
                             Rational(1, 2));
}

TEST_CASE("evaluation rejects unassigned variables") {
  Poly p = t() * u();
  std::map<std::string, Rational> partial{{"t", Rational(1)}};
  CHECK_THROWS_AS((void)p.eval(partial), UnassignedVariable);
  try {
    (void)p.eval(partial);
  } catch (const UnassignedVariable &e) {
    CHECK(e.variable == "u");
  }
}

TEST_CASE("polynomial structure queries") {
  Poly p = Poly(2) * t() - u();
  CHECK_FALSE(p.is_constant());
  CHECK(p.variables() == std::set<std::string>{"t", "u"});

  Poly c(Rational(5, 3));
  CHECK(c.is_constant());
  CHECK(c.constant_value() == Rational(5, 3));
  CHECK(Poly().is_constant());
  CHECK(Poly().constant_value() == Rational(0));

  CHECK(scalar_is_zero(Poly()));
  CHECK(scalar_is_zero(t() - t()));
  CHECK_FALSE(scalar_is_zero(t()));
}

TEST_CASE("monomial order is a strict weak order compatible with degree") {
  MonomialOrder less;
  Monomial one;
  Monomial mt = Poly::variable("t").terms().begin()->first;
  Monomial mu = Poly::variable("u").terms().begin()->first;
  Monomial mt2 = mt * mt;
  Monomial mtu = mt * mu;

  CHECK(less(one, mt));
  CHECK(less(mt, mt2));
  CHECK(less(mu, mt));       // lower name wins at equal degree
  CHECK(less(mtu, mt2));     // t^2 > t*u in graded lex
  CHECK_FALSE(less(mt, mt));

  std::vector<Monomial> all{one, mt, mu, mt2, mtu};
  for (const auto &a : all)
    for (const auto &b : all) {
      if (less(a, b)) CHECK_FALSE(less(b, a));
      if (!less(a, b) && !less(b, a)) CHECK(a == b);
    }
}

TEST_CASE("gmp rationals normalize through arithmetic") {
  Rational a(1, 2);
  Rational b(1, 3);
  CHECK(rational_str(a + b) == "5/6");
  CHECK(rational_str(a * b) == "1/6");
  CHECK(rational_str(a - a) == "0");
  Rational big("123456789123456789");
  CHECK(rational_str(big * big) ==
        "15241578780673678515622620750190521");
}
