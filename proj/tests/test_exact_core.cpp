#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oscpoly/gscalar.hpp"
#include "oscpoly/moment_value.hpp"
#include "oscpoly/rational.hpp"
#include "oscpoly/xpoly.hpp"
#include "testutil.hpp"

using namespace oscpoly;
using testutil::rand_gscalar;
using testutil::rand_rational;
using testutil::rand_xpoly;

namespace {
const GScalar g = GScalar::g();
const GScalar half(Rational(1, 2));
}  // namespace

TEST_CASE("Rational canonical form and arithmetic") {
  CHECK(Rational(2, 6) == Rational(1, 3));
  CHECK(Rational(-4, -6) == Rational(2, 3));
  CHECK(Rational(3, -6).str() == "-1/2");
  CHECK(Rational(2, 6).denominator() == 3);
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) * Rational(3, 5) == Rational(1, 5));
  CHECK(Rational(7).str() == "7");
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("Rational parse round trip") {
  CHECK(Rational::parse("3/4") == Rational(3, 4));
  CHECK(Rational::parse("-6/8") == Rational(-3, 4));
  CHECK(Rational::parse("12") == Rational(12));
  CHECK(Rational::parse("-12345678901234567890/2").str() ==
        "-6172839450617283945");
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);

  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    const Rational r = rand_rational(rng);
    CHECK(Rational::parse(r.str()) == r);
  }
}

TEST_CASE("Rational factorial and binomial") {
  CHECK(Rational::factorial(0) == Rational(1));
  CHECK(Rational::factorial(5) == Rational(120));
  CHECK(Rational::factorial(20).str() == "2432902008176640000");
  CHECK(Rational::binomial(6, 2) == Rational(15));
  CHECK(Rational::pow2(10) == Rational(1024));
}

TEST_CASE("GScalar pochhammer") {
  CHECK(pochhammer(g, 0) == GScalar(Rational(1)));
  // g*(g+1) = g^2 + g
  CHECK(pochhammer(g, 2) == GScalar::from_coeffs({0, 1, 1}));
  // (g+1/2)(g+3/2) = g^2 + 2g + 3/4
  CHECK(pochhammer(g + half, 2) ==
        GScalar::from_coeffs({Rational(3, 4), Rational(2), Rational(1)}));
}

TEST_CASE("GScalar canonical form and eval") {
  CHECK(GScalar::from_coeffs({0, 0, 0}).is_zero());
  CHECK(GScalar::from_coeffs({1, 2, 0}).degree() == 1);
  CHECK_FALSE(GScalar().degree().has_value());

  const GScalar s = pochhammer(g, 2);  // g^2 + g
  CHECK(s.eval(Rational(0)) == Rational(0));
  CHECK(s.eval(Rational(3, 2)) == Rational(15, 4));
}

TEST_CASE("GScalar ring axioms on random elements") {
  std::mt19937 rng(11);
  for (int i = 0; i < 100; ++i) {
    const GScalar a = rand_gscalar(rng), b = rand_gscalar(rng), c = rand_gscalar(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    CHECK(a + (-a) == GScalar());
  }
}

TEST_CASE("XPoly derivative") {
  CHECK(XPoly(1).derivative().is_zero());
  const XPoly h2 = XPoly::from_coeffs({GScalar(-2), GScalar(0), GScalar(4)});
  CHECK(h2.derivative() == XPoly::monomial(1, GScalar(Rational(8))));
  const XPoly h3 = XPoly::from_coeffs({GScalar(0), GScalar(-12), GScalar(0), GScalar(8)});
  CHECK(h3.derivative() == XPoly::from_coeffs({GScalar(-12), GScalar(0), GScalar(24)}));
}

TEST_CASE("XPoly divide_by_x") {
  CHECK(XPoly::monomial(1, GScalar(Rational(2))).divide_by_x() == XPoly(2));
  const XPoly h3 = XPoly::from_coeffs({GScalar(0), GScalar(-12), GScalar(0), GScalar(8)});
  CHECK(h3.divide_by_x() ==
        XPoly::from_coeffs({GScalar(-12), GScalar(0), GScalar(8)}));
  CHECK_THROWS_WITH_AS(XPoly(1).divide_by_x(), "not divisible by x",
                       std::domain_error);
  CHECK(XPoly().divide_by_x().is_zero());
}

TEST_CASE("XPoly eta substitution") {
  CHECK(EtaPoly(1).substitute_eta_to_x2() == XPoly(1));
  // g + 1/2 - eta -> g + 1/2 - x^2
  const EtaPoly l1 = EtaPoly::from_coeffs({g + half, GScalar(-1)});
  CHECK(l1.substitute_eta_to_x2() ==
        XPoly::from_coeffs({g + half, GScalar(), GScalar(-1)}));
  CHECK(EtaPoly::monomial(2).substitute_eta_to_x2() == XPoly::monomial(4));
}

TEST_CASE("XPoly evaluation") {
  const XPoly h2 = XPoly::from_coeffs({GScalar(-2), GScalar(0), GScalar(4)});
  CHECK(h2.eval(Rational(17, 3), Rational(1)) == Rational(2));
  const XPoly p = XPoly::monomial(2, pochhammer(g, 2));
  CHECK(p.eval(Rational(3, 2), Rational(2)) == Rational(15));
  CHECK(p.specialize_g(Rational(3, 2)) ==
        XPoly::monomial(2, GScalar(Rational(15, 4))));
}

TEST_CASE("XPoly degree bookkeeping and parity") {
  CHECK_FALSE(XPoly().degree().has_value());
  CHECK(XPoly(5).degree() == 0);
  CHECK(XPoly::monomial(3).degree() == 3);
  CHECK(XPoly::monomial(4).is_even());
  CHECK(XPoly::monomial(3).is_odd());
  CHECK(XPoly::monomial(2, g).g_degree() == 1);
  CHECK(XPoly(3).g_degree() == 0);
}

TEST_CASE("XPoly ring axioms, Leibniz rule, exact division") {
  std::mt19937 rng(13);
  for (int i = 0; i < 60; ++i) {
    const XPoly p = rand_xpoly(rng), q = rand_xpoly(rng), r = rand_xpoly(rng);
    CHECK(p + q == q + p);
    CHECK(p * q == q * p);
    CHECK((p + q) + r == p + (q + r));
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK((p - p).is_zero());
    CHECK((p * q).derivative() == p.derivative() * q + p * q.derivative());
    CHECK((XPoly::x() * p).divide_by_x() == p);
  }
}

TEST_CASE("eta substitution is a ring homomorphism") {
  std::mt19937 rng(17);
  for (int i = 0; i < 60; ++i) {
    const EtaPoly p = rand_xpoly(rng, 4), q = rand_xpoly(rng, 4);
    CHECK((p + q).substitute_eta_to_x2() ==
          p.substitute_eta_to_x2() + q.substitute_eta_to_x2());
    CHECK((p * q).substitute_eta_to_x2() ==
          p.substitute_eta_to_x2() * q.substitute_eta_to_x2());
  }
}

TEST_CASE("MomentValue componentwise algebra") {
  const MomentValue a = MomentValue::of_sqrt_pi(GScalar(Rational(1, 2)));
  const MomentValue b = MomentValue::of_gamma_g_half(g);
  const MomentValue c = MomentValue::of_one(GScalar(Rational(3)));

  CHECK((a + b).sqrt_pi() == GScalar(Rational(1, 2)));
  CHECK((a + b).gamma_g_half() == g);
  CHECK(a + b == b + a);
  CHECK((a + b) + c == a + (b + c));
  CHECK((a - a).is_zero());

  CHECK(c.is_scalar());
  CHECK_FALSE((a + c).is_scalar());
  CHECK(c * a == a.scaled(GScalar(Rational(3))));
  CHECK(a * c == c * a);
  CHECK_THROWS_AS(a * b, std::domain_error);
  CHECK_THROWS_AS((a + c) * b, std::domain_error);
}

TEST_CASE("MomentValue scaling distributes") {
  std::mt19937 rng(19);
  for (int i = 0; i < 50; ++i) {
    const GScalar s = rand_gscalar(rng);
    const MomentValue v = MomentValue::of_one(rand_gscalar(rng)) +
                          MomentValue::of_sqrt_pi(rand_gscalar(rng)) +
                          MomentValue::of_gamma_g_half(rand_gscalar(rng));
    const MomentValue w = MomentValue::of_sqrt_pi(rand_gscalar(rng));
    CHECK((v + w).scaled(s) == v.scaled(s) + w.scaled(s));
  }
}
