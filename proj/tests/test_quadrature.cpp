#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oscpoly/classical.hpp"
#include "oscpoly/moments.hpp"
#include "oscpoly/quadrature.hpp"

using namespace oscpoly;

namespace {
// iterated multiply keeps (+x, -x) node pairs exactly mirrored, which
// std::pow does not guarantee
double ipow(double x, int d) {
  double acc = 1.0;
  for (int i = 0; i < d; ++i) acc *= x;
  return acc;
}
}  // namespace

TEST_CASE("small rules match closed forms") {
  const QuadRule h1 = build_rule(QuadRule::Kind::GaussHermite, 1);
  CHECK(h1.nodes.size() == 1);
  CHECK(std::abs(h1.nodes[0]) < 1e-15);
  CHECK(h1.weights[0] == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-14));

  const QuadRule h2 = build_rule(QuadRule::Kind::GaussHermite, 2);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(h2.nodes[0] + inv_sqrt2) < 1e-13);
  CHECK(std::abs(h2.nodes[1] - inv_sqrt2) < 1e-13);
  CHECK(std::abs(h2.weights[0] - std::sqrt(M_PI) / 2) < 1e-13);
  CHECK(std::abs(h2.weights[1] - std::sqrt(M_PI) / 2) < 1e-13);

  const QuadRule l1 = build_rule(QuadRule::Kind::GaussLaguerre, 1, 0.0);
  CHECK(std::abs(l1.nodes[0] - 1.0) < 1e-14);
  CHECK(std::abs(l1.weights[0] - 1.0) < 1e-14);
}

TEST_CASE("rule structure invariants") {
  for (int m : {1, 2, 5, 12, 24, 64}) {
    for (double alpha : {-0.5, 0.0, 1.0, 1.25}) {
      const QuadRule rule = build_rule(QuadRule::Kind::GaussLaguerre, m, alpha);
      REQUIRE(rule.nodes.size() == static_cast<std::size_t>(m));
      REQUIRE(rule.weights.size() == static_cast<std::size_t>(m));
      for (int i = 0; i < m; ++i) {
        CHECK(rule.weights[i] > 0.0);
        CHECK(rule.nodes[i] > 0.0);
        if (i) CHECK(rule.nodes[i] > rule.nodes[i - 1]);
      }
      // residual of the defining polynomial at each node
      for (int i = 0; i < m; ++i) {
        const double p = laguerre_value(m, alpha, rule.nodes[i]);
        const double dp = -laguerre_value(m - 1, alpha + 1.0, rule.nodes[i]);
        const double scale = std::abs(dp) * (1.0 + std::abs(rule.nodes[i]));
        CHECK(std::abs(p) < 1e-13 * std::max(scale, 1.0));
      }
    }
    const QuadRule rule = build_rule(QuadRule::Kind::GaussHermite, m);
    for (int i = 0; i < m; ++i) {
      CHECK(rule.weights[i] > 0.0);
      if (i) CHECK(rule.nodes[i] > rule.nodes[i - 1]);
      const double p = hermite_value(m, rule.nodes[i]);
      const double dp = 2.0 * m * hermite_value(m - 1, rule.nodes[i]);
      const double scale = std::abs(dp) * (1.0 + std::abs(rule.nodes[i]));
      CHECK(std::abs(p) < 1e-13 * std::max(scale, 1.0));
    }
  }
  CHECK_THROWS_AS(build_rule(QuadRule::Kind::GaussHermite, 0), std::invalid_argument);
  CHECK_THROWS_AS(build_rule(QuadRule::Kind::GaussLaguerre, 3, -1.0),
                  std::invalid_argument);
}

TEST_CASE("exactness order 2m-1") {
  for (int m = 1; m <= 12; ++m) {
    const QuadRule hermite_rule = build_rule(QuadRule::Kind::GaussHermite, m);
    for (int d = 0; d <= 2 * m - 1; ++d) {
      // odd moments vanish by cancellation, so measure the error against the
      // unsigned term magnitude
      double numeric = 0.0, scale = 1.0;
      for (int i = 0; i < m; ++i) {
        const double term = hermite_rule.weights[i] * ipow(hermite_rule.nodes[i], d);
        numeric += term;
        scale += std::abs(term);
      }
      const double exact = moment_value_eval(
          moment(WeightTag::GaussFullline, static_cast<unsigned>(d)), Rational(0));
      CHECK(std::abs(numeric - exact) < 1e-11 * std::max(scale, std::abs(exact)));
    }
    for (double alpha : {-0.5, 1.0}) {
      const QuadRule laguerre_rule =
          build_rule(QuadRule::Kind::GaussLaguerre, m, alpha);
      for (int d = 0; d <= 2 * m - 1; ++d) {
        double numeric = 0.0;
        for (int i = 0; i < m; ++i) {
          numeric += laguerre_rule.weights[i] * ipow(laguerre_rule.nodes[i], d);
        }
        const double exact = gamma_real(alpha + d + 1.0);
        CHECK(std::abs(numeric - exact) < 1e-11 * std::abs(exact));
      }
    }
  }
}

TEST_CASE("gamma at half integers and general argument") {
  CHECK(gamma_real(0.5) == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-15));
  CHECK(gamma_real(1.0) == 1.0);
  CHECK(gamma_real(2.0) == 1.0);
  CHECK(gamma_real(2.5) == doctest::Approx(1.5 * 0.5 * std::sqrt(M_PI)).epsilon(1e-14));
  CHECK(gamma_real(6.0) == doctest::Approx(120.0).epsilon(1e-14));
  // general real argument falls back to tgamma
  CHECK(gamma_real(2.25) == doctest::Approx(std::tgamma(2.25)).epsilon(1e-13));
  // internal consistency with tgamma at half integers
  for (int k = 1; k <= 40; ++k) {
    const double x = 0.5 * k;
    CHECK(gamma_real(x) == doctest::Approx(std::tgamma(x)).epsilon(1e-12));
  }
}

TEST_CASE("numeric inner products match exact values") {
  const Rational g32(3, 2);
  const QuadRule rule = build_rule(QuadRule::Kind::GaussLaguerre, 12, 1.0);
  // <1,1> under x^3 e^{-x^2} = (1/2) Gamma(2) = 1/2
  CHECK(numeric_inner_product(XPoly(1), XPoly(1), g32, rule) ==
        doctest::Approx(0.5).epsilon(1e-12));

  const QuadRule hrule = build_rule(QuadRule::Kind::GaussHermite, 12);
  const XPoly h0(1);
  const XPoly h2 = hermite(2);
  CHECK(std::abs(numeric_inner_product(h0, h2, Rational(0), hrule)) < 1e-12);

  // <L_1, L_1> at g=3/2: ((g+1/2)/2) Gamma(g+1/2) = 1 * Gamma(2) = 1
  const XPoly l1 = laguerre_radial(1);
  CHECK(numeric_inner_product(l1, l1, g32, rule) ==
        doctest::Approx(1.0).epsilon(1e-11));
}

TEST_CASE("numeric inner product preconditions") {
  const QuadRule tiny = build_rule(QuadRule::Kind::GaussHermite, 1);
  const XPoly h2 = hermite(2);
  CHECK_THROWS_AS(numeric_inner_product(h2, h2, Rational(0), tiny),
                  std::invalid_argument);

  const QuadRule lrule = build_rule(QuadRule::Kind::GaussLaguerre, 8, 1.0);
  CHECK_THROWS_AS(
      numeric_inner_product(XPoly::x(), XPoly(1), Rational(3, 2), lrule),
      std::domain_error);
  // alpha mismatch: rule has alpha=1, g=5/2 needs alpha=2
  CHECK_THROWS_AS(
      numeric_inner_product(XPoly(1), XPoly(1), Rational(5, 2), lrule),
      std::invalid_argument);
}

TEST_CASE("cross validation of radial Gram entries at numeric g") {
  const Rational gval(7, 4);
  const QuadRule rule =
      build_rule(QuadRule::Kind::GaussLaguerre, 12, gval.to_double() - 0.5);
  for (unsigned m = 0; m <= 4; ++m) {
    for (unsigned n = m; n <= 4; ++n) {
      const XPoly pm = laguerre_radial(m), pn = laguerre_radial(n);
      const double numeric = numeric_inner_product(pm, pn, gval, rule);
      const double exact =
          moment_value_eval(inner_product(pm, pn, WeightTag::WeightedG), gval);
      if (m == n) {
        CHECK(std::abs(numeric - exact) < 1e-9 * std::abs(exact));
      } else {
        const double scale = std::sqrt(
            moment_value_eval(gram_radial_expected(m, m), gval) *
            moment_value_eval(gram_radial_expected(n, n), gval));
        CHECK(std::abs(numeric - exact) < 1e-9 * scale);
      }
    }
  }
}
