#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oscpoly/classical.hpp"
#include "oscpoly/oscillator.hpp"
#include "testutil.hpp"

using namespace oscpoly;
using testutil::rand_xpoly;

namespace {
const GScalar g = GScalar::g();
}  // namespace

TEST_CASE("ladder actions on Hermite polynomials") {
  const auto h = hermite_sequence(8);

  CHECK(op_lower(h[2]) == h[1].scaled(Rational(4)));  // 8x
  CHECK(op_lower(XPoly(1)).is_zero());
  CHECK(op_lower(h[4]) == h[3].scaled(Rational(8)));

  CHECK(op_raise(h[0]) == h[1]);
  CHECK(op_raise(h[1]) == h[2]);
  CHECK(op_raise(h[2]) == h[3]);

  CHECK(op_number(XPoly(1)).is_zero());
  CHECK(op_number(h[2]) == h[2].scaled(Rational(2)));
  for (unsigned n = 0; n <= 8; ++n) {
    CHECK(op_lower(h[n]) ==
          (n == 0 ? XPoly() : h[n - 1].scaled(Rational(2L * n))));
    CHECK(op_raise(h[n]) == hermite(n + 1));
    CHECK(op_number(h[n]) == h[n].scaled(Rational(static_cast<long>(n))));
  }
}

TEST_CASE("number operator on monomials") {
  for (unsigned k = 2; k <= 9; ++k) {
    const XPoly expected =
        XPoly::monomial(k, GScalar(Rational(static_cast<long>(k)))) -
        XPoly::monomial(k - 2, GScalar(Rational(static_cast<long>(k * (k - 1)), 2)));
    CHECK(op_number(XPoly::monomial(k)) == expected);
  }
}

TEST_CASE("number operator factors through the ladders") {
  std::mt19937 rng(29);
  for (int i = 0; i < 40; ++i) {
    const XPoly p = rand_xpoly(rng);
    CHECK(op_number(p) == op_raise(op_lower(p)).scaled(Rational(1, 2)));
  }
}

TEST_CASE("solve_shifted_number examples") {
  CHECK(solve_shifted_number(XPoly(1), 1) == XPoly(1));
  // (N+1) q = x^2  =>  q = (x^2 + 1)/3
  CHECK(solve_shifted_number(XPoly::monomial(2), 1) ==
        XPoly::from_coeffs({GScalar(Rational(1, 3)), GScalar(),
                            GScalar(Rational(1, 3))}));
  const XPoly h2 = hermite(2);
  CHECK(solve_shifted_number(h2, 1) == h2.scaled(Rational(1, 3)));
  CHECK_THROWS_AS(solve_shifted_number(XPoly(1), 0), std::invalid_argument);
}

TEST_CASE("solve_shifted_number inverts N+s and matches the Hermite route") {
  std::mt19937 rng(31);
  for (int i = 0; i < 40; ++i) {
    const XPoly p = rand_xpoly(rng);
    for (unsigned s = 1; s <= 2; ++s) {
      const XPoly q = solve_shifted_number(p, s);
      CHECK(op_number(q) + q.scaled(Rational(static_cast<long>(s))) == p);
      CHECK(solve_shifted_number_hermite_basis(p, s) == q);
    }
  }
}

TEST_CASE("hermite_expand reproduces the polynomial") {
  std::mt19937 rng(37);
  for (int i = 0; i < 20; ++i) {
    const XPoly p = rand_xpoly(rng);
    const auto coeffs = hermite_expand(p);
    XPoly back;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      back += hermite(static_cast<unsigned>(k)).scaled(coeffs[k]);
    }
    CHECK(back == p);
  }
}

TEST_CASE("b operator actions") {
  const auto h = hermite_sequence(8);
  CHECK(op_b(h[0]).is_zero());
  CHECK(op_b(h[1]).is_zero());
  CHECK(op_b(h[2]) == h[0].scaled(Rational(4)));
  CHECK(op_b(h[4]) == h[2].scaled(Rational(8)));
  for (unsigned n = 1; n <= 4; ++n) {
    CHECK(op_b(h[2 * n]) == h[2 * n - 2].scaled(Rational(4L * n)));
  }
}

TEST_CASE("b powers") {
  const auto h = hermite_sequence(8);
  CHECK(op_b_power(h[4].scaled(Rational(1, 16)), 2) == h[0].scaled(Rational(2)));
  CHECK(op_b_power(h[4], 3).is_zero());
  std::mt19937 rng(41);
  const XPoly p = rand_xpoly(rng);
  CHECK(op_b_power(p, 0) == p);
}

TEST_CASE("b degree drop") {
  std::mt19937 rng(43);
  for (int i = 0; i < 30; ++i) {
    const XPoly p = rand_xpoly(rng);
    const XPoly bp = op_b(p);
    if (p.degree().value_or(0) < 2) {
      CHECK(bp.is_zero());
    } else if (!bp.is_zero()) {
      CHECK(*bp.degree() == *p.degree() - 2);
    }
  }
}

TEST_CASE("hypergeometric operator series") {
  const auto h = hermite_sequence(4);
  CHECK(op_hyp1f0(h[0], g) == XPoly(1));

  // H_2/4 - g*b(H_2)/4 = x^2 - 1/2 - g
  const GScalar half(Rational(1, 2));
  CHECK(op_hyp1f0(h[2].scaled(Rational(1, 4)), g) ==
        XPoly::from_coeffs({-half - g, GScalar(), GScalar(1)}));

  // must equal 2 * L_2^(g-1/2)(x^2)
  CHECK(op_hyp1f0(h[4].scaled(Rational(1, 16)), g) ==
        laguerre_radial(2).scaled(Rational(2)));
}

TEST_CASE("series on odd-degree input is well defined") {
  // the classical statements pair b with even inputs and b' with odd ones;
  // the mixed combination still terminates and preserves the degree
  const XPoly h3 = hermite(3);
  const XPoly out = op_hyp1f0(h3, g);
  CHECK(out.degree() == 3);
  CHECK(out.coeff(3) == h3.coeff(3));
}

TEST_CASE("bprime odd-sector action") {
  const auto h = hermite_sequence(9);
  CHECK(op_bprime(h[1]).is_zero());
  for (unsigned n = 1; n <= 4; ++n) {
    // bprime (H_{2n+1}/2^{2n+1}) = n H_{2n-1}/2^{2n-1}
    const Rational lhs_scale = Rational(1) / Rational::pow2(2 * n + 1);
    const Rational rhs_scale =
        Rational(static_cast<long>(n)) / Rational::pow2(2 * n - 1);
    CHECK(op_bprime(h[2 * n + 1].scaled(lhs_scale)) ==
          h[2 * n - 1].scaled(rhs_scale));
  }
}
