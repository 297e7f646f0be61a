#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oscpoly/classical.hpp"
#include "oscpoly/serialize.hpp"
#include "oscpoly/verify_report.hpp"
#include "testutil.hpp"

using namespace oscpoly;
using nlohmann::json;
using testutil::rand_gscalar;
using testutil::rand_xpoly;

TEST_CASE("frozen JSON renderings") {
  CHECK(to_json(hermite(2)).dump() == R"([["-2"],["0"],["4"]])");
  CHECK(to_json(hermite(0)).dump() == R"([["1"]])");
  CHECK(to_json(laguerre_radial(1)).dump() == R"([["1/2","1"],["0"],["-1"]])");
  CHECK(to_json(XPoly()).dump() == "[]");
  CHECK(to_json(GScalar()).dump() == R"(["0"])");
  CHECK(to_json(Rational(-3, 4)) == json("-3/4"));

  const MomentValue v = MomentValue::of_gamma_g_half(GScalar(Rational(1, 2)));
  CHECK(to_json(v).dump() ==
        R"({"gamma_g_half":["1/2"],"one":["0"],"sqrt_pi":["0"]})");
}

TEST_CASE("deserialization accepts schema variants") {
  CHECK(rational_from_json(json("5/10")) == Rational(1, 2));
  CHECK(rational_from_json(json(-7)) == Rational(-7));
  CHECK_THROWS_AS(rational_from_json(json(1.5)), std::invalid_argument);
  CHECK(gscalar_from_json(json::array()).is_zero());
  CHECK(gscalar_from_json(json::parse(R"(["0"])")).is_zero());
  CHECK(xpoly_from_json(json::parse(R"([[-2],[0],[4]])")) == hermite(2));
  CHECK_THROWS_AS(xpoly_from_json(json("nope")), std::invalid_argument);
}

TEST_CASE("round trips through the deserializers are lossless") {
  std::mt19937 rng(53);
  for (int i = 0; i < 80; ++i) {
    const XPoly p = rand_xpoly(rng);
    CHECK(xpoly_from_json(json::parse(to_json(p).dump())) == p);
    const MomentValue v = MomentValue::of_one(rand_gscalar(rng)) +
                          MomentValue::of_sqrt_pi(rand_gscalar(rng)) +
                          MomentValue::of_gamma_g_half(rand_gscalar(rng));
    CHECK(moment_value_from_json(json::parse(to_json(v).dump())) == v);
  }
}

TEST_CASE("pretty renderings") {
  CHECK(XPoly().str() == "0");
  CHECK(hermite(2).str() == "4*x^2 - 2");
  CHECK(hermite(3).str() == "8*x^3 - 12*x");
  CHECK(laguerre_radial(1).str() == "-x^2 + (g + 1/2)");
  CHECK(GScalar::g().str() == "g");
  CHECK((GScalar::g() * GScalar(Rational(-2))).str() == "-2*g");
  CHECK(pochhammer(GScalar::g() + GScalar(Rational(1, 2)), 2).str() ==
        "g^2 + 2*g + 3/4");
  CHECK(MomentValue().str() == "0");
  CHECK(MomentValue::of_sqrt_pi(GScalar(Rational(1))).str() == "sqrt(pi)");
  CHECK(MomentValue::of_gamma_g_half(GScalar(Rational(-1, 2))).str() ==
        "-1/2*Gamma(g+1/2)");
}

TEST_CASE("CSV cells") {
  const MomentValue v =
      MomentValue::of_sqrt_pi(GScalar(Rational(1, 2))) +
      MomentValue::of_gamma_g_half(GScalar::g());
  CHECK(moment_value_csv_cell(v) == "0;1/2;g");
  CHECK(csv_escape("plain") == "plain");
  CHECK(csv_escape("a,b") == "\"a,b\"");
  CHECK(csv_escape("say \"hi\"") == "\"say \"\"hi\"\"\"");
}

TEST_CASE("VerifyReport serialization schema") {
  const VerifyReport r = make_report("demo", {1, 2}, hermite(1), hermite(1));
  const json j = r.to_json();
  CHECK(j.at("identity") == "demo");
  CHECK(j.at("indices") == json::array({1, 2}));
  CHECK(j.at("pass") == true);
  CHECK(xpoly_from_json(j.at("expected")) == hermite(1));
  CHECK(xpoly_from_json(j.at("got")) == hermite(1));

  const VerifyReport bad = make_report("demo", {0}, hermite(1), hermite(2));
  CHECK_FALSE(bad.pass);
}
