#pragma once

#include <string>

#include <json.hpp>

#include "oscpoly/moment_value.hpp"
#include "oscpoly/xpoly.hpp"

namespace oscpoly {

// JSON schemas:
//   Rational     "p/q" or "p"            (bare JSON integers accepted on input)
//   GScalar      ["1/2","1"]             index = g-power; zero -> ["0"]
//   XPoly        [["-2"],["0"],["4"]]    index = x-power; zero -> []
//   MomentValue  {"one": G, "sqrt_pi": G, "gamma_g_half": G}

nlohmann::json to_json(const Rational& r);
nlohmann::json to_json(const GScalar& s);
nlohmann::json to_json(const XPoly& p);
nlohmann::json to_json(const MomentValue& v);

Rational rational_from_json(const nlohmann::json& j);
GScalar gscalar_from_json(const nlohmann::json& j);
XPoly xpoly_from_json(const nlohmann::json& j);
MomentValue moment_value_from_json(const nlohmann::json& j);

/// MomentValue CSV cell: the three components as GScalar strings joined by
/// ";", e.g. "0;1/2*sqrt(pi);0" -> "0;1/2;0" uses plain component renderings.
std::string moment_value_csv_cell(const MomentValue& v);

/// RFC 4180 quoting: wraps in quotes when the field contains , " or newline.
std::string csv_escape(const std::string& field);

}  // namespace oscpoly
