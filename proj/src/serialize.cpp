#include "oscpoly/serialize.hpp"

#include <stdexcept>

namespace oscpoly {

using nlohmann::json;

json to_json(const Rational& r) { return r.str(); }

json to_json(const GScalar& s) {
  json arr = json::array();
  if (s.is_zero()) {
    arr.push_back("0");
    return arr;
  }
  for (const auto& c : s.coeffs()) arr.push_back(c.str());
  return arr;
}

json to_json(const XPoly& p) {
  json arr = json::array();
  for (const auto& c : p.coeffs()) arr.push_back(to_json(c));
  return arr;
}

json to_json(const MomentValue& v) {
  return json{{"one", to_json(v.one())},
              {"sqrt_pi", to_json(v.sqrt_pi())},
              {"gamma_g_half", to_json(v.gamma_g_half())}};
}

Rational rational_from_json(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw std::invalid_argument("Rational: expected \"p/q\" string, got " + j.dump());
}

GScalar gscalar_from_json(const json& j) {
  if (!j.is_array()) {
    throw std::invalid_argument("GScalar: expected array, got " + j.dump());
  }
  std::vector<Rational> c;
  c.reserve(j.size());
  for (const auto& e : j) c.push_back(rational_from_json(e));
  return GScalar::from_coeffs(std::move(c));
}

XPoly xpoly_from_json(const json& j) {
  if (!j.is_array()) {
    throw std::invalid_argument("XPoly: expected array, got " + j.dump());
  }
  std::vector<GScalar> c;
  c.reserve(j.size());
  for (const auto& e : j) c.push_back(gscalar_from_json(e));
  return XPoly::from_coeffs(std::move(c));
}

MomentValue moment_value_from_json(const json& j) {
  if (!j.is_object()) {
    throw std::invalid_argument("MomentValue: expected object, got " + j.dump());
  }
  return MomentValue::of_one(gscalar_from_json(j.at("one"))) +
         MomentValue::of_sqrt_pi(gscalar_from_json(j.at("sqrt_pi"))) +
         MomentValue::of_gamma_g_half(gscalar_from_json(j.at("gamma_g_half")));
}

std::string moment_value_csv_cell(const MomentValue& v) {
  return v.one().str() + ";" + v.sqrt_pi().str() + ";" + v.gamma_g_half().str();
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += "\"\"";
    else out += ch;
  }
  out += "\"";
  return out;
}

}  // namespace oscpoly
