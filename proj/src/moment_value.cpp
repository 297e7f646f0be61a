#include "oscpoly/moment_value.hpp"

#include <sstream>
#include <stdexcept>

namespace oscpoly {

MomentValue MomentValue::operator-() const {
  MomentValue r;
  r.one_ = -one_;
  r.sqrt_pi_ = -sqrt_pi_;
  r.gamma_gh_ = -gamma_gh_;
  return r;
}

MomentValue& MomentValue::operator+=(const MomentValue& o) {
  one_ += o.one_;
  sqrt_pi_ += o.sqrt_pi_;
  gamma_gh_ += o.gamma_gh_;
  return *this;
}

MomentValue& MomentValue::operator-=(const MomentValue& o) {
  one_ -= o.one_;
  sqrt_pi_ -= o.sqrt_pi_;
  gamma_gh_ -= o.gamma_gh_;
  return *this;
}

MomentValue MomentValue::scaled(const GScalar& s) const {
  MomentValue r;
  r.one_ = one_ * s;
  r.sqrt_pi_ = sqrt_pi_ * s;
  r.gamma_gh_ = gamma_gh_ * s;
  return r;
}

MomentValue operator*(const MomentValue& a, const MomentValue& b) {
  if (a.is_scalar()) return b.scaled(a.one_);
  if (b.is_scalar()) return a.scaled(b.one_);
  throw std::domain_error("MomentValue: product of two non-scalar unit combinations");
}

std::string MomentValue::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  auto emit = [&](const GScalar& c, const char* unit) {
    if (c.is_zero()) return;
    std::size_t terms = 0;
    for (const auto& r : c.coeffs()) terms += r.is_zero() ? 0 : 1;
    std::string body = c.str();
    bool negated = false;
    if (terms > 1) {
      body = "(" + body + ")";
    } else if (body[0] == '-') {
      negated = true;
      body = body.substr(1);
    }
    if (first) {
      if (negated) out << "-";
      first = false;
    } else {
      out << (negated ? " - " : " + ");
    }
    if (unit[0] == '\0') {
      out << body;
    } else if (body == "1") {
      out << unit;
    } else {
      out << body << "*" << unit;
    }
  };
  emit(one_, "");
  emit(sqrt_pi_, "sqrt(pi)");
  emit(gamma_gh_, "Gamma(g+1/2)");
  return out.str();
}

}  // namespace oscpoly
