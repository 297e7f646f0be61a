#include "oscpoly/gscalar.hpp"

#include <algorithm>
#include <sstream>

namespace oscpoly {

GScalar::GScalar(Rational c) {
  if (!c.is_zero()) c_.push_back(std::move(c));
}

GScalar GScalar::g() {
  GScalar s;
  s.c_ = {Rational(0), Rational(1)};
  return s;
}

GScalar GScalar::from_coeffs(std::vector<Rational> c) {
  GScalar s;
  s.c_ = std::move(c);
  s.trim();
  return s;
}

void GScalar::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

GScalar GScalar::operator-() const {
  GScalar r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

GScalar& GScalar::operator+=(const GScalar& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

GScalar& GScalar::operator-=(const GScalar& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

GScalar operator*(const GScalar& a, const GScalar& b) {
  if (a.is_zero() || b.is_zero()) return GScalar();
  std::vector<Rational> prod(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      prod[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return GScalar::from_coeffs(std::move(prod));
}

GScalar& GScalar::operator*=(const GScalar& o) { return *this = *this * o; }

Rational GScalar::eval(const Rational& gval) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * gval + *it;
  return acc;
}

std::string GScalar::str() const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i) {
    const Rational& c = c_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) out << "-";
      first = false;
    } else {
      out << (c.sign() < 0 ? " - " : " + ");
    }
    const bool unit = (mag == Rational(1));
    if (i == 0) {
      out << mag.str();
    } else {
      if (!unit) out << mag.str() << "*";
      out << (i == 1 ? "g" : "g^" + std::to_string(i));
    }
  }
  return out.str();
}

GScalar pochhammer(const GScalar& start, unsigned k) {
  GScalar acc{Rational(1)};
  for (unsigned j = 0; j < k; ++j) acc *= start + GScalar(Rational(static_cast<long>(j)));
  return acc;
}

}  // namespace oscpoly
