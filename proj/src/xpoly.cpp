#include "oscpoly/xpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace oscpoly {

XPoly::XPoly(GScalar c0) {
  if (!c0.is_zero()) c_.push_back(std::move(c0));
}

XPoly XPoly::x() { return monomial(1); }

XPoly XPoly::monomial(unsigned j, GScalar c) {
  XPoly p;
  if (c.is_zero()) return p;
  p.c_.assign(j + 1, GScalar());
  p.c_[j] = std::move(c);
  return p;
}

XPoly XPoly::from_coeffs(std::vector<GScalar> c) {
  XPoly p;
  p.c_ = std::move(c);
  p.trim();
  return p;
}

void XPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

XPoly XPoly::operator-() const {
  XPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

XPoly& XPoly::operator+=(const XPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t j = 0; j < o.c_.size(); ++j) c_[j] += o.c_[j];
  trim();
  return *this;
}

XPoly& XPoly::operator-=(const XPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t j = 0; j < o.c_.size(); ++j) c_[j] -= o.c_[j];
  trim();
  return *this;
}

XPoly operator*(const XPoly& a, const XPoly& b) {
  if (a.is_zero() || b.is_zero()) return XPoly();
  std::vector<GScalar> prod(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      prod[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return XPoly::from_coeffs(std::move(prod));
}

XPoly& XPoly::operator*=(const XPoly& o) { return *this = *this * o; }

XPoly XPoly::scaled(const GScalar& s) const {
  if (s.is_zero()) return XPoly();
  XPoly r = *this;
  for (auto& c : r.c_) c *= s;
  r.trim();
  return r;
}

XPoly XPoly::derivative() const {
  if (c_.size() <= 1) return XPoly();
  std::vector<GScalar> d(c_.size() - 1);
  for (std::size_t j = 1; j < c_.size(); ++j) {
    d[j - 1] = c_[j] * GScalar(Rational(static_cast<long>(j)));
  }
  return from_coeffs(std::move(d));
}

XPoly XPoly::divide_by_x() const {
  if (is_zero()) return XPoly();
  if (!c_[0].is_zero()) throw std::domain_error("not divisible by x");
  std::vector<GScalar> q(c_.begin() + 1, c_.end());
  return from_coeffs(std::move(q));
}

XPoly XPoly::substitute_eta_to_x2() const {
  if (is_zero()) return XPoly();
  std::vector<GScalar> out(2 * (c_.size() - 1) + 1);
  for (std::size_t k = 0; k < c_.size(); ++k) out[2 * k] = c_[k];
  return from_coeffs(std::move(out));
}

Rational XPoly::eval(const Rational& gval, const Rational& xval) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * xval + it->eval(gval);
  }
  return acc;
}

XPoly XPoly::specialize_g(const Rational& gval) const {
  std::vector<GScalar> out(c_.size());
  for (std::size_t j = 0; j < c_.size(); ++j) {
    out[j] = GScalar(c_[j].eval(gval));
  }
  return from_coeffs(std::move(out));
}

std::optional<int> XPoly::g_degree() const {
  std::optional<int> best;
  for (const auto& c : c_) {
    if (auto d = c.degree()) {
      if (!best || *d > *best) best = *d;
    }
  }
  return best;
}

bool XPoly::is_even() const {
  for (std::size_t j = 1; j < c_.size(); j += 2) {
    if (!c_[j].is_zero()) return false;
  }
  return true;
}

bool XPoly::is_odd() const {
  for (std::size_t j = 0; j < c_.size(); j += 2) {
    if (!c_[j].is_zero()) return false;
  }
  return true;
}

std::string XPoly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int j = static_cast<int>(c_.size()) - 1; j >= 0; --j) {
    const GScalar& c = c_[static_cast<std::size_t>(j)];
    if (c.is_zero()) continue;
    bool negated = false;
    std::string body;
    const std::size_t terms = [&] {
      std::size_t t = 0;
      for (const auto& r : c.coeffs()) t += r.is_zero() ? 0 : 1;
      return t;
    }();
    if (terms > 1) {
      // pull an all-over sign out of the leading term
      if (c.coeffs().back().sign() < 0) {
        negated = true;
        body = "(" + (-c).str() + ")";
      } else {
        body = "(" + c.str() + ")";
      }
    } else if (c.is_constant()) {
      const Rational r = c.coeff(0);
      negated = r.sign() < 0;
      const Rational mag = r.abs();
      body = (mag == Rational(1) && j != 0) ? "" : mag.str();
    } else {
      body = c.str();
      if (body[0] == '-') {
        negated = true;
        body = body.substr(1);
      }
    }
    if (first) {
      if (negated) out << "-";
      first = false;
    } else {
      out << (negated ? " - " : " + ");
    }
    out << body;
    if (j > 0) {
      if (!body.empty()) out << "*";
      out << (j == 1 ? "x" : "x^" + std::to_string(j));
    }
  }
  return out.str();
}

}  // namespace oscpoly
