#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oscpoly/gscalar.hpp"

namespace oscpoly {

/// Dense polynomial in x with GScalar coefficients, i.e. an element of
/// Q[g][x]. Trailing zero coefficients are trimmed; the zero polynomial has
/// an empty coefficient sequence and no degree.
class XPoly {
 public:
  XPoly() = default;
  XPoly(GScalar c0);  // NOLINT: constants embed implicitly
  XPoly(Rational c0) : XPoly(GScalar(std::move(c0))) {}
  XPoly(long c0) : XPoly(GScalar(c0)) {}
  XPoly(int c0) : XPoly(GScalar(c0)) {}

  /// The monomial x.
  static XPoly x();

  /// c * x^j.
  static XPoly monomial(unsigned j, GScalar c = GScalar(Rational(1)));

  /// c[j] = coefficient of x^j; trims trailing zeros.
  static XPoly from_coeffs(std::vector<GScalar> c);

  bool is_zero() const { return c_.empty(); }
  std::optional<int> degree() const {
    if (c_.empty()) return std::nullopt;
    return static_cast<int>(c_.size()) - 1;
  }

  const std::vector<GScalar>& coeffs() const { return c_; }
  GScalar coeff(std::size_t j) const {
    return j < c_.size() ? c_[j] : GScalar();
  }
  GScalar leading_coeff() const { return c_.empty() ? GScalar() : c_.back(); }

  XPoly operator-() const;
  XPoly& operator+=(const XPoly& o);
  XPoly& operator-=(const XPoly& o);
  XPoly& operator*=(const XPoly& o);

  friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
  friend XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }
  friend XPoly operator*(const XPoly& a, const XPoly& b);

  XPoly scaled(const GScalar& s) const;
  XPoly scaled(const Rational& s) const { return scaled(GScalar(s)); }

  friend bool operator==(const XPoly& a, const XPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const XPoly& a, const XPoly& b) { return a.c_ != b.c_; }

  /// Exact formal derivative with respect to x.
  XPoly derivative() const;

  /// The unique q with x*q = p; throws std::domain_error("not divisible by x")
  /// when the constant term is nonzero.
  XPoly divide_by_x() const;

  /// Reads *this as a polynomial in the abstract variable eta and maps
  /// eta^k -> x^(2k).
  XPoly substitute_eta_to_x2() const;

  /// Exact evaluation at (g, x) by Horner's scheme.
  Rational eval(const Rational& gval, const Rational& xval) const;

  /// Specializes g, leaving a polynomial in x with constant coefficients.
  XPoly specialize_g(const Rational& gval) const;

  /// Largest g-degree over all coefficients; nullopt for the zero polynomial.
  std::optional<int> g_degree() const;

  bool is_even() const;  // all odd-power coefficients vanish
  bool is_odd() const;   // all even-power coefficients vanish

  /// Human-readable form, descending powers:
  /// "x^4 - (2*g + 3)*x^2 + (g^2 + 2*g + 3/4)".
  std::string str() const;

 private:
  void trim();
  std::vector<GScalar> c_;
};

/// Polynomials in the Laguerre argument eta share XPoly's representation;
/// substitute_eta_to_x2 moves between the two readings.
using EtaPoly = XPoly;

}  // namespace oscpoly
