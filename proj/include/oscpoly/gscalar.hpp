#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oscpoly/rational.hpp"

namespace oscpoly {

/// Dense polynomial in the coupling parameter g over Rational. Trailing zero
/// coefficients are trimmed at construction; the zero element has an empty
/// coefficient sequence, so equality is plain structural equality.
class GScalar {
 public:
  GScalar() = default;
  GScalar(Rational c);  // NOLINT: constants embed implicitly
  GScalar(long c) : GScalar(Rational(c)) {}
  GScalar(int c) : GScalar(Rational(c)) {}

  /// The variable g itself.
  static GScalar g();

  /// c[i] = coefficient of g^i; trims trailing zeros.
  static GScalar from_coeffs(std::vector<Rational> c);

  bool is_zero() const { return c_.empty(); }
  std::optional<int> degree() const {
    if (c_.empty()) return std::nullopt;
    return static_cast<int>(c_.size()) - 1;
  }

  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t i) const {
    return i < c_.size() ? c_[i] : Rational(0);
  }

  /// True when the value is a plain rational (g-degree <= 0).
  bool is_constant() const { return c_.size() <= 1; }

  GScalar operator-() const;
  GScalar& operator+=(const GScalar& o);
  GScalar& operator-=(const GScalar& o);
  GScalar& operator*=(const GScalar& o);

  friend GScalar operator+(GScalar a, const GScalar& b) { return a += b; }
  friend GScalar operator-(GScalar a, const GScalar& b) { return a -= b; }
  friend GScalar operator*(const GScalar& a, const GScalar& b);

  friend bool operator==(const GScalar& a, const GScalar& b) { return a.c_ == b.c_; }
  friend bool operator!=(const GScalar& a, const GScalar& b) { return a.c_ != b.c_; }

  /// Exact evaluation at g = gval by Horner's scheme.
  Rational eval(const Rational& gval) const;

  /// Human-readable form, descending powers: "g^2 + 2*g + 3/4".
  std::string str() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Rising factorial (start)_k = start*(start+1)*...*(start+k-1); k = 0 gives 1.
GScalar pochhammer(const GScalar& start, unsigned k);

}  // namespace oscpoly
