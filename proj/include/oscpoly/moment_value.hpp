#pragma once

#include <string>

#include "oscpoly/gscalar.hpp"

namespace oscpoly {

/// GScalar-linear combination over the unit basis {1, sqrt(pi), Gamma(g+1/2)}.
/// Addition and GScalar scaling are componentwise. A product of two
/// MomentValues is defined only when at least one factor is a pure rational
/// multiple of 1; products mixing the transcendental units are rejected.
class MomentValue {
 public:
  MomentValue() = default;

  static MomentValue of_one(GScalar c) {
    MomentValue v;
    v.one_ = std::move(c);
    return v;
  }
  static MomentValue of_sqrt_pi(GScalar c) {
    MomentValue v;
    v.sqrt_pi_ = std::move(c);
    return v;
  }
  static MomentValue of_gamma_g_half(GScalar c) {
    MomentValue v;
    v.gamma_gh_ = std::move(c);
    return v;
  }

  const GScalar& one() const { return one_; }
  const GScalar& sqrt_pi() const { return sqrt_pi_; }
  const GScalar& gamma_g_half() const { return gamma_gh_; }

  bool is_zero() const {
    return one_.is_zero() && sqrt_pi_.is_zero() && gamma_gh_.is_zero();
  }

  /// Only the 1-component is nonzero (or the value is zero).
  bool is_scalar() const { return sqrt_pi_.is_zero() && gamma_gh_.is_zero(); }

  MomentValue operator-() const;
  MomentValue& operator+=(const MomentValue& o);
  MomentValue& operator-=(const MomentValue& o);

  friend MomentValue operator+(MomentValue a, const MomentValue& b) { return a += b; }
  friend MomentValue operator-(MomentValue a, const MomentValue& b) { return a -= b; }

  MomentValue scaled(const GScalar& s) const;
  MomentValue scaled(const Rational& s) const { return scaled(GScalar(s)); }

  /// Throws std::domain_error unless at least one factor is_scalar().
  friend MomentValue operator*(const MomentValue& a, const MomentValue& b);

  friend bool operator==(const MomentValue& a, const MomentValue& b) {
    return a.one_ == b.one_ && a.sqrt_pi_ == b.sqrt_pi_ && a.gamma_gh_ == b.gamma_gh_;
  }
  friend bool operator!=(const MomentValue& a, const MomentValue& b) { return !(a == b); }

  /// "(g/2 + 1/4)*Gamma(g+1/2) + 2*sqrt(pi)" style rendering; "0" when zero.
  std::string str() const;

 private:
  GScalar one_, sqrt_pi_, gamma_gh_;
};

}  // namespace oscpoly
