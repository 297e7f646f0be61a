#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace oscpoly {

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator. All arithmetic is exact.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors int literals
  Rational(int n) : v_(static_cast<long>(n)) {}

  Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
  }

  explicit Rational(const mpz_class& n) : v_(n) {}

  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  /// Parses "p/q" or "p" (arbitrary precision, optional sign).
  static Rational parse(const std::string& s);

  static Rational factorial(unsigned long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
  }

  static Rational binomial(unsigned long n, unsigned long k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(b);
  }

  /// 2^k for k >= 0, exact.
  static Rational pow2(unsigned long k) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, k);
    return Rational(p);
  }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  Rational abs() const { return Rational(mpq_class(::abs(v_))); }

  /// "p/q", or "p" when the denominator is 1.
  std::string str() const {
    return v_.get_den() == 1 ? v_.get_num().get_str() : v_.get_str();
  }

  double to_double() const { return v_.get_d(); }

 private:
  mpq_class v_;
};

inline Rational Rational::parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("Rational: empty string");
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(mpq_class(mpz_class(s)));
    }
    mpz_class num(s.substr(0, slash));
    mpz_class den(s.substr(slash + 1));
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Rational(q);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("Rational: cannot parse \"" + s + "\"");
  }
}

}  // namespace oscpoly
