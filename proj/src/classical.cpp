#include "oscpoly/classical.hpp"

#include <stdexcept>

namespace oscpoly {

Rational factorial(unsigned n) { return Rational::factorial(n); }

Rational binomial(unsigned n, unsigned k) { return Rational::binomial(n, k); }

std::vector<XPoly> hermite_sequence(unsigned max_n) {
  std::vector<XPoly> h;
  h.reserve(max_n + 1);
  h.push_back(XPoly(1));
  if (max_n == 0) return h;
  h.push_back(XPoly::monomial(1, GScalar(Rational(2))));
  const XPoly two_x = XPoly::monomial(1, GScalar(Rational(2)));
  for (unsigned n = 1; n < max_n; ++n) {
    h.push_back(two_x * h[n] - h[n - 1].scaled(Rational(2L * n)));
  }
  return h;
}

namespace {

// H_n via the explicit sum: n! sum_k (-1)^k (2x)^(n-2k) / (k! (n-2k)!).
XPoly hermite_explicit(unsigned n) {
  std::vector<GScalar> c(n + 1);
  const Rational nfac = factorial(n);
  for (unsigned k = 0; 2 * k <= n; ++k) {
    const unsigned j = n - 2 * k;
    Rational coeff = nfac * Rational::pow2(j) / (factorial(k) * factorial(j));
    if (k % 2 == 1) coeff = -coeff;
    c[j] = GScalar(coeff);
  }
  return XPoly::from_coeffs(std::move(c));
}

}  // namespace

XPoly hermite(unsigned n) {
  XPoly from_sum = hermite_explicit(n);
  XPoly from_recurrence = hermite_sequence(n)[n];
  if (from_sum != from_recurrence) {
    throw std::logic_error("hermite: explicit sum and recurrence disagree at n=" +
                           std::to_string(n));
  }
  return from_sum;
}

Rational hermite_coeff(unsigned n, unsigned k, Parity parity) {
  if (k > n) throw std::out_of_range("hermite_coeff: k > n");
  const int sign = ((n - k) % 2 == 0) ? 1 : -1;
  if (parity == Parity::Even) {
    Rational c = Rational::pow2(2 * k) * factorial(2 * n) /
                 (factorial(2 * k) * factorial(n - k));
    return sign < 0 ? -c : c;
  }
  Rational c = Rational::pow2(2 * k + 1) * factorial(2 * n + 1) /
               (factorial(2 * k + 1) * factorial(n - k));
  return sign < 0 ? -c : c;
}

EtaPoly laguerre(unsigned n, const GScalar& alpha) {
  std::vector<GScalar> c(n + 1);
  const Rational inv_nfac = Rational(1) / factorial(n);
  for (unsigned k = 0; k <= n; ++k) {
    // (-n)_k / k! = (-1)^k * binomial(n, k)
    Rational front = binomial(n, k) * inv_nfac;
    if (k % 2 == 1) front = -front;
    c[k] = pochhammer(alpha + GScalar(Rational(static_cast<long>(k) + 1)), n - k) *
           GScalar(front);
  }
  return EtaPoly::from_coeffs(std::move(c));
}

XPoly laguerre_radial(unsigned n) {
  const GScalar alpha = GScalar::g() - GScalar(Rational(1, 2));
  return laguerre(n, alpha).substitute_eta_to_x2();
}

}  // namespace oscpoly
