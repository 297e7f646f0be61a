#include "oscpoly/oscillator.hpp"

#include <stdexcept>

#include "oscpoly/classical.hpp"

namespace oscpoly {

XPoly op_lower(const XPoly& p) { return p.derivative(); }

XPoly op_raise(const XPoly& p) {
  return XPoly::monomial(1, GScalar(Rational(2))) * p - p.derivative();
}

XPoly op_number(const XPoly& p) {
  const XPoly d = p.derivative();
  return XPoly::x() * d - d.derivative().scaled(Rational(1, 2));
}

XPoly solve_shifted_number(const XPoly& p, unsigned s) {
  if (s == 0) throw std::invalid_argument("solve_shifted_number: s must be >= 1");
  if (p.is_zero()) return XPoly();
  // (N+s) x^k = (k+s) x^k - (k(k-1)/2) x^(k-2): back-substitute from the top.
  const std::size_t deg = p.coeffs().size() - 1;
  std::vector<GScalar> q(deg + 1);
  for (std::size_t jj = deg + 1; jj-- > 0;) {
    GScalar rhs = p.coeff(jj);
    if (jj + 2 <= deg) {
      const Rational couple(static_cast<long>((jj + 2) * (jj + 1)), 2);
      rhs += q[jj + 2] * GScalar(couple);
    }
    q[jj] = rhs * GScalar(Rational(1, static_cast<long>(jj + s)));
  }
  return XPoly::from_coeffs(std::move(q));
}

std::vector<GScalar> hermite_expand(const XPoly& p) {
  if (p.is_zero()) return {};
  const unsigned deg = static_cast<unsigned>(*p.degree());
  const std::vector<XPoly> h = hermite_sequence(deg);
  std::vector<GScalar> out(deg + 1);
  XPoly rest = p;
  for (unsigned k = deg + 1; k-- > 0;) {
    // H_k has leading coefficient 2^k
    GScalar c = rest.coeff(k) * GScalar(Rational(1) / Rational::pow2(k));
    out[k] = c;
    if (!c.is_zero()) rest -= h[k].scaled(c);
  }
  if (!rest.is_zero()) throw std::logic_error("hermite_expand: nonzero remainder");
  return out;
}

XPoly solve_shifted_number_hermite_basis(const XPoly& p, unsigned s) {
  if (s == 0) throw std::invalid_argument("solve_shifted_number: s must be >= 1");
  if (p.is_zero()) return XPoly();
  std::vector<GScalar> c = hermite_expand(p);
  const std::vector<XPoly> h = hermite_sequence(static_cast<unsigned>(c.size()) - 1);
  XPoly q;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k].is_zero()) continue;
    q += h[k].scaled(c[k] * GScalar(Rational(1, static_cast<long>(k + s))));
  }
  return q;
}

namespace {

XPoly half_second_derivative(const XPoly& p) {
  return p.derivative().derivative().scaled(Rational(1, 2));
}

XPoly hyp1f0_impl(const XPoly& p, const GScalar& base, unsigned shift) {
  if (p.is_zero()) return XPoly();
  const unsigned deg = static_cast<unsigned>(*p.degree());
  const unsigned terms = (deg + 1) / 2;  // K = ceil(deg/2)
  XPoly acc = p;                         // k = 0 term
  XPoly power = p;                       // b^k p, updated in place
  GScalar coeff{Rational(1)};            // (base)_k / k! with alternating sign
  for (unsigned k = 1; k <= terms; ++k) {
    power = solve_shifted_number(half_second_derivative(power), shift);
    if (power.is_zero()) break;
    coeff *= (base + GScalar(Rational(static_cast<long>(k) - 1))) *
             GScalar(Rational(-1, static_cast<long>(k)));
    acc += power.scaled(coeff);
  }
  return acc;
}

}  // namespace

XPoly op_b(const XPoly& p) { return solve_shifted_number(half_second_derivative(p), 1); }

XPoly op_bprime(const XPoly& p) {
  return solve_shifted_number(half_second_derivative(p), 2);
}

XPoly op_b_power(const XPoly& p, unsigned k) {
  XPoly r = p;
  for (unsigned i = 0; i < k && !r.is_zero(); ++i) r = op_b(r);
  return r;
}

XPoly op_hyp1f0(const XPoly& p, const GScalar& pochhammer_base) {
  return hyp1f0_impl(p, pochhammer_base, 1);
}

XPoly op_hyp1f0_prime(const XPoly& p, const GScalar& pochhammer_base) {
  return hyp1f0_impl(p, pochhammer_base, 2);
}

}  // namespace oscpoly
