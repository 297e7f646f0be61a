#include "oscpoly/transforms.hpp"

#include "oscpoly/classical.hpp"
#include "oscpoly/oscillator.hpp"

namespace oscpoly {

namespace {

Rational inv_pow2(unsigned k) { return Rational(1) / Rational::pow2(k); }

// sum_k (-1)^k (n!/(n-k)!) H_{2(n-k)} / 2^{2(n-k)}, shared by the odd-by-even
// and ratio identities.
XPoly alternating_even_sum(unsigned n, const std::vector<XPoly>& h) {
  XPoly acc;
  const Rational nfac = factorial(n);
  for (unsigned k = 0; k <= n; ++k) {
    Rational c = nfac / factorial(n - k) * inv_pow2(2 * (n - k));
    if (k % 2 == 1) c = -c;
    acc += h[2 * (n - k)].scaled(c);
  }
  return acc;
}

}  // namespace

XPoly laguerre_from_hermite_even(unsigned n, Route route) {
  if (route == Route::OperatorSeries) {
    return op_hyp1f0(hermite(2 * n).scaled(inv_pow2(2 * n)), GScalar::g());
  }
  const std::vector<XPoly> h = hermite_sequence(2 * n);
  XPoly acc;
  for (unsigned k = 0; k <= n; ++k) {
    GScalar c = pochhammer(GScalar::g(), k) *
                GScalar(binomial(n, k) * inv_pow2(2 * (n - k)));
    if (k % 2 == 1) c = -c;
    acc += h[2 * (n - k)].scaled(c);
  }
  return acc;
}

XPoly laguerre_from_hermite_odd(unsigned n, Route route) {
  const GScalar base = GScalar::g() - GScalar(Rational(1));
  if (route == Route::OperatorSeries) {
    return op_hyp1f0_prime(hermite(2 * n + 1).scaled(inv_pow2(2 * n + 1)), base)
        .divide_by_x();
  }
  const std::vector<XPoly> h = hermite_sequence(2 * n + 1);
  XPoly acc;
  for (unsigned k = 0; k <= n; ++k) {
    GScalar c = pochhammer(base, k) *
                GScalar(binomial(n, k) * inv_pow2(2 * (n - k) + 1));
    if (k % 2 == 1) c = -c;
    acc += h[2 * (n - k) + 1].divide_by_x().scaled(c);
  }
  return acc;
}

XPoly hermite_from_laguerre(unsigned n, InverseVariant variant) {
  const GScalar g = GScalar::g();
  const GScalar one{Rational(1)};
  XPoly acc;
  for (unsigned k = 0; k <= n; ++k) {
    const long kk = static_cast<long>(k);
    GScalar shift_base =
        (variant == InverseVariant::OddV1) ? g - GScalar(Rational(kk))
                                           : g + GScalar(Rational(1 - kk));
    GScalar c = pochhammer(shift_base, k) *
                GScalar(binomial(n, k) * factorial(n - k));
    if ((n - k) % 2 == 1) c = -c;
    const GScalar alpha = (variant == InverseVariant::OddV2)
                              ? g + GScalar(Rational(1, 2))
                              : g - GScalar(Rational(1, 2));
    acc += laguerre(n - k, alpha).substitute_eta_to_x2().scaled(c);
  }
  return acc;
}

XPoly apply_transform(TransformDirection direction, Route route, unsigned n) {
  switch (direction) {
    case TransformDirection::LaguerreFromEven:
      return laguerre_from_hermite_even(n, route);
    case TransformDirection::LaguerreFromOdd:
      return laguerre_from_hermite_odd(n, route);
    case TransformDirection::EvenFromLaguerre:
      return hermite_from_laguerre(n, InverseVariant::Even);
    case TransformDirection::OddFromLaguerreV1:
      return hermite_from_laguerre(n, InverseVariant::OddV1);
    case TransformDirection::OddFromLaguerreV2:
      return hermite_from_laguerre(n, InverseVariant::OddV2);
  }
  throw std::logic_error("apply_transform: unknown direction");
}

XPoly radial_operator_apply(const XPoly& p) {
  const XPoly d = p.derivative();
  return XPoly::monomial(1, GScalar(Rational(2))) * d - d.derivative() -
         d.divide_by_x().scaled(GScalar::g() * GScalar(Rational(2)));
}

VerifyReport classic_g0_check(unsigned n) {
  const Rational nfac = factorial(n);
  const Rational sign = (n % 2 == 0) ? Rational(1) : Rational(-1);

  const XPoly lhs_even = hermite(2 * n);
  const XPoly rhs_even = laguerre(n, GScalar(Rational(-1, 2)))
                             .substitute_eta_to_x2()
                             .scaled(sign * nfac * Rational::pow2(2 * n));

  const XPoly lhs_odd = hermite(2 * n + 1);
  const XPoly rhs_odd = (XPoly::x() *
                         laguerre(n, GScalar(Rational(1, 2))).substitute_eta_to_x2())
                            .scaled(sign * nfac * Rational::pow2(2 * n + 1));

  VerifyReport r;
  r.identity = "classic_g0";
  r.indices = {static_cast<int>(n)};
  r.pass = (lhs_even == rhs_even) && (lhs_odd == rhs_odd);
  r.expected = nlohmann::json{{"even", to_json(lhs_even)}, {"odd", to_json(lhs_odd)}};
  r.got = nlohmann::json{{"even", to_json(rhs_even)}, {"odd", to_json(rhs_odd)}};
  return r;
}

VerifyReport eigencheck_radial(unsigned n) {
  const XPoly part = laguerre_radial(n);
  const XPoly got = radial_operator_apply(part);
  const XPoly expected = part.scaled(Rational(4L * n));
  return make_report("eigencheck_radial", {static_cast<int>(n)}, expected, got);
}

VerifyReport eigencheck_harmonic(unsigned n) {
  const XPoly hn = hermite(n);
  const XPoly got = op_number(hn).scaled(Rational(2));
  const XPoly expected = hn.scaled(Rational(2L * n));
  return make_report("eigencheck_harmonic", {static_cast<int>(n)}, expected, got);
}

VerifyReport hodd_byeven_check(unsigned n) {
  const std::vector<XPoly> h = hermite_sequence(2 * n + 1);
  const XPoly lhs = h[2 * n + 1].divide_by_x().scaled(inv_pow2(2 * n + 1));
  const XPoly rhs = alternating_even_sum(n, h);
  return make_report("hodd_byeven", {static_cast<int>(n)}, rhs, lhs);
}

VerifyReport phi_ratio_identity_check(unsigned n) {
  const std::vector<XPoly> h = hermite_sequence(2 * n);
  const XPoly scaled_h2n = h[2 * n].scaled(inv_pow2(2 * n));
  const XPoly lhs = h[2 * n].derivative().divide_by_x().scaled(inv_pow2(2 * n)) -
                    scaled_h2n;
  const XPoly rhs = scaled_h2n - alternating_even_sum(n, h).scaled(Rational(2));
  return make_report("phi_ratio", {static_cast<int>(n)}, rhs, lhs);
}

}  // namespace oscpoly
