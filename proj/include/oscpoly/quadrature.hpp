#pragma once

#include <vector>

#include "oscpoly/moment_value.hpp"
#include "oscpoly/rational.hpp"
#include "oscpoly/xpoly.hpp"

namespace oscpoly {

/// Gaussian quadrature rule. Nodes strictly increasing, weights positive;
/// an m-point rule integrates polynomials of degree <= 2m-1 exactly against
/// its weight.
struct QuadRule {
  enum class Kind { GaussHermite, GaussLaguerre };
  Kind kind = Kind::GaussHermite;
  double alpha = 0.0;  // Laguerre parameter; unused for Hermite
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Nodes are the roots of H_m resp. L_m^(alpha), found by safeguarded Newton
/// iteration seeded from the interlacing roots of the previous order; weights
/// by the classical closed forms. Requires m >= 1 and, for Laguerre,
/// alpha > -1. Non-convergence throws std::runtime_error naming the index.
QuadRule build_rule(QuadRule::Kind kind, int m, double alpha = 0.0);

/// H_n(x) / L_n^(alpha)(x) by the three-term recurrences, in double.
double hermite_value(int n, double x);
double laguerre_value(int n, double alpha, double x);

/// Gamma(x): exact half-integer recurrence down to Gamma(1/2) = sqrt(pi)
/// resp. Gamma(1) = 1 when 2x is a positive integer, std::tgamma otherwise.
double gamma_real(double x);

/// Numeric value of an exact MomentValue at g = gval.
double moment_value_eval(const MomentValue& v, const Rational& gval);

/// Quadrature image of the exact inner products. GaussHermite integrates
/// p*q e^{-x^2} over R. GaussLaguerre integrates p*q x^{2g} e^{-x^2} over
/// (0,inf) through the substitution eta = x^2; this requires p*q even and
/// rule alpha = gval - 1/2. Insufficient rule degree (2m-1 < deg p + deg q)
/// is a precondition error.
double numeric_inner_product(const XPoly& p, const XPoly& q, const Rational& gval,
                             const QuadRule& rule);

}  // namespace oscpoly
