#pragma once

#include <vector>

#include "oscpoly/xpoly.hpp"

namespace oscpoly {

Rational factorial(unsigned n);
Rational binomial(unsigned n, unsigned k);

enum class Parity { Even, Odd };

/// H_0 .. H_max by the three-term recurrence H_{n+1} = 2x H_n - 2n H_{n-1}.
std::vector<XPoly> hermite_sequence(unsigned max_n);

/// H_n(x), built independently from the explicit coefficient formulas and
/// from the recurrence; the two constructions are checked against each other
/// on every call.
XPoly hermite(unsigned n);

/// Closed-form coefficients: Even gives c'_{n,k} of H_{2n}(x) = sum c'_{n,k} x^{2k},
/// Odd gives c''_{n,k} of H_{2n+1}(x) = sum c''_{n,k} x^{2k+1}. Requires k <= n.
Rational hermite_coeff(unsigned n, unsigned k, Parity parity);

/// L_n^(alpha)(eta) from the explicit hypergeometric sum; alpha may carry g.
EtaPoly laguerre(unsigned n, const GScalar& alpha);

/// L_n^(g-1/2)(x^2): the polynomial part of the radial eigenfunctions.
/// Even polynomial of degree 2n in x.
XPoly laguerre_radial(unsigned n);

/// CLI dispatch tag.
enum class PolyFamily { Hermite, LaguerreRadial };

}  // namespace oscpoly
