#pragma once

#include <vector>

#include "oscpoly/xpoly.hpp"

namespace oscpoly {

// Ladder convention, with the sqrt(2) factors absorbed:
//   A- = d/dx,  A+ = -d/dx + 2x,  N = (1/2) A+ A- = x d/dx - (1/2) d^2/dx^2,
// so that A- H_n = 2n H_{n-1}, A+ H_n = H_{n+1}, N H_n = n H_n, and
// A-^2/2 = (1/2) d^2/dx^2 plays the role of the squared annihilator.

XPoly op_lower(const XPoly& p);
XPoly op_raise(const XPoly& p);
XPoly op_number(const XPoly& p);

/// Solves (N + s) q = p for s >= 1. N + s is upper triangular in the monomial
/// basis with diagonal k + s > 0; solved by back-substitution from the top
/// degree down. Throws std::invalid_argument when s == 0.
XPoly solve_shifted_number(const XPoly& p, unsigned s);

/// Oracle route for the same solve: expand p in the Hermite basis (where N is
/// diagonal), divide the H_k coefficient by k + s, re-expand.
XPoly solve_shifted_number_hermite_basis(const XPoly& p, unsigned s);

/// Coefficients of p in the Hermite basis: p = sum_k out[k] * H_k.
std::vector<GScalar> hermite_expand(const XPoly& p);

/// b = (N+1)^{-1} (1/2) d^2/dx^2; lowers degree by exactly 2 (or gives 0).
XPoly op_b(const XPoly& p);

/// b' = (N+2)^{-1} (1/2) d^2/dx^2, the odd-sector analogue.
XPoly op_bprime(const XPoly& p);

XPoly op_b_power(const XPoly& p, unsigned k);

/// Truncated hypergeometric operator series
///   sum_{k=0}^{K} ((base)_k / k!) (-1)^k b^k p,   K = ceil(deg(p)/2),
/// which is the full 1F0(base; -b) on polynomials since b lowers degree by 2.
XPoly op_hyp1f0(const XPoly& p, const GScalar& pochhammer_base);

/// Same series built on b' instead of b.
XPoly op_hyp1f0_prime(const XPoly& p, const GScalar& pochhammer_base);

}  // namespace oscpoly
