#pragma once

#include "oscpoly/verify_report.hpp"
#include "oscpoly/xpoly.hpp"

namespace oscpoly {

enum class Route { DirectSum, OperatorSeries };
enum class InverseVariant { Even, OddV1, OddV2 };

enum class TransformDirection {
  LaguerreFromEven,
  LaguerreFromOdd,
  EvenFromLaguerre,
  OddFromLaguerreV1,
  OddFromLaguerreV2,
};

/// Dispatch over the full transform family. The route applies to the two
/// forward directions; inverse expansions have a single construction.
XPoly apply_transform(TransformDirection direction, Route route, unsigned n);

/// (-1)^n n! L_n^(g-1/2)(x^2) built from even Hermite polynomials, either by
/// the finite binomial sum or by the operator series 1F0(g; -b) H_2n / 2^2n.
XPoly laguerre_from_hermite_even(unsigned n, Route route);

/// Same target built from odd Hermite polynomials, base g-1 and b'; the final
/// division by x is exact because odd Hermite polynomials vanish at 0.
XPoly laguerre_from_hermite_odd(unsigned n, Route route);

/// Inverse expansions: Even gives H_2n / 2^2n; OddV1 and OddV2 both give
/// H_{2n+1} / (2^{2n+1} x), with Laguerre parameter g-1/2 resp. g+1/2.
XPoly hermite_from_laguerre(unsigned n, InverseVariant variant);

/// The radial Hamiltonian on stripped polynomial parts:
///   A_g p = -p'' + 2x p' - 2g (p'/x).
/// Requires p' divisible by x (guaranteed for even p); propagates the
/// divide_by_x error otherwise.
XPoly radial_operator_apply(const XPoly& p);

/// Classical g=0 specializations: H_2n = (-1)^n n! 2^2n L_n^(-1/2)(x^2) and
/// H_{2n+1} = (-1)^n n! 2^{2n+1} x L_n^(1/2)(x^2); both checked exactly.
VerifyReport classic_g0_check(unsigned n);

/// A_g L_n-part = 4n * L_n-part, exactly in Q[g][x].
VerifyReport eigencheck_radial(unsigned n);

/// 2 N H_n = 2n H_n.
VerifyReport eigencheck_harmonic(unsigned n);

/// H_{2n+1}/(2^{2n+1} x) = sum_k (-1)^k (n!/(n-k)!) H_{2(n-k)}/2^{2(n-k)}.
VerifyReport hodd_byeven_check(unsigned n);

/// Polynomial form of the (1/x) d/dx action on the even eigenfunctions:
/// (H_2n'/x - H_2n)/2^2n = -2 sum_k (-1)^k (n!/(n-k)!) H_{2(n-k)}/2^{2(n-k)}
///                         + H_2n/2^2n.
VerifyReport phi_ratio_identity_check(unsigned n);

}  // namespace oscpoly
