#pragma once

#include <vector>

#include "oscpoly/classical.hpp"
#include "oscpoly/moment_value.hpp"
#include "oscpoly/verify_report.hpp"
#include "oscpoly/xpoly.hpp"

namespace oscpoly {

enum class WeightTag {
  GaussHalfline,  // e^{-x^2} on (0, inf)
  GaussFullline,  // e^{-x^2} on R
  WeightedG,      // x^{2g} e^{-x^2} on (0, inf)
};

/// Exact moment of x^j against the weight. WeightedG supports even j only
/// (odd weighted moments leave the unit basis) and rejects odd j with
/// std::domain_error.
MomentValue moment(WeightTag weight, unsigned j);

/// Expands p*q and sums coefficient-weighted moments. Under WeightedG the
/// product must be even; parity violations raise the same unsupported-moment
/// error as moment().
MomentValue inner_product(const XPoly& p, const XPoly& q, WeightTag weight);

using MomentMatrix = std::vector<std::vector<MomentValue>>;

/// Entry (m,n) = <L_m-part, L_n-part> under WeightedG. Diagonal
/// ((g+1/2)_n / (2 n!)) Gamma(g+1/2), off-diagonal zero.
MomentMatrix gram_radial(unsigned max_n);

/// Entry (m,n) = <F_m, F_n> with F_k the even-route transform output.
/// Diagonal (1/2) n! (g+1/2)_n Gamma(g+1/2). Also asserts the rescaling
/// consistency (F_m,F_n) = (-1)^{m+n} m! n! <L_m-part, L_n-part> against
/// gram_radial; a violation throws std::logic_error (unreachable).
MomentMatrix gram_F(unsigned max_m);

MomentMatrix gram_hermite_halfline(Parity parity, unsigned max_n);
MomentMatrix gram_hermite_fullline(unsigned max_n);

// Closed-form expected entries for the Gram matrices above.
MomentValue gram_radial_expected(unsigned m, unsigned n);
MomentValue gram_F_expected(unsigned m, unsigned n);
MomentValue gram_hermite_halfline_expected(Parity parity, unsigned m, unsigned n);
MomentValue gram_hermite_fullline_expected(unsigned m, unsigned n);

/// Auxiliary Pochhammer identities in Q[g]; quotients of rising factorials
/// are cleared exactly before comparison.
VerifyReport identity_check_id1(unsigned n);
VerifyReport identity_check_id2(unsigned m, unsigned l);  // requires l <= m
VerifyReport identity_check_id3(unsigned m, unsigned n);

enum class AuxIdentity { Id1, Id2, Id3 };

/// Dispatcher: Id1 takes {n}, Id2 takes {m,l} with l <= m, Id3 takes {m,n}.
/// Wrong arity or range throws std::out_of_range.
VerifyReport identity_check(AuxIdentity which, const std::vector<int>& indices);

}  // namespace oscpoly
