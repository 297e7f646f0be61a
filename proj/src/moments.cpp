#include "oscpoly/moments.hpp"

#include <stdexcept>

#include "oscpoly/transforms.hpp"

namespace oscpoly {

namespace {

GScalar g_plus_half() { return GScalar::g() + GScalar(Rational(1, 2)); }

// (2k)! / (4^k k!), the rational part of the even Gaussian moments.
Rational even_gauss_factor(unsigned k) {
  return factorial(2 * k) / (Rational::pow2(2 * k) * factorial(k));
}

}  // namespace

MomentValue moment(WeightTag weight, unsigned j) {
  const unsigned k = j / 2;
  switch (weight) {
    case WeightTag::GaussHalfline:
      if (j % 2 == 0) {
        return MomentValue::of_sqrt_pi(GScalar(even_gauss_factor(k) * Rational(1, 2)));
      }
      return MomentValue::of_one(GScalar(factorial(k) * Rational(1, 2)));
    case WeightTag::GaussFullline:
      if (j % 2 == 0) {
        return MomentValue::of_sqrt_pi(GScalar(even_gauss_factor(k)));
      }
      return MomentValue();
    case WeightTag::WeightedG:
      if (j % 2 != 0) {
        throw std::domain_error(
            "moment: odd power unsupported under the x^{2g} e^{-x^2} weight");
      }
      return MomentValue::of_gamma_g_half(pochhammer(g_plus_half(), k) *
                                          GScalar(Rational(1, 2)));
  }
  throw std::logic_error("moment: unknown weight tag");
}

MomentValue inner_product(const XPoly& p, const XPoly& q, WeightTag weight) {
  const XPoly prod = p * q;
  MomentValue acc;
  for (std::size_t j = 0; j < prod.coeffs().size(); ++j) {
    const GScalar& c = prod.coeffs()[j];
    if (c.is_zero()) continue;
    acc += moment(weight, static_cast<unsigned>(j)).scaled(c);
  }
  return acc;
}

namespace {

// Symmetric Gram matrix over a family of polynomials.
MomentMatrix gram_matrix(const std::vector<XPoly>& family, WeightTag weight) {
  const std::size_t size = family.size();
  MomentMatrix gram(size, std::vector<MomentValue>(size));
  for (std::size_t m = 0; m < size; ++m) {
    for (std::size_t n = m; n < size; ++n) {
      gram[m][n] = inner_product(family[m], family[n], weight);
      if (n != m) gram[n][m] = gram[m][n];
    }
  }
  return gram;
}

}  // namespace

MomentMatrix gram_radial(unsigned max_n) {
  std::vector<XPoly> family;
  family.reserve(max_n + 1);
  for (unsigned n = 0; n <= max_n; ++n) family.push_back(laguerre_radial(n));
  return gram_matrix(family, WeightTag::WeightedG);
}

MomentMatrix gram_F(unsigned max_m) {
  std::vector<XPoly> family;
  family.reserve(max_m + 1);
  for (unsigned n = 0; n <= max_m; ++n) {
    family.push_back(laguerre_from_hermite_even(n, Route::DirectSum));
  }
  MomentMatrix gram = gram_matrix(family, WeightTag::WeightedG);

  // (F_m, F_n) = (-1)^{m+n} m! n! (L_m-part, L_n-part)
  const MomentMatrix radial = gram_radial(max_m);
  for (unsigned m = 0; m <= max_m; ++m) {
    for (unsigned n = 0; n <= max_m; ++n) {
      Rational c = factorial(m) * factorial(n);
      if ((m + n) % 2 == 1) c = -c;
      if (gram[m][n] != radial[m][n].scaled(c)) {
        throw std::logic_error("gram_F: rescaling consistency violated at (" +
                               std::to_string(m) + "," + std::to_string(n) + ")");
      }
    }
  }
  return gram;
}

MomentMatrix gram_hermite_halfline(Parity parity, unsigned max_n) {
  const unsigned offset = parity == Parity::Even ? 0 : 1;
  const std::vector<XPoly> h = hermite_sequence(2 * max_n + offset);
  std::vector<XPoly> family;
  family.reserve(max_n + 1);
  for (unsigned n = 0; n <= max_n; ++n) family.push_back(h[2 * n + offset]);
  return gram_matrix(family, WeightTag::GaussHalfline);
}

MomentMatrix gram_hermite_fullline(unsigned max_n) {
  return gram_matrix(hermite_sequence(max_n), WeightTag::GaussFullline);
}

MomentValue gram_radial_expected(unsigned m, unsigned n) {
  if (m != n) return MomentValue();
  return MomentValue::of_gamma_g_half(
      pochhammer(g_plus_half(), n) * GScalar(Rational(1, 2) / factorial(n)));
}

MomentValue gram_F_expected(unsigned m, unsigned n) {
  if (m != n) return MomentValue();
  return MomentValue::of_gamma_g_half(
      pochhammer(g_plus_half(), n) * GScalar(Rational(1, 2) * factorial(n)));
}

MomentValue gram_hermite_halfline_expected(Parity parity, unsigned m, unsigned n) {
  if (m != n) return MomentValue();
  if (parity == Parity::Even) {
    // 2^{2n-1} (2n)! sqrt(pi); at n=0 the prefactor 2^{-1} stays rational
    return MomentValue::of_sqrt_pi(
        GScalar(Rational::pow2(2 * n) * Rational(1, 2) * factorial(2 * n)));
  }
  return MomentValue::of_sqrt_pi(GScalar(Rational::pow2(2 * n) * factorial(2 * n + 1)));
}

MomentValue gram_hermite_fullline_expected(unsigned m, unsigned n) {
  if (m != n) return MomentValue();
  return MomentValue::of_sqrt_pi(GScalar(Rational::pow2(n) * factorial(n)));
}

VerifyReport identity_check_id1(unsigned n) {
  GScalar lhs;
  GScalar rising{Rational(1)};  // (g)_k, grown incrementally
  for (unsigned k = 0; k <= n; ++k) {
    lhs += rising * GScalar(Rational(1) / factorial(k));
    rising *= GScalar::g() + GScalar(Rational(static_cast<long>(k)));
  }
  const GScalar rhs = pochhammer(GScalar::g() + GScalar(Rational(1)), n) *
                      GScalar(Rational(1) / factorial(n));
  return make_report("id1", {static_cast<int>(n)}, rhs, lhs);
}

VerifyReport identity_check_id2(unsigned m, unsigned l) {
  if (l > m) throw std::out_of_range("identity_check_id2: requires l <= m");
  GScalar lhs;
  GScalar rising{Rational(1)};  // (g)_k
  for (unsigned k = 0; k <= m - l; ++k) {
    const unsigned mk = m - k;
    lhs += rising * GScalar(binomial(m, k) * factorial(2 * mk) /
                            (Rational::pow2(2 * mk) * factorial(mk - l)));
    rising *= GScalar::g() + GScalar(Rational(static_cast<long>(k)));
  }
  // (g+1/2)_m / (g+1/2)_l = (g+1/2+l)_{m-l}, cleared exactly
  const GScalar rhs =
      pochhammer(g_plus_half() + GScalar(Rational(static_cast<long>(l))), m - l) *
      GScalar(factorial(2 * l) / Rational::pow2(2 * l) * binomial(m, l));
  return make_report("id2", {static_cast<int>(m), static_cast<int>(l)}, rhs, lhs);
}

VerifyReport identity_check_id3(unsigned m, unsigned n) {
  // Both sides multiplied by (g+1/2)_n; the Pochhammer quotients then
  // collapse definitionally: (g+1/2)_{l1+l2}/(g+1/2)_{l1} = (g+1/2+l1)_{l2}
  // and (g+1/2)_n/(g+1/2)_{l2} = (g+1/2+l2)_{n-l2}, so both sides live in
  // Q[g]. The right side becomes the constant delta_{mn} n!.
  const GScalar gh = g_plus_half();
  const unsigned amax = std::max(m, n);
  std::vector<std::vector<GScalar>> shifted(amax + 1);  // [a][k] = (g+1/2+a)_k
  for (unsigned a = 0; a <= amax; ++a) {
    shifted[a].resize(n + 1);
    shifted[a][0] = GScalar(Rational(1));
    for (unsigned k = 1; k <= n; ++k) {
      shifted[a][k] =
          shifted[a][k - 1] * (gh + GScalar(Rational(static_cast<long>(a + k) - 1)));
    }
  }
  GScalar lhs;
  for (unsigned l2 = 0; l2 <= n; ++l2) {
    GScalar inner;  // sum over l1 of (-1)^l1 C(m,l1) (g+1/2+l1)_{l2}
    for (unsigned l1 = 0; l1 <= m; ++l1) {
      Rational c = binomial(m, l1);
      if (l1 % 2 == 1) c = -c;
      inner += shifted[l1][l2] * GScalar(c);
    }
    Rational c = binomial(n, l2);
    if (l2 % 2 == 1) c = -c;
    lhs += inner * shifted[l2][n - l2] * GScalar(c);
  }
  const GScalar rhs = (m == n) ? GScalar(factorial(n)) : GScalar();
  return make_report("id3", {static_cast<int>(m), static_cast<int>(n)}, rhs, lhs);
}

VerifyReport identity_check(AuxIdentity which, const std::vector<int>& indices) {
  auto need = [&](std::size_t arity) {
    if (indices.size() != arity) {
      throw std::out_of_range("identity_check: wrong index count");
    }
    for (int i : indices) {
      if (i < 0) throw std::out_of_range("identity_check: negative index");
    }
  };
  switch (which) {
    case AuxIdentity::Id1:
      need(1);
      return identity_check_id1(static_cast<unsigned>(indices[0]));
    case AuxIdentity::Id2:
      need(2);
      return identity_check_id2(static_cast<unsigned>(indices[0]),
                                static_cast<unsigned>(indices[1]));
    case AuxIdentity::Id3:
      need(2);
      return identity_check_id3(static_cast<unsigned>(indices[0]),
                                static_cast<unsigned>(indices[1]));
  }
  throw std::logic_error("identity_check: unknown identity");
}

}  // namespace oscpoly
