#include "oscpoly/quadrature.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace oscpoly {

namespace {

constexpr int kNewtonCap = 200;
constexpr double kStepTol = 1e-15;

double poly_eval(const std::vector<double>& coeffs, double x) {
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<double> specialize_to_doubles(const XPoly& p, const Rational& gval) {
  std::vector<double> out(p.coeffs().size(), 0.0);
  for (std::size_t j = 0; j < p.coeffs().size(); ++j) {
    out[j] = p.coeffs()[j].eval(gval).to_double();
  }
  return out;
}

// Safeguarded Newton inside a bracket with a guaranteed sign change.
template <typename F, typename DF>
double bracketed_newton(F f, DF df, double lo, double hi, int index) {
  double flo = f(lo);
  double x = 0.5 * (lo + hi);
  for (int iter = 0; iter < kNewtonCap; ++iter) {
    const double fx = f(x);
    if ((fx > 0) == (flo > 0)) {
      lo = x;
      flo = fx;
    } else {
      hi = x;
    }
    const double dfx = df(x);
    double next = (dfx != 0.0) ? x - fx / dfx : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - x) < kStepTol * (1.0 + std::abs(next))) return next;
    x = next;
  }
  throw std::runtime_error("build_rule: Newton iteration did not converge at node " +
                           std::to_string(index));
}

}  // namespace

double hermite_value(int n, double x) {
  double prev = 1.0;
  if (n == 0) return prev;
  double cur = 2.0 * x;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * x * cur - 2.0 * k * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double laguerre_value(int n, double alpha, double x) {
  double prev = 1.0;
  if (n == 0) return prev;
  double cur = 1.0 + alpha - x;
  for (int k = 1; k < n; ++k) {
    const double next =
        ((2.0 * k + 1.0 + alpha - x) * cur - (k + alpha) * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

double gamma_real(double x) {
  const double twice = 2.0 * x;
  if (x > 0 && twice == std::floor(twice)) {
    const long k = static_cast<long>(twice);
    double acc;
    double z;
    if (k % 2 == 0) {
      acc = 1.0;  // Gamma(1)
      z = 1.0;
    } else {
      acc = std::sqrt(M_PI);  // Gamma(1/2)
      z = 0.5;
    }
    while (z + 0.5 <= x) {
      acc *= z;
      z += 1.0;
    }
    return acc;
  }
  return std::tgamma(x);
}

QuadRule build_rule(QuadRule::Kind kind, int m, double alpha) {
  if (m < 1) throw std::invalid_argument("build_rule: need m >= 1");
  const bool hermite = (kind == QuadRule::Kind::GaussHermite);
  if (!hermite && alpha <= -1.0) {
    throw std::invalid_argument("build_rule: Laguerre requires alpha > -1");
  }

  QuadRule rule;
  rule.kind = kind;
  rule.alpha = hermite ? 0.0 : alpha;

  // Grow the root set order by order; roots of order k-1 interlace and
  // bracket those of order k.
  auto symmetrize = [](std::vector<double>& r) {
    const int size = static_cast<int>(r.size());
    for (int i = 0; i < size / 2; ++i) {
      const double x = 0.5 * (r[size - 1 - i] - r[i]);
      r[i] = -x;
      r[size - 1 - i] = x;
    }
    if (size % 2 == 1) r[size / 2] = 0.0;
  };
  std::vector<double> roots{hermite ? 0.0 : 1.0 + alpha};
  for (int k = 2; k <= m; ++k) {
    auto f = [&](double x) {
      return hermite ? hermite_value(k, x) : laguerre_value(k, alpha, x);
    };
    auto df = [&](double x) {
      return hermite ? 2.0 * k * hermite_value(k - 1, x)
                     : -laguerre_value(k - 1, alpha + 1.0, x);
    };
    const double lo_bound = hermite ? -std::sqrt(2.0 * k + 2.0) : 0.0;
    const double hi_bound =
        hermite ? std::sqrt(2.0 * k + 2.0) : 4.0 * k + 2.0 * alpha + 4.0;
    std::vector<double> next;
    next.reserve(k);
    for (int i = 0; i < k; ++i) {
      const double lo = (i == 0) ? lo_bound : roots[i - 1];
      const double hi = (i == k - 1) ? hi_bound : roots[i];
      next.push_back(bracketed_newton(f, df, lo, hi, i));
    }
    if (hermite) symmetrize(next);  // enforce the exact +/- pairing
    roots = std::move(next);
  }

  rule.nodes = roots;
  rule.weights.resize(roots.size());
  if (hermite) {
    // w_i = 2^{m-1} m! sqrt(pi) / (m H_{m-1}(x_i))^2
    double num = std::sqrt(M_PI) * std::ldexp(1.0, m - 1);
    for (int j = 2; j <= m; ++j) num *= j;
    for (int i = 0; i < m; ++i) {
      const double h = m * hermite_value(m - 1, rule.nodes[i]);
      rule.weights[i] = num / (h * h);
    }
  } else {
    // w_i = Gamma(m+alpha+1) x_i / (m! (m+1)^2 L_{m+1}^(alpha)(x_i)^2)
    double num = gamma_real(m + alpha + 1.0);
    for (int j = 2; j <= m; ++j) num /= j;
    for (int i = 0; i < m; ++i) {
      const double l = (m + 1) * laguerre_value(m + 1, alpha, rule.nodes[i]);
      rule.weights[i] = num * rule.nodes[i] / (l * l);
    }
  }
  return rule;
}

double moment_value_eval(const MomentValue& v, const Rational& gval) {
  return v.one().eval(gval).to_double() +
         v.sqrt_pi().eval(gval).to_double() * std::sqrt(M_PI) +
         v.gamma_g_half().eval(gval).to_double() *
             gamma_real(gval.to_double() + 0.5);
}

double numeric_inner_product(const XPoly& p, const XPoly& q, const Rational& gval,
                             const QuadRule& rule) {
  if (p.is_zero() || q.is_zero()) return 0.0;
  const int deg_sum = *p.degree() + *q.degree();
  const int m = static_cast<int>(rule.nodes.size());
  if (2 * m - 1 < deg_sum) {
    throw std::invalid_argument("numeric_inner_product: rule degree insufficient");
  }
  const std::vector<double> pc = specialize_to_doubles(p, gval);
  const std::vector<double> qc = specialize_to_doubles(q, gval);

  if (rule.kind == QuadRule::Kind::GaussHermite) {
    double acc = 0.0;
    for (int i = 0; i < m; ++i) {
      acc += rule.weights[i] * poly_eval(pc, rule.nodes[i]) *
             poly_eval(qc, rule.nodes[i]);
    }
    return acc;
  }

  if (!(p * q).is_even()) {
    throw std::domain_error("numeric_inner_product: p*q must be even under the "
                            "weighted half-line weight");
  }
  const double expected_alpha = gval.to_double() - 0.5;
  if (std::abs(rule.alpha - expected_alpha) > 1e-12) {
    throw std::invalid_argument("numeric_inner_product: rule alpha must equal g - 1/2");
  }
  // int_0^inf x^{2g} e^{-x^2} p q dx = (1/2) int_0^inf eta^{g-1/2} e^{-eta}
  //                                     (pq)(sqrt(eta)) deta
  double acc = 0.0;
  for (int i = 0; i < m; ++i) {
    const double x = std::sqrt(rule.nodes[i]);
    acc += rule.weights[i] * poly_eval(pc, x) * poly_eval(qc, x);
  }
  return 0.5 * acc;
}

}  // namespace oscpoly
