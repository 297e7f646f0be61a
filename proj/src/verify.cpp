#include "oscpoly/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <condition_variable>
#include <memory>
#include <mutex>
#include <random>
#include <stdexcept>
#include <thread>

#include "oscpoly/classical.hpp"
#include "oscpoly/moments.hpp"
#include "oscpoly/oscillator.hpp"
#include "oscpoly/quadrature.hpp"
#include "oscpoly/transforms.hpp"

namespace oscpoly {

Suite suite_from_string(const std::string& name) {
  if (name == "ladders") return Suite::Ladders;
  if (name == "transforms") return Suite::Transforms;
  if (name == "eigen") return Suite::Eigen;
  if (name == "gram") return Suite::Gram;
  if (name == "identities") return Suite::Identities;
  if (name == "quadrature") return Suite::Quadrature;
  if (name == "all") return Suite::All;
  throw std::invalid_argument("unknown suite: " + name);
}

namespace {

Rational inv_pow2(unsigned k) { return Rational(1) / Rational::pow2(k); }

// Deterministic pseudo-random polynomial for operator spot checks.
XPoly random_poly(unsigned seed) {
  std::mt19937 rng(0x05C90157u + seed);
  std::uniform_int_distribution<long> num(-5, 5);
  std::uniform_int_distribution<long> den(1, 4);
  std::uniform_int_distribution<int> gdeg(0, 3);
  const int xdeg = 3 + static_cast<int>(seed % 8);
  std::vector<GScalar> coeffs;
  for (int j = 0; j <= xdeg; ++j) {
    std::vector<Rational> gc;
    const int gd = gdeg(rng);
    for (int i = 0; i <= gd; ++i) gc.emplace_back(num(rng), den(rng));
    coeffs.push_back(GScalar::from_coeffs(std::move(gc)));
  }
  return XPoly::from_coeffs(std::move(coeffs));
}

// iterated multiply keeps (+x, -x) node pairs exactly mirrored, which
// std::pow does not guarantee
double ipow(double x, int d) {
  double acc = 1.0;
  for (int i = 0; i < d; ++i) acc *= x;
  return acc;
}

VerifyReport report_number(std::string identity, std::vector<int> indices,
                           double expected, double got, double tol) {
  VerifyReport r;
  r.identity = std::move(identity);
  r.indices = std::move(indices);
  r.pass = std::abs(expected - got) <= tol;
  r.expected = expected;
  r.got = got;
  return r;
}

}  // namespace

std::vector<Check> ladder_checks(unsigned max_n) {
  std::vector<Check> checks;
  auto add = [&](std::string id, std::vector<int> idx,
                 std::function<VerifyReport()> run) {
    checks.push_back({std::move(id), std::move(idx), std::move(run)});
  };

  for (unsigned n = 0; n <= max_n; ++n) {
    const int ni = static_cast<int>(n);
    add("dHn", {ni}, [n] {
      const auto h = hermite_sequence(n);
      const XPoly expected =
          (n == 0) ? XPoly() : h[n - 1].scaled(Rational(2L * n));
      return make_report("dHn", {static_cast<int>(n)}, expected, op_lower(h[n]));
    });
    add("taphin_raise", {ni}, [n] {
      const auto h = hermite_sequence(n + 1);
      return make_report("taphin_raise", {static_cast<int>(n)}, h[n + 1],
                         op_raise(h[n]));
    });
    add("taphin_number", {ni}, [n] {
      const auto h = hermite_sequence(n);
      return make_report("taphin_number", {static_cast<int>(n)},
                         h[n].scaled(Rational(static_cast<long>(n))),
                         op_number(h[n]));
    });
  }

  for (unsigned i = 0; i <= max_n; ++i) {
    const int ii = static_cast<int>(i);
    add("number_factorization", {ii}, [i] {
      const XPoly p = random_poly(i);
      return make_report("number_factorization", {static_cast<int>(i)},
                         op_number(p),
                         op_raise(op_lower(p)).scaled(Rational(1, 2)));
    });
    for (unsigned s = 1; s <= 2; ++s) {
      const int si = static_cast<int>(s);
      add("shifted_inverse_apply", {si, ii}, [s, i] {
        const XPoly p = random_poly(i + 1000 * s);
        const XPoly q = solve_shifted_number(p, s);
        return make_report("shifted_inverse_apply",
                           {static_cast<int>(s), static_cast<int>(i)}, p,
                           op_number(q) + q.scaled(Rational(static_cast<long>(s))));
      });
      add("shifted_inverse_routes", {si, ii}, [s, i] {
        const XPoly p = random_poly(i + 2000 * s);
        return make_report("shifted_inverse_routes",
                           {static_cast<int>(s), static_cast<int>(i)},
                           solve_shifted_number_hermite_basis(p, s),
                           solve_shifted_number(p, s));
      });
    }
  }

  add("b_annihilates_ground", {0}, [] {
    const auto h = hermite_sequence(1);
    return make_report("b_annihilates_ground", {0}, XPoly(),
                       op_b(h[0]) + op_b(h[1]));
  });
  for (unsigned n = 1; n <= max_n; ++n) {
    add("b_even_action", {static_cast<int>(n)}, [n] {
      const auto h = hermite_sequence(2 * n);
      return make_report("b_even_action", {static_cast<int>(n)},
                         h[2 * n - 2].scaled(Rational(4L * n)), op_b(h[2 * n]));
    });
    add("bprime_odd_action", {static_cast<int>(n)}, [n] {
      const auto h = hermite_sequence(2 * n + 1);
      const XPoly lhs = op_bprime(h[2 * n + 1].scaled(inv_pow2(2 * n + 1)));
      const XPoly expected =
          h[2 * n - 1].scaled(Rational(static_cast<long>(n)) * inv_pow2(2 * n - 1));
      return make_report("bprime_odd_action", {static_cast<int>(n)}, expected, lhs);
    });
  }
  add("bprime_annihilates_h1", {0}, [] {
    return make_report("bprime_annihilates_h1", {0}, XPoly(),
                       op_bprime(hermite_sequence(1)[1]));
  });

  for (unsigned n = 0; n <= max_n; ++n) {
    for (unsigned k = 0; k <= n; ++k) {
      add("bk_scaled", {static_cast<int>(n), static_cast<int>(k)}, [n, k] {
        const auto h = hermite_sequence(2 * n);
        const XPoly lhs = op_b_power(h[2 * n].scaled(inv_pow2(2 * n)), k);
        const XPoly expected = h[2 * (n - k)].scaled(
            factorial(n) / factorial(n - k) * inv_pow2(2 * (n - k)));
        return make_report("bk_scaled", {static_cast<int>(n), static_cast<int>(k)},
                           expected, lhs);
      });
    }
    add("bk_zero", {static_cast<int>(n)}, [n] {
      const auto h = hermite_sequence(2 * n);
      return make_report("bk_zero", {static_cast<int>(n)}, XPoly(),
                         op_b_power(h[2 * n], n + 1));
    });
    add("hodd_byeven", {static_cast<int>(n)}, [n] { return hodd_byeven_check(n); });
    add("phi_ratio", {static_cast<int>(n)},
        [n] { return phi_ratio_identity_check(n); });
  }
  return checks;
}

std::vector<Check> transform_checks(unsigned max_n) {
  std::vector<Check> checks;
  for (unsigned n = 0; n <= max_n; ++n) {
    const int ni = static_cast<int>(n);
    auto target = [n] {
      Rational c = factorial(n);
      if (n % 2 == 1) c = -c;
      return laguerre_radial(n).scaled(c);
    };
    checks.push_back({"transform_even_direct", {ni}, [n, target] {
                        return make_report("transform_even_direct",
                                           {static_cast<int>(n)}, target(),
                                           laguerre_from_hermite_even(n, Route::DirectSum));
                      }});
    checks.push_back({"transform_even_operator", {ni}, [n, target] {
                        return make_report(
                            "transform_even_operator", {static_cast<int>(n)}, target(),
                            laguerre_from_hermite_even(n, Route::OperatorSeries));
                      }});
    checks.push_back({"transform_even_monic", {ni}, [n] {
                        const GScalar lead =
                            laguerre_from_hermite_even(n, Route::DirectSum)
                                .coeff(2 * n);
                        return make_report("transform_even_monic",
                                           {static_cast<int>(n)},
                                           GScalar(Rational(1)), lead);
                      }});
    checks.push_back({"transform_odd_direct", {ni}, [n, target] {
                        return make_report("transform_odd_direct",
                                           {static_cast<int>(n)}, target(),
                                           laguerre_from_hermite_odd(n, Route::DirectSum));
                      }});
    checks.push_back({"transform_odd_operator", {ni}, [n, target] {
                        return make_report(
                            "transform_odd_operator", {static_cast<int>(n)}, target(),
                            laguerre_from_hermite_odd(n, Route::OperatorSeries));
                      }});
    checks.push_back({"inverse_even", {ni}, [n] {
                        const XPoly expected =
                            hermite(2 * n).scaled(inv_pow2(2 * n));
                        return make_report("inverse_even", {static_cast<int>(n)},
                                           expected,
                                           hermite_from_laguerre(n, InverseVariant::Even));
                      }});
    checks.push_back({"inverse_odd_v1", {ni}, [n] {
                        const XPoly expected = hermite(2 * n + 1)
                                                   .divide_by_x()
                                                   .scaled(inv_pow2(2 * n + 1));
                        return make_report("inverse_odd_v1", {static_cast<int>(n)},
                                           expected,
                                           hermite_from_laguerre(n, InverseVariant::OddV1));
                      }});
    checks.push_back({"inverse_odd_v2", {ni}, [n] {
                        const XPoly expected = hermite(2 * n + 1)
                                                   .divide_by_x()
                                                   .scaled(inv_pow2(2 * n + 1));
                        return make_report("inverse_odd_v2", {static_cast<int>(n)},
                                           expected,
                                           hermite_from_laguerre(n, InverseVariant::OddV2));
                      }});
    checks.push_back({"inverse_odd_variants_agree", {ni}, [n] {
                        return make_report("inverse_odd_variants_agree",
                                           {static_cast<int>(n)},
                                           hermite_from_laguerre(n, InverseVariant::OddV1),
                                           hermite_from_laguerre(n, InverseVariant::OddV2));
                      }});
    checks.push_back({"inverse_g_free", {ni}, [n] {
                        VerifyReport r;
                        r.identity = "inverse_g_free";
                        r.indices = {static_cast<int>(n)};
                        const auto even =
                            hermite_from_laguerre(n, InverseVariant::Even).g_degree();
                        const auto odd =
                            hermite_from_laguerre(n, InverseVariant::OddV1).g_degree();
                        const int got = std::max(even.value_or(0), odd.value_or(0));
                        r.pass = (got == 0);
                        r.expected = 0;
                        r.got = got;
                        return r;
                      }});
    checks.push_back({"classic_g0", {ni}, [n] { return classic_g0_check(n); }});
  }
  return checks;
}

std::vector<Check> eigen_checks(unsigned max_n) {
  std::vector<Check> checks;
  for (unsigned n = 0; n <= max_n; ++n) {
    const int ni = static_cast<int>(n);
    checks.push_back({"eigencheck_radial", {ni}, [n] { return eigencheck_radial(n); }});
    checks.push_back(
        {"eigencheck_harmonic", {ni}, [n] { return eigencheck_harmonic(n); }});
  }
  return checks;
}

std::vector<Check> gram_radial_checks(unsigned max_n) {
  std::vector<Check> checks;
  for (unsigned m = 0; m <= max_n; ++m) {
    for (unsigned n = m; n <= max_n; ++n) {
      checks.push_back({"gram_radial", {static_cast<int>(m), static_cast<int>(n)},
                        [m, n] {
                          const MomentValue got = inner_product(
                              laguerre_radial(m), laguerre_radial(n), WeightTag::WeightedG);
                          return make_report("gram_radial",
                                             {static_cast<int>(m), static_cast<int>(n)},
                                             gram_radial_expected(m, n), got);
                        }});
    }
  }
  return checks;
}

std::vector<Check> gram_F_checks(unsigned max_m) {
  std::vector<Check> checks;
  for (unsigned m = 0; m <= max_m; ++m) {
    for (unsigned n = m; n <= max_m; ++n) {
      const std::vector<int> idx{static_cast<int>(m), static_cast<int>(n)};
      checks.push_back({"gram_F", idx, [m, n] {
                          const MomentValue got = inner_product(
                              laguerre_from_hermite_even(m, Route::DirectSum),
                              laguerre_from_hermite_even(n, Route::DirectSum),
                              WeightTag::WeightedG);
                          return make_report("gram_F",
                                             {static_cast<int>(m), static_cast<int>(n)},
                                             gram_F_expected(m, n), got);
                        }});
      checks.push_back({"gram_F_consistency", idx, [m, n] {
                          const MomentValue f = inner_product(
                              laguerre_from_hermite_even(m, Route::DirectSum),
                              laguerre_from_hermite_even(n, Route::DirectSum),
                              WeightTag::WeightedG);
                          Rational c = factorial(m) * factorial(n);
                          if ((m + n) % 2 == 1) c = -c;
                          const MomentValue rescaled =
                              inner_product(laguerre_radial(m), laguerre_radial(n),
                                            WeightTag::WeightedG)
                                  .scaled(c);
                          return make_report("gram_F_consistency",
                                             {static_cast<int>(m), static_cast<int>(n)},
                                             rescaled, f);
                        }});
    }
  }
  return checks;
}

std::vector<Check> gram_hermite_checks(unsigned max_n) {
  std::vector<Check> checks;
  for (unsigned m = 0; m <= max_n; ++m) {
    for (unsigned n = m; n <= max_n; ++n) {
      const std::vector<int> idx{static_cast<int>(m), static_cast<int>(n)};
      checks.push_back({"gram_hermite_halfline_even", idx, [m, n] {
                          const auto h = hermite_sequence(2 * n);
                          const MomentValue got = inner_product(
                              h[2 * m], h[2 * n], WeightTag::GaussHalfline);
                          return make_report(
                              "gram_hermite_halfline_even",
                              {static_cast<int>(m), static_cast<int>(n)},
                              gram_hermite_halfline_expected(Parity::Even, m, n), got);
                        }});
      checks.push_back({"gram_hermite_halfline_odd", idx, [m, n] {
                          const auto h = hermite_sequence(2 * n + 1);
                          const MomentValue got = inner_product(
                              h[2 * m + 1], h[2 * n + 1], WeightTag::GaussHalfline);
                          return make_report(
                              "gram_hermite_halfline_odd",
                              {static_cast<int>(m), static_cast<int>(n)},
                              gram_hermite_halfline_expected(Parity::Odd, m, n), got);
                        }});
      checks.push_back({"gram_hermite_fullline", idx, [m, n] {
                          const auto h = hermite_sequence(n);
                          const MomentValue got =
                              inner_product(h[m], h[n], WeightTag::GaussFullline);
                          return make_report(
                              "gram_hermite_fullline",
                              {static_cast<int>(m), static_cast<int>(n)},
                              gram_hermite_fullline_expected(m, n), got);
                        }});
    }
  }
  return checks;
}

std::vector<Check> identity_checks(unsigned max_n) {
  std::vector<Check> checks;
  for (unsigned n = 0; n <= max_n; ++n) {
    checks.push_back(
        {"id1", {static_cast<int>(n)}, [n] { return identity_check_id1(n); }});
  }
  for (unsigned m = 0; m <= max_n; ++m) {
    for (unsigned l = 0; l <= m; ++l) {
      checks.push_back({"id2", {static_cast<int>(m), static_cast<int>(l)},
                        [m, l] { return identity_check_id2(m, l); }});
    }
  }
  for (unsigned m = 0; m <= max_n; ++m) {
    for (unsigned n = 0; n <= max_n; ++n) {
      checks.push_back({"id3", {static_cast<int>(m), static_cast<int>(n)},
                        [m, n] { return identity_check_id3(m, n); }});
    }
  }
  return checks;
}

std::vector<Check> quadrature_checks(unsigned max_mn) {
  std::vector<Check> checks;

  checks.push_back({"quad_rule_hermite_2pt", {2}, [] {
                      const QuadRule rule = build_rule(QuadRule::Kind::GaussHermite, 2);
                      const double node = 1.0 / std::sqrt(2.0);
                      const double weight = std::sqrt(M_PI) / 2.0;
                      const double err = std::max(
                          {std::abs(rule.nodes[0] + node), std::abs(rule.nodes[1] - node),
                           std::abs(rule.weights[0] - weight),
                           std::abs(rule.weights[1] - weight)});
                      VerifyReport r;
                      r.identity = "quad_rule_hermite_2pt";
                      r.indices = {2};
                      r.pass = err < 1e-13;
                      r.expected = {{"nodes", {-node, node}}, {"weights", {weight, weight}}};
                      r.got = {{"nodes", rule.nodes}, {"weights", rule.weights}};
                      return r;
                    }});

  // Exactness order: every monomial of degree <= 2m-1 against the rule weight.
  for (int m = 1; m <= 16; ++m) {
    checks.push_back({"quad_exactness_hermite", {m}, [m] {
                        const QuadRule rule =
                            build_rule(QuadRule::Kind::GaussHermite, m);
                        double worst = 0.0;
                        for (int d = 0; d <= 2 * m - 1; ++d) {
                          // odd moments vanish by cancellation; scale by the
                          // unsigned term magnitude
                          double numeric = 0.0, scale = 1.0;
                          for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
                            const double term =
                                rule.weights[i] * ipow(rule.nodes[i], d);
                            numeric += term;
                            scale += std::abs(term);
                          }
                          const double exact = moment_value_eval(
                              moment(WeightTag::GaussFullline, static_cast<unsigned>(d)),
                              Rational(0));
                          worst = std::max(worst, std::abs(numeric - exact) /
                                                      std::max(scale, std::abs(exact)));
                        }
                        return report_number("quad_exactness_hermite", {m}, 0.0, worst,
                                             1e-11);
                      }});
  }
  const std::vector<Rational> gvals{Rational(3, 2), Rational(5, 2), Rational(7, 4)};
  for (int m = 1; m <= 16; ++m) {
    for (std::size_t gi = 0; gi < gvals.size(); ++gi) {
      const std::string id = "quad_exactness_laguerre(g=" + gvals[gi].str() + ")";
      checks.push_back({id, {m, static_cast<int>(gi)}, [m, gi, id, gvals] {
                          const double alpha = gvals[gi].to_double() - 0.5;
                          const QuadRule rule =
                              build_rule(QuadRule::Kind::GaussLaguerre, m, alpha);
                          double worst = 0.0;
                          for (int d = 0; d <= 2 * m - 1; ++d) {
                            double numeric = 0.0;
                            for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
                              numeric += rule.weights[i] * ipow(rule.nodes[i], d);
                            }
                            // int_0^inf eta^(alpha+d) e^-eta = Gamma(alpha+d+1)
                            const double exact = gamma_real(alpha + d + 1.0);
                            worst = std::max(worst,
                                             std::abs(numeric - exact) / std::abs(exact));
                          }
                          return report_number(id, {m, static_cast<int>(gi)}, 0.0,
                                               worst, 1e-11);
                        }});
    }
  }

  // Cross-validation of the weighted half-line Gram entries at numeric g.
  for (std::size_t gi = 0; gi < gvals.size(); ++gi) {
    const Rational gval = gvals[gi];
    const auto rule = std::make_shared<QuadRule>(
        build_rule(QuadRule::Kind::GaussLaguerre, 24, gval.to_double() - 0.5));
    for (unsigned m = 0; m <= max_mn; ++m) {
      for (unsigned n = m; n <= max_mn; ++n) {
        const std::string id = "quad_cross_radial(g=" + gval.str() + ")";
        checks.push_back(
            {id, {static_cast<int>(m), static_cast<int>(n)}, [m, n, gval, rule, id] {
               const XPoly pm = laguerre_radial(m);
               const XPoly pn = laguerre_radial(n);
               const double numeric = numeric_inner_product(pm, pn, gval, *rule);
               const double exact = moment_value_eval(
                   inner_product(pm, pn, WeightTag::WeightedG), gval);
               const double diag_m = moment_value_eval(gram_radial_expected(m, m), gval);
               const double diag_n = moment_value_eval(gram_radial_expected(n, n), gval);
               const double tol = (m == n) ? 1e-9 * std::abs(exact)
                                           : 1e-9 * std::sqrt(diag_m * diag_n);
               return report_number(id, {static_cast<int>(m), static_cast<int>(n)},
                                    exact, numeric, tol);
             }});
      }
    }
  }
  {
    const auto rule =
        std::make_shared<QuadRule>(build_rule(QuadRule::Kind::GaussHermite, 24));
    for (unsigned m = 0; m <= max_mn; ++m) {
      for (unsigned n = m; n <= max_mn; ++n) {
        checks.push_back(
            {"quad_cross_fullline", {static_cast<int>(m), static_cast<int>(n)},
             [m, n, rule] {
               const auto h = hermite_sequence(n);
               const double numeric =
                   numeric_inner_product(h[m], h[n], Rational(0), *rule);
               const double exact = moment_value_eval(
                   gram_hermite_fullline_expected(m, n), Rational(0));
               const double diag_m = moment_value_eval(
                   gram_hermite_fullline_expected(m, m), Rational(0));
               const double diag_n = moment_value_eval(
                   gram_hermite_fullline_expected(n, n), Rational(0));
               const double tol = (m == n) ? 1e-9 * std::abs(exact)
                                           : 1e-9 * std::sqrt(diag_m * diag_n);
               return report_number("quad_cross_fullline",
                                    {static_cast<int>(m), static_cast<int>(n)}, exact,
                                    numeric, tol);
             }});
      }
    }
  }
  return checks;
}

std::vector<Check> enumerate_checks(Suite suite, unsigned max_n) {
  std::vector<Check> checks;
  auto append = [&](std::vector<Check> more) {
    for (auto& c : more) checks.push_back(std::move(c));
  };
  switch (suite) {
    case Suite::Ladders:
      return ladder_checks(max_n);
    case Suite::Transforms:
      return transform_checks(max_n);
    case Suite::Eigen:
      return eigen_checks(max_n);
    case Suite::Gram:
      append(gram_radial_checks(max_n));
      append(gram_F_checks(max_n));
      append(gram_hermite_checks(max_n));
      return checks;
    case Suite::Identities:
      return identity_checks(max_n);
    case Suite::Quadrature:
      return quadrature_checks(std::min(max_n, 8u));
    case Suite::All:
      append(ladder_checks(max_n));
      append(transform_checks(max_n));
      append(eigen_checks(max_n));
      append(gram_radial_checks(max_n));
      append(gram_F_checks(max_n));
      append(gram_hermite_checks(max_n));
      append(identity_checks(max_n));
      append(quadrature_checks(std::min(max_n, 8u)));
      return checks;
  }
  throw std::logic_error("enumerate_checks: unknown suite");
}

VerifyTotals run_checks(const std::vector<Check>& checks, unsigned jobs,
                        const std::function<void(const VerifyReport&)>& sink) {
  VerifyTotals totals;
  totals.total = checks.size();

  auto run_one = [](const Check& c) -> VerifyReport {
    try {
      return c.run();
    } catch (const std::exception& e) {
      VerifyReport r;
      r.identity = c.identity;
      r.indices = c.indices;
      r.pass = false;
      r.got = nlohmann::json{{"exception", e.what()}};
      return r;
    }
  };

  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  if (jobs == 1 || checks.size() <= 1) {
    for (const auto& c : checks) {
      const VerifyReport r = run_one(c);
      if (r.pass) ++totals.passed;
      if (sink) sink(r);
    }
    return totals;
  }

  std::vector<std::unique_ptr<VerifyReport>> slots(checks.size());
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::condition_variable cv;
  std::size_t done = 0;

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= checks.size()) return;
      auto r = std::make_unique<VerifyReport>(run_one(checks[i]));
      {
        std::lock_guard<std::mutex> lock(mu);
        slots[i] = std::move(r);
        ++done;
      }
      cv.notify_one();
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(jobs);
  for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);

  // Drain in index order, streaming each prefix as soon as it is complete.
  std::size_t emitted = 0;
  {
    std::unique_lock<std::mutex> lock(mu);
    while (emitted < checks.size()) {
      cv.wait(lock, [&] { return slots[emitted] != nullptr || done == checks.size(); });
      while (emitted < checks.size() && slots[emitted] != nullptr) {
        const VerifyReport& r = *slots[emitted];
        if (r.pass) ++totals.passed;
        if (sink) sink(r);
        slots[emitted].reset();
        ++emitted;
      }
    }
  }
  for (auto& t : pool) t.join();
  return totals;
}

}  // namespace oscpoly
