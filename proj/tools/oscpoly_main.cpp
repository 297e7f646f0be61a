// Command-line surface: generate polynomials, run the Hermite<->Laguerre
// transforms, sweep the verification suites, and export Gram matrices and
// quadrature rules as JSON/CSV/pretty text.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "oscpoly/classical.hpp"
#include "oscpoly/moments.hpp"
#include "oscpoly/quadrature.hpp"
#include "oscpoly/serialize.hpp"
#include "oscpoly/transforms.hpp"
#include "oscpoly/verify.hpp"

namespace {

using nlohmann::json;
using namespace oscpoly;

constexpr unsigned kDefaultMaxN = 32;

unsigned default_max_n() {
  if (const char* env = std::getenv("OSCPOLY_MAX_N")) {
    try {
      const long v = std::stol(env);
      if (v >= 0) return static_cast<unsigned>(v);
    } catch (...) {
      // fall through to the built-in default
    }
  }
  return kDefaultMaxN;
}

std::string poly_csv(const XPoly& p) {
  // one row per x-power, comma-joined g-coefficients
  std::string out;
  for (const auto& c : p.coeffs()) {
    std::string row;
    if (c.is_zero()) {
      row = "0";
    } else {
      for (std::size_t i = 0; i < c.coeffs().size(); ++i) {
        if (i) row += ",";
        row += c.coeffs()[i].str();
      }
    }
    out += row + "\n";
  }
  return out;
}

void print_poly(const XPoly& p, const std::string& format,
                const std::optional<Rational>& gval) {
  const XPoly out = gval ? p.specialize_g(*gval) : p;
  if (format == "json") {
    std::cout << to_json(out).dump() << "\n";
  } else if (format == "csv") {
    std::cout << poly_csv(out);
  } else {
    std::cout << out.str() << "\n";
  }
}

void print_matrix(const MomentMatrix& matrix, const std::string& format,
                  const std::optional<Rational>& gval) {
  auto cell = [&](const MomentValue& v) {
    if (!gval) return v;
    return MomentValue::of_one(GScalar(v.one().eval(*gval))) +
           MomentValue::of_sqrt_pi(GScalar(v.sqrt_pi().eval(*gval))) +
           MomentValue::of_gamma_g_half(GScalar(v.gamma_g_half().eval(*gval)));
  };
  if (format == "json") {
    json rows = json::array();
    for (const auto& row : matrix) {
      json r = json::array();
      for (const auto& v : row) r.push_back(to_json(cell(v)));
      rows.push_back(std::move(r));
    }
    std::cout << rows.dump() << "\n";
  } else if (format == "csv") {
    for (const auto& row : matrix) {
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (j) std::cout << ",";
        std::cout << csv_escape(moment_value_csv_cell(cell(row[j])));
      }
      std::cout << "\n";
    }
  } else {
    for (const auto& row : matrix) {
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (j) std::cout << "  |  ";
        std::cout << cell(row[j]).str();
      }
      std::cout << "\n";
    }
  }
}

XPoly generate(PolyFamily family, unsigned n) {
  switch (family) {
    case PolyFamily::Hermite:
      return hermite(n);
    case PolyFamily::LaguerreRadial:
      return laguerre_radial(n);
  }
  throw std::logic_error("generate: unknown family");
}

TransformDirection direction_from_string(const std::string& s) {
  if (s == "laguerre-from-even") return TransformDirection::LaguerreFromEven;
  if (s == "laguerre-from-odd") return TransformDirection::LaguerreFromOdd;
  if (s == "even-from-laguerre") return TransformDirection::EvenFromLaguerre;
  if (s == "odd-from-laguerre-v1") return TransformDirection::OddFromLaguerreV1;
  return TransformDirection::OddFromLaguerreV2;
}

std::string indices_str(const std::vector<int>& idx) {
  std::string s = "[";
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(idx[i]);
  }
  return s + "]";
}

int run_verify(const std::string& suite_name, unsigned max_n, unsigned jobs,
               const std::string& format) {
  const Suite suite = suite_from_string(suite_name);
  const std::vector<Check> checks = enumerate_checks(suite, max_n);
  std::size_t failures = 0;
  auto sink = [&](const VerifyReport& r) {
    if (!r.pass) ++failures;
    if (format == "json") {
      std::cout << r.to_json().dump() << "\n";
    } else if (format == "csv") {
      std::cout << csv_escape(r.identity) << "," << csv_escape(indices_str(r.indices))
                << "," << (r.pass ? "pass" : "fail") << "\n";
    } else {
      std::cout << (r.pass ? "ok   " : "FAIL ") << r.identity << " "
                << indices_str(r.indices) << "\n";
      if (!r.pass) {
        std::cout << "     expected: " << r.expected.dump() << "\n"
                  << "     got:      " << r.got.dump() << "\n";
      }
    }
  };
  const VerifyTotals totals = run_checks(checks, jobs, sink);
  if (format == "json") {
    std::cout << json{{"total", totals.total}, {"passed", totals.passed}}.dump()
              << "\n";
  } else if (format == "csv") {
    std::cout << "total," << totals.total << "," << totals.passed << "\n";
  } else {
    std::cout << totals.passed << "/" << totals.total << " checks passed\n";
  }
  return totals.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Hermite/Laguerre engine: free-oscillator transforms, "
               "orthogonality, and verification suites over Q[g][x]"};
  app.require_subcommand(1);

  std::string format = "json";
  std::string g_str;
  unsigned max_n = default_max_n();

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format: json, csv, or pretty")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));
  };
  auto add_g = [&](CLI::App* cmd) {
    cmd->add_option("--g", g_str,
                    "Specialize the coupling g to a rational value p/q "
                    "(default: symbolic)");
  };

  unsigned n = 0;

  CLI::App* hermite_cmd = app.add_subcommand("hermite", "Print H_n(x)");
  hermite_cmd->add_option("--n", n, "Degree index")->required();
  add_format(hermite_cmd);
  add_g(hermite_cmd);

  CLI::App* laguerre_cmd =
      app.add_subcommand("laguerre", "Print L_n^(g-1/2)(x^2), the radial polynomial part");
  laguerre_cmd->add_option("--n", n, "Degree index")->required();
  add_format(laguerre_cmd);
  add_g(laguerre_cmd);

  CLI::App* transform_cmd = app.add_subcommand(
      "transform", "Hermite<->Laguerre transforms; prints the resulting polynomial");
  std::string direction;
  std::string route = "direct";
  transform_cmd
      ->add_option("--direction", direction,
                   "laguerre-from-even, laguerre-from-odd, even-from-laguerre, "
                   "odd-from-laguerre-v1, odd-from-laguerre-v2")
      ->required()
      ->check(CLI::IsMember({"laguerre-from-even", "laguerre-from-odd",
                             "even-from-laguerre", "odd-from-laguerre-v1",
                             "odd-from-laguerre-v2"}));
  transform_cmd->add_option("--route", route, "direct or operator (forward maps only)")
      ->check(CLI::IsMember({"direct", "operator"}));
  transform_cmd->add_option("--n", n, "Degree index")->required();
  add_format(transform_cmd);
  add_g(transform_cmd);

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Run a verification suite; exit 0 iff all pass");
  std::string suite = "all";
  unsigned jobs = 0;
  verify_cmd
      ->add_option("--suite", suite,
                   "ladders, transforms, eigen, gram, identities, quadrature, all")
      ->check(CLI::IsMember({"ladders", "transforms", "eigen", "gram", "identities",
                             "quadrature", "all"}));
  verify_cmd->add_option("--max-n", max_n, "Degree cap for all index sweeps");
  verify_cmd->add_option("--jobs", jobs,
                         "Worker threads (default: available parallelism)");
  add_format(verify_cmd);

  CLI::App* gram_cmd = app.add_subcommand("gram", "Print a Gram matrix");
  std::string family;
  gram_cmd
      ->add_option("--family", family,
                   "radial, F, hermite-halfline-even, hermite-halfline-odd, "
                   "hermite-fullline")
      ->required()
      ->check(CLI::IsMember({"radial", "F", "hermite-halfline-even",
                             "hermite-halfline-odd", "hermite-fullline"}));
  gram_cmd->add_option("--max-n", max_n, "Largest index (matrix is (max-n+1)^2)");
  add_format(gram_cmd);
  add_g(gram_cmd);

  CLI::App* quad_cmd = app.add_subcommand("quad", "Build a Gaussian quadrature rule");
  std::string kind = "hermite";
  double alpha = 0.0;
  unsigned points = 8;
  bool dump = false;
  quad_cmd->add_option("--kind", kind, "hermite or laguerre")
      ->check(CLI::IsMember({"hermite", "laguerre"}));
  quad_cmd->add_option("--alpha", alpha, "Laguerre weight exponent (> -1)");
  quad_cmd->add_option("--m", points, "Number of points")->check(CLI::PositiveNumber);
  quad_cmd->add_flag("--dump", dump, "Print the node/weight pairs as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ||
        e.get_name() == "CallForVersion") {
      return app.exit(e);
    }
    std::cerr << e.what() << "\n\n" << app.help() << std::flush;
    return 2;
  }

  try {
    std::optional<Rational> gval;
    if (!g_str.empty()) gval = Rational::parse(g_str);

    if (app.got_subcommand(hermite_cmd)) {
      print_poly(generate(PolyFamily::Hermite, n), format, gval);
      return 0;
    }
    if (app.got_subcommand(laguerre_cmd)) {
      print_poly(generate(PolyFamily::LaguerreRadial, n), format, gval);
      return 0;
    }
    if (app.got_subcommand(transform_cmd)) {
      const Route r =
          (route == "operator") ? Route::OperatorSeries : Route::DirectSum;
      print_poly(apply_transform(direction_from_string(direction), r, n), format,
                 gval);
      return 0;
    }
    if (app.got_subcommand(verify_cmd)) {
      return run_verify(suite, max_n, jobs, format);
    }
    if (app.got_subcommand(gram_cmd)) {
      MomentMatrix matrix;
      if (family == "radial") {
        matrix = gram_radial(max_n);
      } else if (family == "F") {
        matrix = gram_F(max_n);
      } else if (family == "hermite-halfline-even") {
        matrix = gram_hermite_halfline(Parity::Even, max_n);
      } else if (family == "hermite-halfline-odd") {
        matrix = gram_hermite_halfline(Parity::Odd, max_n);
      } else {
        matrix = gram_hermite_fullline(max_n);
      }
      print_matrix(matrix, format, gval);
      return 0;
    }
    if (app.got_subcommand(quad_cmd)) {
      const QuadRule rule =
          (kind == "hermite")
              ? build_rule(QuadRule::Kind::GaussHermite, static_cast<int>(points))
              : build_rule(QuadRule::Kind::GaussLaguerre, static_cast<int>(points),
                           alpha);
      if (dump) {
        json pairs = json::array();
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
          pairs.push_back({rule.nodes[i], rule.weights[i]});
        }
        std::cout << pairs.dump() << "\n";
      } else {
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
          std::cout << rule.nodes[i] << " " << rule.weights[i] << "\n";
        }
      }
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
