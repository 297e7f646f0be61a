#pragma once

#include <functional>
#include <string>
#include <vector>

#include "oscpoly/verify_report.hpp"

namespace oscpoly {

enum class Suite { Ladders, Transforms, Eigen, Gram, Identities, Quadrature, All };

Suite suite_from_string(const std::string& name);

/// One deferred identity instance; run() is pure and safe to call from any
/// worker thread.
struct Check {
  std::string identity;
  std::vector<int> indices;
  std::function<VerifyReport()> run;
};

// Per-family check builders. max_n bounds every index sweep.
std::vector<Check> ladder_checks(unsigned max_n);
std::vector<Check> transform_checks(unsigned max_n);
std::vector<Check> eigen_checks(unsigned max_n);
std::vector<Check> gram_radial_checks(unsigned max_n);
std::vector<Check> gram_F_checks(unsigned max_m);
std::vector<Check> gram_hermite_checks(unsigned max_n);
std::vector<Check> identity_checks(unsigned max_n);
std::vector<Check> quadrature_checks(unsigned max_mn);

std::vector<Check> enumerate_checks(Suite suite, unsigned max_n);

struct VerifyTotals {
  std::size_t total = 0;
  std::size_t passed = 0;
  bool all_passed() const { return passed == total; }
};

/// Runs the checks on `jobs` worker threads (0 = hardware concurrency) and
/// feeds finished reports to `sink` in deterministic index order, streaming
/// as soon as each prefix completes.
VerifyTotals run_checks(const std::vector<Check>& checks, unsigned jobs,
                        const std::function<void(const VerifyReport&)>& sink);

}  // namespace oscpoly
