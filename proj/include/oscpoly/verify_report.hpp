#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "oscpoly/serialize.hpp"

namespace oscpoly {

/// Structured pass/fail record for one identity instance. Checks never throw
/// on mathematical inequality; a failed equality is a failing report.
struct VerifyReport {
  std::string identity;
  std::vector<int> indices;
  bool pass = false;
  nlohmann::json expected;
  nlohmann::json got;

  nlohmann::json to_json() const {
    return nlohmann::json{{"identity", identity},
                          {"indices", indices},
                          {"pass", pass},
                          {"expected", expected},
                          {"got", got}};
  }
};

inline VerifyReport make_report(std::string identity, std::vector<int> indices,
                                const XPoly& expected, const XPoly& got) {
  VerifyReport r;
  r.identity = std::move(identity);
  r.indices = std::move(indices);
  r.pass = (expected == got);
  r.expected = to_json(expected);
  r.got = to_json(got);
  return r;
}

inline VerifyReport make_report(std::string identity, std::vector<int> indices,
                                const GScalar& expected, const GScalar& got) {
  VerifyReport r;
  r.identity = std::move(identity);
  r.indices = std::move(indices);
  r.pass = (expected == got);
  r.expected = to_json(expected);
  r.got = to_json(got);
  return r;
}

inline VerifyReport make_report(std::string identity, std::vector<int> indices,
                                const MomentValue& expected, const MomentValue& got) {
  VerifyReport r;
  r.identity = std::move(identity);
  r.indices = std::move(indices);
  r.pass = (expected == got);
  r.expected = to_json(expected);
  r.got = to_json(got);
  return r;
}

}  // namespace oscpoly
