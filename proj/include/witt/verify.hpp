#pragma once

#include <string>
#include <vector>

#include "witt/json_io.hpp"

namespace witt {

struct ClaimResult {
  std::string id;         ///< stable across releases
  std::string statement;  ///< what is being checked, in mathematical terms
  std::string expected;
  std::string computed;
  bool pass = false;
  double millis = 0.0;
};

struct VerifyReport {
  std::vector<ClaimResult> claims;  ///< sorted by id
  bool all_pass = true;
};

/// Runs the desk-scale verification suite. scope = "all" runs everything;
/// otherwise only claims whose id contains the scope tag are run. Unknown
/// tags yield an empty, passing report.
VerifyReport verify_suite(const std::string& scope = "all");

Json json_of(const VerifyReport& report);

}  // namespace witt
