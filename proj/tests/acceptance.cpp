// Acceptance suite: runs every verification claim and prints one line per
// criterion. Exit code is nonzero iff any claim fails.
#include <cstdio>

#include "witt/verify.hpp"

int main() {
  witt::VerifyReport report = witt::verify_suite("all");
  for (const witt::ClaimResult& c : report.claims)
    std::printf("[%s] %-24s %8.1f ms  %s\n", c.pass ? "PASS" : "FAIL",
                c.id.c_str(), c.millis, c.computed.c_str());
  std::printf("%s\n", report.all_pass ? "acceptance: all criteria pass"
                                      : "acceptance: FAILURES PRESENT");
  return report.all_pass ? 0 : 1;
}
