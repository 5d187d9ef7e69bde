// Acceptance suite: runs every verification claim at its documented
// tolerance against the default configuration and prints one line per
// criterion. Exits nonzero if any criterion fails.

#include <cstdio>

#include "lagfill/report.hpp"

int main() {
  lagfill::RunConfig config;  // pinned defaults: n = 7, identity cutoff,
                              // census 200, residual 500^2, spun 50^3,
                              // 1e4 samples, 1e5 positivity samples, shift 4
  const lagfill::VerificationReport report = lagfill::run_verification(config);

  int criterion = 0;
  int failures = 0;
  for (const lagfill::ClaimResult& c : report.claims) {
    ++criterion;
    if (!c.pass) ++failures;
    std::printf("[%s] criterion %2d %-30s tol=%g  %s\n",
                c.pass ? "PASS" : "FAIL", criterion, c.id.c_str(), c.tolerance,
                c.statement.c_str());
    if (!c.pass && !c.note.empty()) std::printf("       note: %s\n", c.note.c_str());
  }
  std::printf("%d/%d acceptance criteria pass\n", criterion - failures, criterion);
  return failures == 0 ? 0 : 1;
}
