// Runs the full acceptance suite: one line per criterion, nonzero exit if
// any fails.
#include <cstdio>

#include "rootpoly/paper_checks.hpp"

int main() {
  bool all = true;
  for (const rootpoly::CheckResult& r : rootpoly::run_paper_checks()) {
    std::printf("[%s] %2d %-24s expected: %s | computed: %s (%.2fs)\n", r.pass ? "PASS" : "FAIL", r.id,
                r.name.c_str(), r.expected.c_str(), r.computed.c_str(), r.seconds);
    std::fflush(stdout);
    all = all && r.pass;
  }
  std::printf("%s\n", all ? "acceptance: all criteria pass" : "acceptance: FAILURES PRESENT");
  return all ? 0 : 1;
}
