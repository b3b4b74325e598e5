// Acceptance suite: runs every check backing the project's acceptance
// criteria at window 60, t = 1..6, eta in {0, 1, -2, 3/2}, and prints one
// pass/fail line per criterion. Exact rational arithmetic throughout, so
// every comparison is exact equality. Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <map>
#include <set>

#include "sl2loc/checks.hpp"

int main() {
  using namespace sl2loc;
  const auto start = std::chrono::steady_clock::now();

  checks::CheckOptions opts;  // window 60, t 1..6, eta {0, 1, -2, 3/2}
  std::vector<checks::CheckResult> results = checks::run_all(opts);

  std::map<std::string, const checks::CheckResult*> by_id;
  for (const auto& r : results) by_id[r.id] = &r;

  int failures = 0;
  std::set<std::string> used;
  for (int c = 1; c <= checks::criteria_count(); ++c) {
    bool pass = true;
    std::string detail;
    for (const std::string& id : checks::criterion_check_ids(c)) {
      used.insert(id);
      auto it = by_id.find(id);
      if (it == by_id.end()) {
        pass = false;
        detail = "missing check " + id;
        break;
      }
      if (!it->second->pass) {
        pass = false;
        detail = id + ": " + it->second->detail;
        break;
      }
    }
    if (!pass) ++failures;
    std::printf("criterion %2d: %s — %s\n", c, pass ? "PASS" : "FAIL",
                checks::criterion_label(c).c_str());
    if (!pass) std::printf("              %s\n", detail.c_str());
  }

  // supporting invariants not tied to a single criterion
  int extra_failed = 0;
  for (const auto& r : results) {
    if (used.count(r.id)) continue;
    if (!r.pass) {
      ++extra_failed;
      std::printf("supporting    FAIL %s: %s\n", r.id.c_str(), r.detail.c_str());
    }
  }

  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  std::printf("%d/%d criteria passed, %zu checks total, %lld ms\n",
              checks::criteria_count() - failures, checks::criteria_count(),
              results.size(), static_cast<long long>(elapsed));
  if (elapsed > 30000) {
    std::printf("FAIL: suite exceeded the 30 second budget\n");
    return 1;
  }
  return failures == 0 && extra_failed == 0 ? 0 : 1;
}
