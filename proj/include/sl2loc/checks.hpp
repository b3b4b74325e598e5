#pragma once

#include <string>
#include <vector>

#include "sl2loc/classify.hpp"
#include "sl2loc/diagram.hpp"
#include "sl2loc/derive_doc.hpp"

namespace sl2loc::checks {

struct CheckOptions {
  long window = 60;
  std::vector<long> ts = {1, 2, 3, 4, 5, 6};
  std::vector<Rational> etas = {Rational(0), Rational(1), Rational(-2), Rational(3, 2)};
  /// When nonempty, the named golden comparison has one computed coefficient
  /// perturbed before the comparison; the run must then fail naming it.
  std::string inject_fault;
};

struct CheckResult {
  std::string id;
  bool pass = false;
  std::string detail;  // first counterexample on failure
};

/// Runs the full invariant and golden-table suite.
std::vector<CheckResult> run_all(const CheckOptions& opts);

/// Acceptance criteria: 1-based labels and the check ids backing each one.
int criteria_count();
std::string criterion_label(int criterion);
std::vector<std::string> criterion_check_ids(int criterion);

std::string summary_text(const std::vector<CheckResult>& results);
std::string summary_json(const std::vector<CheckResult>& results);
bool all_passed(const std::vector<CheckResult>& results);

}  // namespace sl2loc::checks
