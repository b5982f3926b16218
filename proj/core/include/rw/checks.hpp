#pragma once

#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace rw {

struct CheckResult {
  bool pass = false;
  std::string detail; // one-line summary; on failure, the first counterexample
  double seconds = 0.0;
};

/// One verification check. `criterion` ties it to the numbered acceptance
/// criteria (1..9); 0 marks supplementary cross-validation checks. `run`
/// never throws: errors are converted into failing results.
struct Check {
  std::string id;
  int criterion = 0;
  std::string description;
  std::function<CheckResult()> run;
};

/// The full verification suite, in execution order.
const std::vector<Check>& verification_checks();

/// Runs the checks (all of them, or only the ones tagged with `criterion`
/// when it is positive), streaming one "PASS/FAIL id (seconds) detail"
/// line each; returns the number of failures.
int run_verification_checks(std::ostream& out, int criterion = 0);

} // namespace rw
