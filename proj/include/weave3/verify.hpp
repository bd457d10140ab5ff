#pragma once

#include <string>
#include <vector>

namespace weave3 {

struct VerifyOptions {
  long max_n = 30;
  long max_m = 4;
  std::vector<std::string> suites = {"all"};
  // 0 means pick a default from the hardware; callers may cap it from the
  // WEAVE_THREADS environment variable.
  unsigned threads = 0;
  // Test-harness hook: corrupt one Whitney seed value so the whitney suite
  // must fail with a located mismatch.
  bool inject_whitney_fault = false;
};

struct SuiteResult {
  std::string suite;
  bool passed = false;
  long cases = 0;
  double seconds = 0.0;
  std::string detail;  // first (n, m, k) mismatch when failed, empty when passed
};

/// Runs the selected identity suites over the configured ranges.  Work
/// items fan out across threads; results are reported in deterministic
/// order (suite, then n, then m) regardless of execution order.
///
/// Suites: trace, jones, alexander-routes, whitney-routes, determinant,
/// zeros, shape — or all.
std::vector<SuiteResult> run_verification(const VerifyOptions& options);

/// Informational notes about convention decisions the toolkit makes where
/// published statements of these identities disagree with one another.
/// Every suite passes under the documented resolutions.
std::vector<std::string> verification_notes();

bool all_passed(const std::vector<SuiteResult>& results);

}  // namespace weave3
