#pragma once

#include <cstdint>
#include <json.hpp>
#include <string>
#include <vector>

namespace littlent {

// Randomized check suites for the continuity inequalities. Every check is a
// proved inequality evaluated numerically, so any failure is a defect; the
// failing instance is serialized for reproduction.
struct SuiteResult {
  std::string name;
  int passed = 0;
  int failed = 0;
  std::vector<nlohmann::json> failures;
  nlohmann::json params;

  bool ok() const { return failed == 0; }
  void record(bool pass, const nlohmann::json& instance);
};

struct VerifyConfig {
  std::uint64_t seed = 1;
  int samples = 100;
  int n = 10;          // qubit count for sampled-state suites
  double eps = 0.01;   // radius for sampled-state suites
  int counterexample_m = 10;
  double counterexample_alpha = 0.5;
  int threads = 1;
  bool inject_violation = false;  // harness self-test: one fabricated failure
};

SuiteResult suite_fannes(const VerifyConfig& cfg);
SuiteResult suite_entropy_bound(const VerifyConfig& cfg);
SuiteResult suite_tensor_power(const VerifyConfig& cfg);
SuiteResult suite_polynomial(const VerifyConfig& cfg);
SuiteResult suite_witness(const VerifyConfig& cfg);
SuiteResult suite_observation3(const VerifyConfig& cfg);
SuiteResult suite_counterexample(const VerifyConfig& cfg);

std::vector<std::string> verify_suite_names();
SuiteResult run_suite(const std::string& name, const VerifyConfig& cfg);

nlohmann::json verify_report(const std::vector<SuiteResult>& suites,
                             const VerifyConfig& cfg);

}  // namespace littlent
