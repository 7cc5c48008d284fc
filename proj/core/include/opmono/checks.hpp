#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace opmono {

struct CheckOptions {
  std::uint64_t seed = 0;
};

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;  // first counterexample or exception text; empty on success
  double seconds = 0;
};

struct CheckSpec {
  std::string suite;
  std::string name;
  std::function<CheckResult(const CheckOptions&)> run;
};

/// Every invariant check, grouped by suite: partitions, oracle, cumulants,
/// series, clt.
const std::vector<CheckSpec>& all_checks();
std::vector<std::string> suite_names();

/// Runs the checks of one suite ("all" runs every suite) in registry order.
/// Exceptions inside a check are reported as failures. Throws
/// std::invalid_argument for an unknown suite.
std::vector<CheckResult> run_suite(const std::string& suite, const CheckOptions& options,
                                   const std::function<void(const CheckResult&)>& on_result = {});

/// Runs a single named check. Throws std::invalid_argument if unknown.
CheckResult run_check(const std::string& name, const CheckOptions& options);

}  // namespace opmono
