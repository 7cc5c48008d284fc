// One line per acceptance criterion. Usage: acceptance <cli> <data dir> <golden dir>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "opmono/checks.hpp"
#include "opmono/partitions.hpp"
#include "process.hpp"

using namespace opmono;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void fail(const std::string& why) {
    if (passed) detail = why;
    else detail += "; " + why;
    passed = false;
  }
};

struct Paths {
  std::string cli;
  fs::path data;
  fs::path golden;
};

Outcome checks(std::initializer_list<const char*> names) {
  Outcome o;
  for (const char* name : names) {
    const CheckResult r = run_check(name, CheckOptions{0});
    if (!r.passed) o.fail(std::string(name) + ": " + r.detail);
  }
  return o;
}

testing::ProcessResult cli(const Paths& p, std::vector<std::string> args) {
  args.insert(args.begin(), p.cli);
  return testing::run_process(args);
}

Outcome qmap_goldens(const Paths& p) {
  Outcome o = checks({"worked_examples"});
  const BlockList expected{{1}, {2, 6}, {3, 4}, {5}, {7}};
  const SetPartition got = q_map(OrderedPartition(7, {{1, 3, 4}, {5, 7}, {2, 6}}));
  if (got.blocks() != expected) {
    o.fail("q_map([[1,3,4],[5,7],[2,6]]) = " + to_string(got.blocks()) + ", reference " + to_string(expected));
  }
  const auto r = cli(p, {"qmap", "--ordered", "[[1,3,4],[5,7],[2,6]]"});
  if (r.exit_code != 0 || r.out != testing::read_file(p.golden / "reference" / "qmap_reference.json")) {
    o.fail("cli qmap differs from the reference golden");
  }
  return o;
}

Outcome cli_criterion(const Paths& p) {
  Outcome o;
  for (const auto& c : testing::load_cases(p.golden / "cases.txt", (p.data / "models").string())) {
    const auto first = cli(p, c.args);
    const auto second = cli(p, c.args);
    if (first.exit_code != 0) o.fail(c.name + " exited " + std::to_string(first.exit_code));
    else if (first.out != second.out) o.fail(c.name + " is not byte-stable");
    else if (first.out != testing::read_file(p.golden / (c.name + ".json"))) o.fail(c.name + " differs from golden");
  }
  const auto start = std::chrono::steady_clock::now();
  const auto r = cli(p, {"check", "--suite", "all"});
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (r.exit_code != 0) o.fail("check --suite all exited " + std::to_string(r.exit_code));
  if (secs >= 300) o.fail("check --suite all took " + std::to_string(secs) + " s");
  if (o.passed) o.detail = "check --suite all: " + std::to_string(static_cast<int>(secs)) + " s";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 4) {
    std::cerr << "usage: acceptance <cli> <data dir> <golden dir>\n";
    return 1;
  }
  const Paths paths{argv[1], argv[2], argv[3]};

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"partition counts", [] { return checks({"nc_counts", "monotone_counts"}); }},
      {"q-map goldens", [&] { return qmap_goldens(paths); }},
      {"reduction equals q-map", [] { return checks({"reduction_equals_qmap"}); }},
      {"reduction confluence", [] { return checks({"reduction_confluence"}); }},
      {"cumulant dual method", [] { return checks({"interpolation_equals_inversion", "extra_point_guard"}); }},
      {"moment-cumulant formula", [] { return checks({"moment_cumulant_roundtrip", "low_order_formulas"}); }},
      {"additivity", [] { return checks({"additivity"}); }},
      {"dot associativity", [] { return checks({"dot_associativity"}); }},
      {"extended muraki formula", [] { return checks({"muraki"}); }},
      {"series algebra", [] { return checks({"odot_associativity", "right_distributivity", "symbolic_counts"}); }},
      {"differential equations", [] { return checks({"differential_equations", "semigroup"}); }},
      {"central limit theorem", [] { return checks({"limit_equals_oracle", "scalar_moments"}); }},
      {"cli goldens and suite", [&] { return cli_criterion(paths); }},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !o.passed;
    std::printf("%s %2zu %-26s %7.2fs%s%s\n", o.passed ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), secs,
                o.detail.empty() ? "" : "  ", o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
