#include <gtest/gtest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>

#include "process.hpp"

using namespace opmono::testing;

namespace {

const std::string kCli = OPMONO_CLI_PATH;
const std::filesystem::path kData = OPMONO_TEST_DATA;
const std::filesystem::path kGolden = OPMONO_GOLDEN_DIR;

ProcessResult cli(std::vector<std::string> args) {
  args.insert(args.begin(), kCli);
  return run_process(args);
}

std::string model(const char* name) { return (kData / "models" / name).string(); }

class Golden : public ::testing::TestWithParam<GoldenCase> {};

std::string case_name(const ::testing::TestParamInfo<GoldenCase>& info) { return info.param.name; }

}  // namespace

TEST_P(Golden, ByteStable) {
  const auto& c = GetParam();
  const ProcessResult first = cli(c.args);
  const ProcessResult second = cli(c.args);
  ASSERT_EQ(first.exit_code, 0) << first.err;
  EXPECT_EQ(first.out, second.out);
  EXPECT_EQ(first.out, read_file(kGolden / (c.name + ".json")));
}

INSTANTIATE_TEST_SUITE_P(Cli, Golden,
                         ::testing::ValuesIn(load_cases(kGolden / "cases.txt", (kData / "models").string())),
                         case_name);

TEST(Cli, CatalanCount) {
  const ProcessResult r = cli({"partitions", "--kind", "nc", "--n", "4", "--count-only"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "{\n  \"count\": 14\n}\n");
}

TEST(Cli, MomentsRoundTripThroughCumulantFile) {
  const auto dir = std::filesystem::temp_directory_path() / ("opmono_cli_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  const ProcessResult k = cli({"cumulants", "--model", model("model_b.json"), "--degree", "3", "--method", "inversion"});
  ASSERT_EQ(k.exit_code, 0) << k.err;
  const auto path = dir / "kappa.json";
  {
    std::ofstream(path) << k.out;
  }
  const ProcessResult back = cli({"moments", "--from-cumulants", path.string(), "--degree", "3"});
  const ProcessResult direct = cli({"moments", "--model", model("model_b.json"), "--degree", "3"});
  std::filesystem::remove_all(dir);
  ASSERT_EQ(back.exit_code, 0) << back.err;
  EXPECT_EQ(back.out, direct.out);
}

TEST(Cli, ValidationErrorsExitOne) {
  EXPECT_EQ(cli({"partitions", "--kind", "nc", "--n", "4", "--bogus"}).exit_code, 1);
  EXPECT_EQ(cli({"partitions", "--kind", "monotone-pair", "--n", "3"}).exit_code, 1);
  EXPECT_EQ(cli({"qmap", "--ordered", "[[1,2],[2]]"}).exit_code, 1);
  EXPECT_EQ(cli({"moments", "--model", model("model_a.json"), "--degree", "7"}).exit_code, 1);
  EXPECT_EQ(cli({"clt", "--model", model("model_a.json"), "--degree", "2"}).exit_code, 1);
  EXPECT_EQ(cli({"check", "--suite", "nope"}).exit_code, 1);
  EXPECT_EQ(cli({}).exit_code, 1);
}

TEST(Cli, MalformedJsonReportsLocation) {
  const ProcessResult r = cli({"qmap", "--ordered", "[[1,3],\n[2,]]"});
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.err.find(":2:"), std::string::npos) << r.err;
  const ProcessResult bad = cli({"moments", "--model", (kData / "bad" / "bad_rational.json").string()});
  EXPECT_EQ(bad.exit_code, 1);
  EXPECT_NE(bad.err.find("/weights/1"), std::string::npos) << bad.err;
}

TEST(Cli, QuickSuitePasses) {
  const ProcessResult r = cli({"check", "--suite", "partitions"});
  EXPECT_EQ(r.exit_code, 0) << r.err;
  EXPECT_NE(r.out.find("\"passed\": true"), std::string::npos);
}
