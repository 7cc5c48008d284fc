#include <gtest/gtest.h>

#include <random>

#include "opmono/json_io.hpp"
#include "opmono/random_models.hpp"

using namespace opmono;

namespace {

const std::filesystem::path kModels = OPMONO_TEST_DATA "/models";

std::string message_of(const std::string& text) {
  try {
    model_from_json(parse_json(text, "model.json"));
  } catch (const JsonInputError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST(Json, SyntaxErrorsCarryLineAndColumn) {
  try {
    parse_json("{\n  \"d\": 1,\n  \"k\": ]\n}", "bad.json");
    FAIL() << "no throw";
  } catch (const JsonInputError& e) {
    EXPECT_NE(std::string(e.what()).find("bad.json:3:"), std::string::npos) << e.what();
  }
}

TEST(Json, SchemaErrorsCarryPointer) {
  const std::string base = R"({"d": 1, "k": 1, "weights": ["1"], "variables": {"X1": [[[["1/0"]]]]}})";
  EXPECT_NE(message_of(base).find("/variables/X1/0/0/0/0"), std::string::npos) << message_of(base);
  EXPECT_NE(message_of(R"({"d": 1, "k": 1, "weights": ["1"], "variables": {}, "extra": 1})").find("extra"),
            std::string::npos);
  EXPECT_NE(message_of(R"({"d": 1, "k": 1, "weights": ["1/2"], "variables": {"X1": [[[["1"]]]]}})").find("weights"),
            std::string::npos);
  EXPECT_NE(message_of(R"({"d": 2, "k": 1, "weights": ["1"], "variables": {"X1": [[[["1"]]]]}})").find("/variables/X1"),
            std::string::npos);
}

TEST(Json, ModelRoundTrip) {
  const MatrixModel m = random_model(40, {2, 3, 2, false});
  const MatrixModel back = model_from_json(to_json(m));
  EXPECT_EQ(to_json(back), to_json(m));
  EXPECT_EQ(back.weights(), m.weights());
}

// The data files are the models the check suites build from seed 0.
TEST(Json, ShippedModelsMatchSeeds) {
  EXPECT_EQ(to_json(read_model_file(kModels / "model_a.json")), to_json(random_model(1000, {2, 2, 2, false})));
  EXPECT_EQ(to_json(read_model_file(kModels / "model_b.json")), to_json(random_model(2000, {2, 3, 2, false})));
  EXPECT_EQ(to_json(read_model_file(kModels / "centered.json")), to_json(random_model(3000, {2, 2, 1, true})));
  EXPECT_THROW(read_model_file(kModels / "missing.json"), std::exception);
}

TEST(Json, Blocks) {
  const BlockList b = blocks_from_json(parse_json("[[1,3,4],[5,7],[2,6]]"), "--ordered");
  EXPECT_EQ(b, (BlockList{{1, 3, 4}, {5, 7}, {2, 6}}));
  EXPECT_EQ(to_json(b).dump(), "[[1,3,4],[5,7],[2,6]]");
  EXPECT_THROW(blocks_from_json(parse_json("[[1,\"a\"]]"), "--ordered"), JsonInputError);
  EXPECT_THROW(blocks_from_json(parse_json("[1,2]"), "--ordered"), JsonInputError);
}

TEST(Json, SeriesRoundTrip) {
  const BSeries f = random_series(41, 2, 2, 3);
  const nlohmann::json j = series_to_json(f, 3);
  EXPECT_EQ(j.at("entries").at("1 2").size(), 16u);
  const BSeries g = series_from_json(j, 2);
  EXPECT_EQ(g.degree_cap(), 3u);
  EXPECT_TRUE(series_equal(f, g, Exhaustive{3}));
  std::mt19937_64 rng(41);
  const auto b = random_args(rng, 2, 3);
  const std::vector<int> w{1, 0, 1};
  EXPECT_EQ(g(w, b), f(w, b));
}

TEST(Json, RationalsAreCanonicalStrings) {
  EXPECT_EQ(to_json(Rational(-6, 4)).dump(), "\"-3/2\"");
  EXPECT_EQ(rational_from_json(nlohmann::json("4/6"), "x"), Rational(2, 3));
  EXPECT_EQ(rational_from_json(nlohmann::json("-3"), "x"), Rational(-3));
  EXPECT_THROW(rational_from_json(nlohmann::json(3), "x"), JsonInputError);
  EXPECT_THROW(rational_from_json(nlohmann::json("1/0"), "x"), JsonInputError);
  EXPECT_THROW(rational_from_json(nlohmann::json(0.5), "x"), JsonInputError);
}
