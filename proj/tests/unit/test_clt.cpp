#include <gtest/gtest.h>

#include <random>

#include "opmono/clt.hpp"
#include "opmono/cumulants.hpp"
#include "opmono/random_models.hpp"

using namespace opmono;

namespace {

MomentSystem flip(std::size_t cap) {
  const BMatrix o = BMatrix::zero(1), i = BMatrix::identity(1);
  return moments_of(MatrixModel(1, 2, {Rational(1, 2), Rational(1, 2)}, {{"X1", BlockMatrix(2, 1, {o, i, i, o})}}),
                    cap);
}

std::vector<BMatrix> ones(std::size_t n) { return std::vector<BMatrix>(n, BMatrix::identity(1)); }

}  // namespace

TEST(Clt, ScalarArcsineMoments) {
  const MomentSystem x = flip(6);
  EXPECT_EQ(clt_limit(x, ones(2))(0, 0), Rational(1));
  EXPECT_EQ(clt_limit(x, ones(4))(0, 0), Rational(3, 2));
  EXPECT_EQ(clt_limit(x, ones(6))(0, 0), Rational(5, 2));
  EXPECT_EQ(clt_oracle(x, ones(2))(0, 0), Rational(1));
  EXPECT_EQ(clt_oracle(x, ones(4))(0, 0), Rational(3, 2));
  for (std::size_t n : {1, 3, 5}) {
    EXPECT_TRUE(clt_limit(x, ones(n)).is_zero());
    EXPECT_TRUE(clt_oracle(x, ones(n)).is_zero());
  }
}

TEST(Clt, SecondMomentIsSecondCumulant) {
  const MomentSystem x = moments_of(random_model(30, {2, 2, 1, true}), 2);
  const CumulantSystem k = cumulant(x);
  std::mt19937_64 rng(30);
  const auto b = random_args(rng, 2, 2);
  EXPECT_EQ(clt_limit(x, b), k(std::vector<int>{0, 0}, b));
  EXPECT_EQ(clt_oracle(x, b), clt_limit(x, b));
}

TEST(Clt, LimitEqualsOracleDegreeFour) {
  const MomentSystem x = memoize(moments_of(random_model(31, {2, 2, 1, true}), 4));
  std::mt19937_64 rng(31);
  for (int rep = 0; rep < 3; ++rep) {
    const auto b = random_args(rng, 2, 4);
    EXPECT_EQ(clt_limit(x, b), clt_oracle(x, b));
  }
}

TEST(Clt, ValidatesInput) {
  EXPECT_THROW(validate_clt_input(moments_of(random_model(32, {2, 2, 2, true}), 2)), std::invalid_argument);
  const MomentSystem biased = moments_of(random_model(33, {2, 2, 1, false}), 2);
  EXPECT_THROW(validate_clt_input(biased), std::domain_error);
  EXPECT_THROW(clt_limit(biased, std::vector<BMatrix>(2, BMatrix::identity(2))), std::domain_error);
}
