#include <gtest/gtest.h>

#include <random>

#include "opmono/matrix_model.hpp"
#include "opmono/moment_oracle.hpp"
#include "opmono/moment_system.hpp"
#include "opmono/random_models.hpp"

using namespace opmono;

namespace {

MatrixModel flip_model() {
  const BMatrix o = BMatrix::zero(1), i = BMatrix::identity(1);
  return MatrixModel(1, 2, {Rational(1, 2), Rational(1, 2)}, {{"X1", BlockMatrix(2, 1, {o, i, i, o})}});
}

std::vector<BMatrix> ones(std::size_t n) { return std::vector<BMatrix>(n, BMatrix::identity(1)); }

}  // namespace

TEST(MomentSystem, ScalarFlip) {
  const MomentSystem x = moments_of(flip_model(), 4);
  EXPECT_TRUE(x(std::vector<int>{0}, ones(1)).is_zero());
  EXPECT_EQ(x(std::vector<int>{0, 0}, ones(2)), BMatrix::identity(1));
  EXPECT_EQ(x(std::vector<int>{}, std::vector<BMatrix>{}), BMatrix::identity(1));
}

TEST(MomentSystem, CheckedCalls) {
  const MomentSystem x = moments_of(random_model(1, {2, 2, 2, false}), 3);
  const std::vector<BMatrix> two(2, BMatrix::identity(2));
  EXPECT_THROW(x(std::vector<int>{0, 0, 0, 0}, std::vector<BMatrix>(4, BMatrix::identity(2))), std::out_of_range);
  EXPECT_THROW(x(std::vector<int>{0, 2}, two), std::out_of_range);
  EXPECT_THROW(x(std::vector<int>{0}, two), std::invalid_argument);
  EXPECT_THROW(x(std::vector<int>{0, 1}, std::vector<BMatrix>(2, BMatrix::identity(1))), std::invalid_argument);
}

TEST(MomentSystem, MemoizedAgreesOnRandomArgs) {
  const MomentSystem x = moments_of(random_model(2, {2, 2, 2, false}), 3);
  const MomentSystem m = memoize(x);
  std::mt19937_64 rng(4);
  for (const auto& w : index_words(2, 3)) {
    const auto args = random_args(rng, 2, 3);
    EXPECT_EQ(m(w, args), x(w, args));
  }
}

TEST(FunctionalPi, SingleBlockAndNested) {
  const MatrixModel model = random_model(3, {2, 2, 2, false});
  const MomentSystem x = moments_of(model, 3);
  std::mt19937_64 rng(5);
  const auto b = random_args(rng, 2, 3);
  const std::vector<int> w{0, 1, 0};
  EXPECT_EQ(functional_pi(x.evaluator(), {{1, 2, 3}}, w, b), x(w, b));
  // {{1,3},{2}}: the inner value multiplies b_3 on the left.
  const BMatrix inner = x(std::vector<int>{1}, std::vector<BMatrix>{b[1]});
  const BMatrix expected = x(std::vector<int>{0, 0}, std::vector<BMatrix>{b[0], inner * b[2]});
  EXPECT_EQ(functional_pi(x.evaluator(), {{1, 3}, {2}}, w, b), expected);
  EXPECT_THROW(functional_pi(x.evaluator(), {{1, 3}, {2, 4}}, std::vector<int>{0, 0, 0, 0},
                             random_args(rng, 2, 4)),
               std::domain_error);
}

TEST(FunctionalPi, PeelOrderIndependent) {
  const MomentSystem x = moments_of(random_model(6, {2, 2, 2, false}), 2);
  std::mt19937_64 rng(6);
  const auto b = random_args(rng, 2, 2);
  const std::vector<int> w{1, 0};
  const BMatrix product = x(std::vector<int>{1}, std::vector<BMatrix>{b[0]}) *
                          x(std::vector<int>{0}, std::vector<BMatrix>{b[1]});
  EXPECT_EQ(functional_pi(x.evaluator(), {{1}, {2}}, w, b, PeelOrder::Leftmost), product);
  EXPECT_EQ(functional_pi(x.evaluator(), {{1}, {2}}, w, b, PeelOrder::Rightmost), product);
  for (const auto& v : functional_pi_all_orders(x.evaluator(), {{1}, {2}}, w, b)) EXPECT_EQ(v, product);
}

TEST(MixedMoment, PeakIsReplacedByItsMarginal) {
  const MomentSystem x = moments_of(random_model(7, {2, 2, 1, false}), 3);
  const MomentSystem y = moments_of(random_model(8, {2, 3, 1, false}), 3);
  const Marginals marg{{0, x}, {1, y}};
  const std::vector<int> order{0, 1};
  std::mt19937_64 rng(7);
  const auto b = random_args(rng, 2, 3);
  const std::vector<int> idx{0, 0, 0};
  const std::vector<int> xyx{0, 1, 0};
  const BMatrix peak = y(std::vector<int>{0}, std::vector<BMatrix>{b[1]});
  EXPECT_EQ(mixed_moment(make_word(xyx, idx, b), marg, order),
            x(std::vector<int>{0, 0}, std::vector<BMatrix>{b[0], peak * b[2]}));
  // Y X: the Y value multiplies into the X argument.
  const std::vector<int> yx{1, 0};
  const std::vector<int> idx2{0, 0};
  const std::vector<BMatrix> b2{b[0], b[1]};
  const BMatrix left = y(std::vector<int>{0}, std::vector<BMatrix>{b[0]});
  EXPECT_EQ(mixed_moment(make_word(yx, idx2, b2), marg, order),
            x(std::vector<int>{0}, std::vector<BMatrix>{left * b[1]}));
  EXPECT_THROW(mixed_moment(make_word(std::vector<int>{2}, std::vector<int>{0}, std::vector<BMatrix>{b[0]}), marg,
                            order),
               std::invalid_argument);
}

TEST(MixedMoment, AllPathsAgree) {
  const MomentSystem x = moments_of(random_model(9, {2, 2, 1, false}), 5);
  const Marginals marg{{0, x}, {1, x}, {2, x}};
  const std::vector<int> order{0, 1, 2};
  std::mt19937_64 rng(9);
  const std::vector<int> labels{2, 0, 2, 1, 2};
  const std::vector<int> idx(5, 0);
  const auto b = random_args(rng, 2, 5);
  const auto values = mixed_moment_all_paths(make_word(labels, idx, b), marg, order);
  ASSERT_GT(values.size(), 1u);
  for (const auto& v : values) EXPECT_EQ(v, values.front());
}

TEST(DotMoment, ZeroAndOneCopies) {
  const MomentSystem x = moments_of(random_model(10, {2, 2, 2, false}), 3);
  std::mt19937_64 rng(10);
  const auto b = random_args(rng, 2, 3);
  const std::vector<int> w{0, 1, 1};
  for (auto method : {DotMethod::QMap, DotMethod::Reduction}) {
    EXPECT_TRUE(dot_moment(x, 0, w, b, method).is_zero());
    EXPECT_EQ(dot_moment(x, 1, w, b, method), x(w, b));
  }
}

TEST(DotMoment, GroupedSumEqualsLiteralSum) {
  const MomentSystem x = moments_of(random_model(11, {2, 2, 2, false}), 3);
  std::mt19937_64 rng(11);
  for (const auto& w : index_words(2, 3)) {
    const auto b = random_args(rng, 2, 3);
    for (auto method : {DotMethod::QMap, DotMethod::Reduction}) {
      EXPECT_EQ(dot_moment(x, 3, w, b, method), dot_moment_literal(x, 3, w, b, DotMethod::Reduction));
    }
  }
}

TEST(DotMoment, ScalarSecondMoment) {
  // phi((N.X)^2) = N m2 + (N^2 - N) m1^2 for commuting scalars.
  const MomentSystem x = moments_of(random_model(12, {1, 3, 1, false}), 2);
  const Rational m1 = x(std::vector<int>{0}, ones(1))(0, 0), m2 = x(std::vector<int>{0, 0}, ones(2))(0, 0);
  for (long N = 0; N <= 4; ++N) {
    EXPECT_EQ(dot_moment(x, N, std::vector<int>{0, 0}, ones(2))(0, 0),
              Rational(N) * m2 + Rational(N * N - N) * m1 * m1);
  }
}
