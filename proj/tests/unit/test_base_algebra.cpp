#include <gtest/gtest.h>

#include <random>

#include "opmono/bmatrix.hpp"
#include "opmono/matrix_model.hpp"
#include "opmono/random_models.hpp"
#include "opmono/rational.hpp"

using namespace opmono;

TEST(Rational, LowestTermsAndSign) {
  EXPECT_EQ(Rational(6, -4).to_string(), "-3/2");
  EXPECT_EQ(Rational(4, 2).to_string(), "2");
  EXPECT_EQ(Rational::parse("-10/4"), Rational(-5, 2));
  EXPECT_EQ(Rational(0, 7).to_string(), "0");
}

TEST(Rational, ParsePrintRoundTrip) {
  for (const char* s : {"0", "1", "-1", "3/7", "-22/9", "123456789012345678901234567891/1024"}) {
    EXPECT_EQ(Rational::parse(s).to_string(), s);
  }
}

TEST(Rational, RejectsMalformed) {
  for (const char* s : {"", "1/0", "a", "1/", "/2", "1.5", "--1", "2/-3", " 1"}) {
    EXPECT_THROW(Rational::parse(s), std::invalid_argument) << s;
  }
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(Rational, Arithmetic) {
  const Rational a(1, 3), b(-1, 6);
  EXPECT_EQ(a + b, Rational(1, 6));
  EXPECT_EQ(a * b, Rational(-1, 18));
  EXPECT_EQ(a / b, Rational(-2));
  EXPECT_LT(b, a);
  EXPECT_EQ(binomial(6, 3), Rational(20));
  EXPECT_EQ(binomial(2, 3), Rational(0));
  EXPECT_EQ(factorial(5), Rational(120));
}

TEST(BMatrix, ProductsAndUnits) {
  const BMatrix e01 = BMatrix::unit(2, 0, 1), e10 = BMatrix::unit(2, 1, 0);
  EXPECT_EQ(e01 * e10, BMatrix::unit(2, 0, 0));
  EXPECT_TRUE((e01 * e01).is_zero());
  EXPECT_EQ(BMatrix::basis(2, 2), e10);
  EXPECT_THROW(e01 * BMatrix::identity(3), std::invalid_argument);
  EXPECT_THROW(e01 + BMatrix::identity(1), std::invalid_argument);
}

namespace {

MatrixModel scalar_model(Rational w0, Rational w1, std::vector<BMatrix> blocks) {
  return MatrixModel(1, 2, {w0, w1}, {{"X1", BlockMatrix(2, 1, std::move(blocks))}});
}

BMatrix s(long v) { return BMatrix::scalar(1, Rational(v)); }

}  // namespace

TEST(MatrixModel, WeightedBlockTrace) {
  const MatrixModel half = scalar_model(Rational(1, 2), Rational(1, 2), {s(0), s(1), s(1), s(0)});
  EXPECT_EQ(cond_expect(half, half.component(0)), s(0));
  const MatrixModel third = scalar_model(Rational(1, 3), Rational(2, 3), {s(0), s(0), s(0), s(0)});
  const BlockMatrix a(2, 1, {s(1), s(0), s(0), s(4)});
  EXPECT_EQ(cond_expect(third, a), s(3));
}

TEST(MatrixModel, RejectsBadShapes) {
  EXPECT_THROW(scalar_model(Rational(1, 2), Rational(1, 3), {s(0), s(0), s(0), s(0)}), std::invalid_argument);
  EXPECT_THROW(MatrixModel(2, 2, {Rational(1, 2), Rational(1, 2)}, {{"X1", BlockMatrix(2, 1)}}),
               std::invalid_argument);
  const MatrixModel m = random_model(5, {2, 2, 1, false});
  EXPECT_THROW(cond_expect(m, BlockMatrix(3, 2)), std::invalid_argument);
}

TEST(MatrixModel, EmbedIsUnitalHomomorphism) {
  const MatrixModel m = random_model(7, {2, 3, 1, false});
  EXPECT_EQ(embed(m, BMatrix::identity(2)), BlockMatrix::identity(3, 2));
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      const BMatrix b = BMatrix::basis(2, i), c = BMatrix::basis(2, j);
      EXPECT_EQ(embed(m, b) * embed(m, c), embed(m, b * c));
      EXPECT_EQ(cond_expect(m, embed(m, b)), b);
    }
  }
}

TEST(MatrixModel, BimodularOnMatrixUnits) {
  for (std::size_t k = 1; k <= 3; ++k) {
    const MatrixModel m = random_model(11 + k, {2, k, 2, false});
    std::mt19937_64 rng(k);
    std::vector<BMatrix> blocks, other;
    for (std::size_t j = 0; j < k * k; ++j) {
      blocks.push_back(random_bmatrix(rng, 2));
      other.push_back(random_bmatrix(rng, 2));
    }
    const BlockMatrix a(k, 2, blocks), a2(k, 2, other);
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) {
        const BMatrix b1 = BMatrix::basis(2, i), b2 = BMatrix::basis(2, j);
        EXPECT_EQ(cond_expect(m, embed(m, b1) * a * embed(m, b2) + a2),
                  b1 * cond_expect(m, a) * b2 + cond_expect(m, a2));
      }
    }
  }
}

TEST(MatrixModel, MomentMatchesBlockProduct) {
  const MatrixModel m = random_model(3, {2, 3, 2, false});
  std::mt19937_64 rng(9);
  const std::vector<int> word{0, 1, 1, 0};
  const auto args = random_args(rng, 2, word.size());
  BlockMatrix product = BlockMatrix::identity(3, 2);
  for (std::size_t j = 0; j < word.size(); ++j) product = product * embed(m, args[j]) * m.component(word[j]);
  EXPECT_EQ(model_moment(m, word, args), cond_expect(m, product));
}

TEST(MatrixModel, CenteredHasZeroMean) {
  const MatrixModel c = random_model(4, {2, 2, 2, false}).centered();
  for (std::size_t i = 0; i < c.components(); ++i) EXPECT_TRUE(cond_expect(c, c.component(i)).is_zero());
}
