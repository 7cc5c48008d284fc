#pragma once

#include <cstddef>
#include <ostream>
#include <vector>

#include "opmono/rational.hpp"

namespace opmono {

/// An element of the coefficient algebra: a square d x d matrix of exact
/// rationals, stored row-major.
class BMatrix {
 public:
  BMatrix() = default;
  explicit BMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}
  BMatrix(std::size_t dim, std::vector<Rational> row_major);

  static BMatrix zero(std::size_t dim) { return BMatrix(dim); }
  static BMatrix identity(std::size_t dim);
  static BMatrix scalar(std::size_t dim, const Rational& value);
  /// Matrix unit E_{row,col}.
  static BMatrix unit(std::size_t dim, std::size_t row, std::size_t col);
  /// Matrix unit number `index` in row-major order (index = row * dim + col).
  static BMatrix basis(std::size_t dim, std::size_t index) { return unit(dim, index / dim, index % dim); }

  std::size_t dim() const { return dim_; }
  const Rational& operator()(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }
  Rational& operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
  /// Row-major coefficients, i.e. the coordinates on the matrix-unit basis.
  const std::vector<Rational>& entries() const { return entries_; }

  bool is_zero() const;

  BMatrix& operator+=(const BMatrix& other);
  BMatrix& operator-=(const BMatrix& other);
  BMatrix& operator*=(const Rational& s);
  /// this += s * m.
  void add_scaled(const Rational& s, const BMatrix& m);

  friend BMatrix operator+(BMatrix a, const BMatrix& b) { return a += b; }
  friend BMatrix operator-(BMatrix a, const BMatrix& b) { return a -= b; }
  friend BMatrix operator-(BMatrix a) { return a *= Rational(-1); }
  friend BMatrix operator*(BMatrix a, const Rational& s) { return a *= s; }
  friend BMatrix operator*(const Rational& s, BMatrix a) { return a *= s; }
  friend BMatrix operator*(const BMatrix& a, const BMatrix& b);

  friend bool operator==(const BMatrix& a, const BMatrix& b) = default;

  friend std::ostream& operator<<(std::ostream& os, const BMatrix& m);

 private:
  std::size_t dim_ = 0;
  std::vector<Rational> entries_;
};

/// Throws std::invalid_argument unless both matrices have dimension `dim`.
void require_same_dim(const BMatrix& a, const BMatrix& b, const char* what);

}  // namespace opmono
