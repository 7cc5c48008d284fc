#include "opmono/bmatrix.hpp"

#include <stdexcept>
#include <string>

namespace opmono {

BMatrix::BMatrix(std::size_t dim, std::vector<Rational> row_major)
    : dim_(dim), entries_(std::move(row_major)) {
  if (entries_.size() != dim * dim) {
    throw std::invalid_argument("BMatrix: expected " + std::to_string(dim * dim) + " entries, got " +
                                std::to_string(entries_.size()));
  }
}

BMatrix BMatrix::identity(std::size_t dim) { return scalar(dim, Rational(1)); }

BMatrix BMatrix::scalar(std::size_t dim, const Rational& value) {
  BMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = value;
  return m;
}

BMatrix BMatrix::unit(std::size_t dim, std::size_t row, std::size_t col) {
  if (row >= dim || col >= dim) throw std::out_of_range("BMatrix::unit: index out of range");
  BMatrix m(dim);
  m(row, col) = Rational(1);
  return m;
}

bool BMatrix::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

void require_same_dim(const BMatrix& a, const BMatrix& b, const char* what) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (" + std::to_string(a.dim()) +
                                " vs " + std::to_string(b.dim()) + ")");
  }
}

BMatrix& BMatrix::operator+=(const BMatrix& other) {
  require_same_dim(*this, other, "BMatrix +");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!other.entries_[i].is_zero()) entries_[i] += other.entries_[i];
  }
  return *this;
}

BMatrix& BMatrix::operator-=(const BMatrix& other) {
  require_same_dim(*this, other, "BMatrix -");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!other.entries_[i].is_zero()) entries_[i] -= other.entries_[i];
  }
  return *this;
}

BMatrix& BMatrix::operator*=(const Rational& s) {
  if (s.is_zero()) {
    for (auto& e : entries_) e = Rational(0);
    return *this;
  }
  for (auto& e : entries_) {
    if (!e.is_zero()) e *= s;
  }
  return *this;
}

void BMatrix::add_scaled(const Rational& s, const BMatrix& m) {
  require_same_dim(*this, m, "BMatrix::add_scaled");
  if (s.is_zero()) return;
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i].add_product(s, m.entries_[i]);
}

BMatrix operator*(const BMatrix& a, const BMatrix& b) {
  require_same_dim(a, b, "BMatrix *");
  const std::size_t d = a.dim_;
  BMatrix c(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      const Rational& aik = a.entries_[i * d + k];
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < d; ++j) c.entries_[i * d + j].add_product(aik, b.entries_[k * d + j]);
    }
  }
  return c;
}

std::ostream& operator<<(std::ostream& os, const BMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.dim(); ++i) {
    if (i) os << ", ";
    os << '[';
    for (std::size_t j = 0; j < m.dim(); ++j) {
      if (j) os << ", ";
      os << m(i, j);
    }
    os << ']';
  }
  return os << ']';
}

}  // namespace opmono
