#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <ostream>

#include "opmono/bmatrix.hpp"
#include "opmono/cumulants.hpp"

namespace opmono {

/// B-valued polynomial in two commuting indeterminates t (variable 0) and s
/// (variable 1). Zero coefficients are never stored, so equality is
/// coefficientwise.
class PolyMatrix {
 public:
  using Exponent = std::array<int, 2>;

  PolyMatrix() = default;
  explicit PolyMatrix(std::size_t dim) : d_(dim) {}
  /// The constant polynomial m.
  explicit PolyMatrix(const BMatrix& m);
  /// m * t^e[0] * s^e[1].
  PolyMatrix(const BMatrix& m, Exponent e);

  std::size_t dim() const { return d_; }
  const std::map<Exponent, BMatrix>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BMatrix coefficient(Exponent e) const;
  /// Total degree; -1 for zero.
  int degree() const;

  PolyMatrix& operator+=(const PolyMatrix& other);
  PolyMatrix& operator-=(const PolyMatrix& other);
  PolyMatrix& operator*=(const Rational& s);
  void add_scaled(const Rational& s, const PolyMatrix& p);
  friend PolyMatrix operator+(PolyMatrix a, const PolyMatrix& b) { return a += b; }
  friend PolyMatrix operator-(PolyMatrix a, const PolyMatrix& b) { return a -= b; }
  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;
  friend std::ostream& operator<<(std::ostream& os, const PolyMatrix& p);

  /// Partial derivative in variable `var`.
  PolyMatrix derivative(int var) const;
  /// Value at t = x[0], s = x[1].
  BMatrix evaluate(const Rational& t, const Rational& s) const;

 private:
  void add_term(const Exponent& e, const BMatrix& m);
  std::size_t d_ = 0;
  std::map<Exponent, BMatrix> terms_;
};

/// p(x) with x replaced by the variable `var`.
PolyMatrix in_variable(const MatrixPolynomial& p, int var);
/// p(t + s).
PolyMatrix at_sum(const MatrixPolynomial& p);

}  // namespace opmono
