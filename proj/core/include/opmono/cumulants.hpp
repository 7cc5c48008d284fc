#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "opmono/bmatrix.hpp"
#include "opmono/moment_oracle.hpp"
#include "opmono/moment_system.hpp"

namespace opmono {

/// Polynomial in one indeterminate with B-valued coefficients; trailing zero
/// coefficients are trimmed.
class MatrixPolynomial {
 public:
  explicit MatrixPolynomial(std::size_t dim) : d_(dim) {}
  MatrixPolynomial(std::size_t dim, std::vector<BMatrix> coefficients);

  std::size_t dim() const { return d_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BMatrix>& coefficients() const { return coeffs_; }
  /// Coefficient of x^k (zero past the degree).
  BMatrix coefficient(std::size_t k) const;
  BMatrix evaluate(const Rational& x) const;

  friend bool operator==(const MatrixPolynomial&, const MatrixPolynomial&) = default;

 private:
  void trim();
  std::size_t d_;
  std::vector<BMatrix> coeffs_;
};

/// The polynomial of degree <= values.size() with zero constant term taking
/// values[j] at x = j + 1 (Newton divided differences, exact).
MatrixPolynomial interpolate_through_origin(std::span<const BMatrix> values);

/// phi(b_1 (N.X)_{i_1} ... b_n (N.X)_{i_n}) as a polynomial in N, through the
/// values at N = 1..n and P(0) = 0. The value at N = n + 1 is recomputed and
/// compared; a mismatch throws std::logic_error.
MatrixPolynomial dot_polynomial(const MomentSystem& x, std::span<const int> indices, std::span<const BMatrix> args,
                                DotMethod method = DotMethod::QMap);

/// kappa_{i_1..i_n}(b_1..b_n): the coefficient of N in dot_polynomial; zero
/// for the empty word.
CumulantSystem cumulant(const MomentSystem& x, DotMethod method = DotMethod::QMap);

/// sum over monotone partitions pi of (1/|pi|!) kappa_pi(b_1 X_{i_1}, ..., b_n X_{i_n}).
BMatrix moments_from_cumulants(const CumulantSystem& kappa, std::span<const int> indices,
                               std::span<const BMatrix> args);

/// The moment system generated by a cumulant family through the
/// moment-cumulant formula.
MomentSystem moment_system_from_cumulants(const CumulantSystem& kappa);

/// Triangular inversion of the moment-cumulant formula, by increasing word
/// length. Lower-order values are memoized on matrix-unit tuples.
CumulantSystem cumulants_from_moments(const MomentSystem& x);

}  // namespace opmono
