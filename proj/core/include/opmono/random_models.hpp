#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "opmono/bmatrix.hpp"
#include "opmono/matrix_model.hpp"

namespace opmono {

/// Small rationals p/q with |p| <= 3, q in {1, 2, 3}, drawn from `rng`.
Rational random_rational(std::mt19937_64& rng);
BMatrix random_bmatrix(std::mt19937_64& rng, std::size_t dim);

struct ModelShape {
  std::size_t dim = 2;
  std::size_t blocks = 2;
  std::size_t variables = 2;
  /// Subtract phi(X) from each variable.
  bool mean_zero = false;
};

/// Deterministic model for a given seed: random block entries, positive
/// random weights normalized to one. Variables are named X1, X2, ...
MatrixModel random_model(std::uint64_t seed, const ModelShape& shape);

/// A random coefficient tuple (b_1..b_n).
std::vector<BMatrix> random_args(std::mt19937_64& rng, std::size_t dim, std::size_t n);

}  // namespace opmono
