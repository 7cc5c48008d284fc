#include "opmono/random_models.hpp"

#include <map>
#include <string>

namespace opmono {

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-3, 3);
  std::uniform_int_distribution<long> den(1, 3);
  const long p = num(rng);
  return Rational(p, den(rng));
}

BMatrix random_bmatrix(std::mt19937_64& rng, std::size_t dim) {
  std::vector<Rational> e;
  e.reserve(dim * dim);
  for (std::size_t i = 0; i < dim * dim; ++i) e.push_back(random_rational(rng));
  return BMatrix(dim, std::move(e));
}

MatrixModel random_model(std::uint64_t seed, const ModelShape& shape) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> w(1, 4);
  std::vector<Rational> weights;
  Rational total(0);
  for (std::size_t i = 0; i < shape.blocks; ++i) {
    weights.emplace_back(w(rng));
    total += weights.back();
  }
  for (auto& x : weights) x /= total;
  std::map<std::string, BlockMatrix> vars;
  for (std::size_t v = 0; v < shape.variables; ++v) {
    std::vector<BMatrix> blocks;
    for (std::size_t b = 0; b < shape.blocks * shape.blocks; ++b) blocks.push_back(random_bmatrix(rng, shape.dim));
    vars.emplace("X" + std::to_string(v + 1), BlockMatrix(shape.blocks, shape.dim, std::move(blocks)));
  }
  MatrixModel model(shape.dim, shape.blocks, std::move(weights), std::move(vars));
  return shape.mean_zero ? model.centered() : model;
}

std::vector<BMatrix> random_args(std::mt19937_64& rng, std::size_t dim, std::size_t n) {
  std::vector<BMatrix> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(random_bmatrix(rng, dim));
  return out;
}

}  // namespace opmono
