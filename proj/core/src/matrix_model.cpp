#include "opmono/matrix_model.hpp"

#include <stdexcept>

namespace opmono {

BlockMatrix::BlockMatrix(std::size_t blocks, std::size_t dim)
    : k_(blocks), d_(dim), blocks_(blocks * blocks, BMatrix::zero(dim)) {}

BlockMatrix::BlockMatrix(std::size_t blocks, std::size_t dim, std::vector<BMatrix> row_major_blocks)
    : k_(blocks), d_(dim), blocks_(std::move(row_major_blocks)) {
  if (blocks_.size() != k_ * k_) throw std::invalid_argument("BlockMatrix: wrong number of blocks");
  for (const auto& b : blocks_) {
    if (b.dim() != d_) throw std::invalid_argument("BlockMatrix: block of wrong dimension");
  }
}

BlockMatrix BlockMatrix::identity(std::size_t blocks, std::size_t dim) {
  BlockMatrix m(blocks, dim);
  for (std::size_t i = 0; i < blocks; ++i) m.block(i, i) = BMatrix::identity(dim);
  return m;
}

BlockMatrix& BlockMatrix::operator+=(const BlockMatrix& other) {
  if (k_ != other.k_ || d_ != other.d_) throw std::invalid_argument("BlockMatrix +: shape mismatch");
  for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] += other.blocks_[i];
  return *this;
}

BlockMatrix operator*(const BlockMatrix& a, const BlockMatrix& b) {
  if (a.k_ != b.k_ || a.d_ != b.d_) throw std::invalid_argument("BlockMatrix *: shape mismatch");
  BlockMatrix c(a.k_, a.d_);
  for (std::size_t i = 0; i < a.k_; ++i) {
    for (std::size_t l = 0; l < a.k_; ++l) {
      const BMatrix& ail = a.block(i, l);
      if (ail.is_zero()) continue;
      for (std::size_t j = 0; j < a.k_; ++j) c.block(i, j) += ail * b.block(l, j);
    }
  }
  return c;
}

MatrixModel::MatrixModel(std::size_t dim, std::size_t blocks, std::vector<Rational> weights,
                         std::map<std::string, BlockMatrix> variables)
    : d_(dim), k_(blocks), weights_(std::move(weights)), variables_(std::move(variables)) {
  if (d_ == 0 || k_ == 0) throw std::invalid_argument("MatrixModel: d and k must be positive");
  if (weights_.size() != k_) throw std::invalid_argument("MatrixModel: need exactly k weights");
  Rational total;
  for (const auto& w : weights_) total += w;
  if (total != Rational(1)) throw std::invalid_argument("MatrixModel: weights sum to " + total.to_string() + ", not 1");
  for (const auto& [name, x] : variables_) {
    if (x.blocks() != k_ || x.dim() != d_) {
      throw std::invalid_argument("MatrixModel: variable '" + name + "' has the wrong block shape");
    }
    by_index_.push_back(x);
  }
}

std::vector<std::string> MatrixModel::component_names() const {
  std::vector<std::string> names;
  for (const auto& [name, x] : variables_) names.push_back(name);
  return names;
}

const BlockMatrix& MatrixModel::component(std::size_t i) const {
  if (i >= by_index_.size()) throw std::out_of_range("MatrixModel: component index out of range");
  return by_index_[i];
}

MatrixModel MatrixModel::centered() const {
  std::map<std::string, BlockMatrix> vars;
  for (const auto& [name, x] : variables_) {
    BlockMatrix shifted = x;
    const BMatrix mean = cond_expect(*this, x);
    for (std::size_t i = 0; i < k_; ++i) shifted.block(i, i) -= mean;
    vars.emplace(name, std::move(shifted));
  }
  return MatrixModel(d_, k_, weights_, std::move(vars));
}

BMatrix cond_expect(const MatrixModel& model, const BlockMatrix& a) {
  if (a.blocks() != model.blocks() || a.dim() != model.dim()) {
    throw std::invalid_argument("cond_expect: block shape does not match the model");
  }
  BMatrix result = BMatrix::zero(model.dim());
  for (std::size_t i = 0; i < model.blocks(); ++i) result.add_scaled(model.weights()[i], a.block(i, i));
  return result;
}

BlockMatrix embed(const MatrixModel& model, const BMatrix& b) {
  if (b.dim() != model.dim()) throw std::invalid_argument("embed: dimension mismatch");
  BlockMatrix m(model.blocks(), model.dim());
  for (std::size_t i = 0; i < model.blocks(); ++i) m.block(i, i) = b;
  return m;
}

BMatrix model_moment(const MatrixModel& model, std::span<const int> indices, std::span<const BMatrix> args) {
  if (indices.size() != args.size()) throw std::invalid_argument("model_moment: arity mismatch");
  const std::size_t k = model.blocks();
  const std::size_t d = model.dim();
  for (const auto& b : args) {
    if (b.dim() != d) throw std::invalid_argument("model_moment: argument of wrong dimension");
  }
  if (indices.empty()) return BMatrix::identity(d);

  BMatrix result = BMatrix::zero(d);
  std::vector<BMatrix> row(k, BMatrix::zero(d));
  std::vector<BMatrix> next(k, BMatrix::zero(d));
  for (std::size_t start = 0; start < k; ++start) {
    if (model.weights()[start].is_zero()) continue;
    for (std::size_t j = 0; j < k; ++j) row[j] = BMatrix::zero(d);
    row[start] = args[0];
    for (std::size_t pos = 0; pos < indices.size(); ++pos) {
      const BlockMatrix& x = model.component(static_cast<std::size_t>(indices[pos]));
      for (std::size_t j = 0; j < k; ++j) next[j] = BMatrix::zero(d);
      for (std::size_t l = 0; l < k; ++l) {
        if (row[l].is_zero()) continue;
        for (std::size_t j = 0; j < k; ++j) next[j] += row[l] * x.block(l, j);
      }
      if (pos + 1 < indices.size()) {
        for (std::size_t j = 0; j < k; ++j) row[j] = next[j] * args[pos + 1];
      } else {
        row.swap(next);
      }
    }
    result.add_scaled(model.weights()[start], row[start]);
  }
  return result;
}

}  // namespace opmono
