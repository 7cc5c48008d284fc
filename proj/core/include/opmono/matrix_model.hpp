#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "opmono/bmatrix.hpp"

namespace opmono {

/// A k x k matrix whose entries are d x d blocks; an element of the ambient
/// algebra of a matrix model.
class BlockMatrix {
 public:
  BlockMatrix() = default;
  BlockMatrix(std::size_t blocks, std::size_t dim);
  BlockMatrix(std::size_t blocks, std::size_t dim, std::vector<BMatrix> row_major_blocks);

  static BlockMatrix identity(std::size_t blocks, std::size_t dim);

  std::size_t blocks() const { return k_; }
  std::size_t dim() const { return d_; }
  const BMatrix& block(std::size_t i, std::size_t j) const { return blocks_[i * k_ + j]; }
  BMatrix& block(std::size_t i, std::size_t j) { return blocks_[i * k_ + j]; }

  BlockMatrix& operator+=(const BlockMatrix& other);
  friend BlockMatrix operator+(BlockMatrix a, const BlockMatrix& b) { return a += b; }
  friend BlockMatrix operator*(const BlockMatrix& a, const BlockMatrix& b);
  friend bool operator==(const BlockMatrix&, const BlockMatrix&) = default;

 private:
  std::size_t k_ = 0;
  std::size_t d_ = 0;
  std::vector<BMatrix> blocks_;
};

/// A concrete probability space: the algebra of k x k block matrices over
/// d x d rational matrices, with conditional expectation
/// a -> sum_i weights[i] * a_ii.
class MatrixModel {
 public:
  /// Validates shapes and that the weights sum to one (std::invalid_argument).
  MatrixModel(std::size_t dim, std::size_t blocks, std::vector<Rational> weights,
              std::map<std::string, BlockMatrix> variables);

  std::size_t dim() const { return d_; }
  std::size_t blocks() const { return k_; }
  const std::vector<Rational>& weights() const { return weights_; }
  const std::map<std::string, BlockMatrix>& variables() const { return variables_; }

  /// Variables in name order; position i is component i of the random vector.
  std::vector<std::string> component_names() const;
  const BlockMatrix& component(std::size_t i) const;
  std::size_t components() const { return variables_.size(); }

  /// Returns a copy with each variable X replaced by X - embed(phi(X)).
  MatrixModel centered() const;

 private:
  std::size_t d_;
  std::size_t k_;
  std::vector<Rational> weights_;
  std::map<std::string, BlockMatrix> variables_;
  std::vector<BlockMatrix> by_index_;
};

/// Weighted trace of the diagonal blocks. Throws std::invalid_argument on a
/// shape mismatch.
BMatrix cond_expect(const MatrixModel& model, const BlockMatrix& a);

/// diag(b, ..., b).
BlockMatrix embed(const MatrixModel& model, const BMatrix& b);

/// phi(b_1 X_{i_1} b_2 ... b_n X_{i_n}) computed without forming the full
/// block product: only the diagonal blocks are propagated.
BMatrix model_moment(const MatrixModel& model, std::span<const int> indices, std::span<const BMatrix> args);

}  // namespace opmono
