#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "opmono/bmatrix.hpp"
#include "opmono/matrix_model.hpp"

namespace opmono {

/// (component indices (i_1..i_n), arguments (b_1..b_n)) -> value in B.
/// Indices are 0-based. Must be multilinear in the arguments.
using Evaluator = std::function<BMatrix(std::span<const int>, std::span<const BMatrix>)>;

/// A family of multilinear functionals indexed by words over {0..r-1}, up
/// to length `degree_cap`. The tag separates moment and cumulant families.
template <class Tag>
class FunctionalSystem {
 public:
  FunctionalSystem(std::size_t components, std::size_t dim, std::size_t degree_cap, Evaluator evaluator)
      : r_(components), d_(dim), cap_(degree_cap), eval_(std::move(evaluator)) {}

  std::size_t components() const { return r_; }
  std::size_t dim() const { return d_; }
  std::size_t degree_cap() const { return cap_; }
  const Evaluator& evaluator() const { return eval_; }

  /// Checked evaluation: throws std::out_of_range if the word exceeds the
  /// degree cap or an index is out of range, std::invalid_argument on an
  /// arity or dimension mismatch.
  BMatrix operator()(std::span<const int> indices, std::span<const BMatrix> args) const;

 private:
  std::size_t r_;
  std::size_t d_;
  std::size_t cap_;
  Evaluator eval_;
};

struct MomentTag {};
struct CumulantTag {};
using MomentSystem = FunctionalSystem<MomentTag>;
using CumulantSystem = FunctionalSystem<CumulantTag>;

void check_call(std::size_t r, std::size_t d, std::size_t cap, std::span<const int> indices,
                std::span<const BMatrix> args);

template <class Tag>
BMatrix FunctionalSystem<Tag>::operator()(std::span<const int> indices, std::span<const BMatrix> args) const {
  check_call(r_, d_, cap_, indices, args);
  return eval_(indices, args);
}

/// Joint moments of the model's variables (components in name order).
MomentSystem moments_of(const MatrixModel& model, std::size_t degree_cap);

/// Stores, per index word, the values of a multilinear evaluator on every
/// tuple of matrix units, and evaluates arbitrary arguments by contracting
/// that table with their coordinates. Lookups and inserts are serialized;
/// the cache behaves as a pure function.
class BasisTensorCache {
 public:
  BasisTensorCache(std::size_t dim, Evaluator underlying);
  ~BasisTensorCache();

  BMatrix evaluate(std::span<const int> indices, std::span<const BMatrix> args) const;
  /// Values on all matrix-unit tuples, in row-major order of basis indices.
  const std::vector<BMatrix>& table(std::span<const int> indices) const;

 private:
  struct State;
  std::size_t d_;
  Evaluator underlying_;
  std::unique_ptr<State> state_;
};

/// Multilinear extension from a table of values on matrix-unit tuples (last
/// slot fastest): calls add(w, value) for every tuple whose coordinate
/// product w in `args` is nonzero. Only nonzero coordinates are visited, so
/// matrix-unit arguments cost a single lookup.
template <class Value, class Add>
void contract_sparse(const std::vector<Value>& table, std::size_t dim, std::span<const BMatrix> args, Add&& add) {
  const std::size_t n = args.size();
  const std::size_t basis = dim * dim;
  std::vector<std::vector<std::size_t>> support(n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto& coords = args[j].entries();
    for (std::size_t a = 0; a < basis; ++a) {
      if (!coords[a].is_zero()) support[j].push_back(a);
    }
    if (support[j].empty()) return;
  }
  // Odometer over the supports; prefix[j] holds the product of the first j
  // coordinates and offset[j] the matching table offset.
  std::vector<std::size_t> pick(n, 0);
  std::vector<Rational> prefix(n + 1, Rational(1));
  std::vector<std::size_t> offset(n + 1, 0);
  std::size_t from = 0;
  while (true) {
    for (std::size_t j = from; j < n; ++j) {
      const std::size_t a = support[j][pick[j]];
      prefix[j + 1] = prefix[j] * args[j].entries()[a];
      offset[j + 1] = offset[j] * basis + a;
    }
    const Value& v = table[offset[n]];
    if (!v.is_zero()) add(prefix[n], v);
    std::size_t j = n;
    while (j > 0 && ++pick[j - 1] == support[j - 1].size()) pick[--j] = 0;
    if (j == 0) return;
    from = j - 1;
  }
}

/// Wraps `system` so repeated calls reuse values on matrix-unit tuples.
template <class Tag>
FunctionalSystem<Tag> memoize(const FunctionalSystem<Tag>& system) {
  auto cache = std::make_shared<BasisTensorCache>(system.dim(), system.evaluator());
  return FunctionalSystem<Tag>(
      system.components(), system.dim(), system.degree_cap(),
      [cache](std::span<const int> idx, std::span<const BMatrix> args) { return cache->evaluate(idx, args); });
}

/// Every matrix-unit tuple of length n, i.e. all (d*d)^n basis index tuples.
std::vector<std::vector<BMatrix>> basis_tuples(std::size_t dim, std::size_t n);

/// Every word of length n over {0..r-1}, lexicographically.
std::vector<std::vector<int>> index_words(std::size_t r, std::size_t n);

}  // namespace opmono
