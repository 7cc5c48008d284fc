#include "opmono/moment_system.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

namespace opmono {

void check_call(std::size_t r, std::size_t d, std::size_t cap, std::span<const int> indices,
                std::span<const BMatrix> args) {
  if (indices.size() != args.size()) throw std::invalid_argument("functional: arity mismatch");
  if (indices.size() > cap) {
    throw std::out_of_range("functional: word length " + std::to_string(indices.size()) + " exceeds degree cap " +
                            std::to_string(cap));
  }
  for (int i : indices) {
    if (i < 0 || static_cast<std::size_t>(i) >= r) {
      throw std::out_of_range("functional: component index " + std::to_string(i) + " out of range");
    }
  }
  for (const auto& b : args) {
    if (b.dim() != d) throw std::invalid_argument("functional: argument of wrong dimension");
  }
}

MomentSystem moments_of(const MatrixModel& model, std::size_t degree_cap) {
  return MomentSystem(model.components(), model.dim(), degree_cap,
                      [model](std::span<const int> idx, std::span<const BMatrix> args) {
                        return model_moment(model, idx, args);
                      });
}

struct BasisTensorCache::State {
  std::mutex mutex;
  std::map<std::vector<int>, std::unique_ptr<std::vector<BMatrix>>> tables;
};

BasisTensorCache::BasisTensorCache(std::size_t dim, Evaluator underlying)
    : d_(dim), underlying_(std::move(underlying)), state_(std::make_unique<State>()) {}

BasisTensorCache::~BasisTensorCache() = default;

const std::vector<BMatrix>& BasisTensorCache::table(std::span<const int> indices) const {
  std::vector<int> key(indices.begin(), indices.end());
  {
    std::lock_guard lock(state_->mutex);
    auto it = state_->tables.find(key);
    if (it != state_->tables.end()) return *it->second;
  }
  // Computed outside the lock: the underlying evaluator may itself consult
  // this cache for shorter words.
  auto values = std::make_unique<std::vector<BMatrix>>();
  for (const auto& tuple : basis_tuples(d_, key.size())) values->push_back(underlying_(key, tuple));
  std::lock_guard lock(state_->mutex);
  auto [it, inserted] = state_->tables.emplace(std::move(key), std::move(values));
  return *it->second;
}

BMatrix BasisTensorCache::evaluate(std::span<const int> indices, std::span<const BMatrix> args) const {
  const auto& tab = table(indices);
  if (indices.empty()) return tab.front();
  BMatrix total = BMatrix::zero(d_);
  contract_sparse(tab, d_, args, [&](const Rational& w, const BMatrix& v) { total.add_scaled(w, v); });
  return total;
}

std::vector<std::vector<BMatrix>> basis_tuples(std::size_t dim, std::size_t n) {
  const std::size_t basis = dim * dim;
  std::vector<BMatrix> units;
  for (std::size_t a = 0; a < basis; ++a) units.push_back(BMatrix::basis(dim, a));
  std::vector<std::vector<BMatrix>> out{{}};
  for (std::size_t slot = 0; slot < n; ++slot) {
    std::vector<std::vector<BMatrix>> next;
    next.reserve(out.size() * basis);
    for (const auto& prefix : out) {
      for (const auto& u : units) {
        auto t = prefix;
        t.push_back(u);
        next.push_back(std::move(t));
      }
    }
    out = std::move(next);
  }
  return out;
}

std::vector<std::vector<int>> index_words(std::size_t r, std::size_t n) {
  std::vector<std::vector<int>> out{{}};
  for (std::size_t slot = 0; slot < n; ++slot) {
    std::vector<std::vector<int>> next;
    for (const auto& prefix : out) {
      for (std::size_t i = 0; i < r; ++i) {
        auto w = prefix;
        w.push_back(static_cast<int>(i));
        next.push_back(std::move(w));
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace opmono
