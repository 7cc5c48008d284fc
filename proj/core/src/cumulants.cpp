#include "opmono/cumulants.hpp"

#include <memory>
#include <stdexcept>

#include "opmono/partitions.hpp"

namespace opmono {

MatrixPolynomial::MatrixPolynomial(std::size_t dim, std::vector<BMatrix> coefficients)
    : d_(dim), coeffs_(std::move(coefficients)) {
  for (const auto& c : coeffs_) {
    if (c.dim() != d_) throw std::invalid_argument("MatrixPolynomial: coefficient of wrong dimension");
  }
  trim();
}

void MatrixPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

BMatrix MatrixPolynomial::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : BMatrix::zero(d_);
}

BMatrix MatrixPolynomial::evaluate(const Rational& x) const {
  BMatrix acc = BMatrix::zero(d_);
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    acc *= x;
    acc += coeffs_[k];
  }
  return acc;
}

MatrixPolynomial interpolate_through_origin(std::span<const BMatrix> values) {
  if (values.empty()) throw std::invalid_argument("interpolate_through_origin: no values");
  const std::size_t d = values.front().dim();
  // Nodes x_0 = 0, x_j = j with y_0 = 0.
  const std::size_t m = values.size() + 1;
  std::vector<BMatrix> diff;
  diff.push_back(BMatrix::zero(d));
  for (const auto& v : values) diff.push_back(v);
  // In-place divided differences: diff[j] becomes f[x_0..x_j].
  for (std::size_t level = 1; level < m; ++level) {
    for (std::size_t j = m - 1; j >= level; --j) {
      BMatrix delta = diff[j] - diff[j - 1];
      delta *= Rational(1, static_cast<long>(level));  // x_j - x_{j-level} = level
      diff[j] = std::move(delta);
    }
  }
  // Expand the Newton form sum_j diff[j] prod_{i<j} (x - i).
  std::vector<BMatrix> coeffs(m, BMatrix::zero(d));
  std::vector<Rational> basis{Rational(1)};  // prod_{i<j} (x - i)
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t e = 0; e < basis.size(); ++e) coeffs[e].add_scaled(basis[e], diff[j]);
    std::vector<Rational> next(basis.size() + 1);
    for (std::size_t e = 0; e < basis.size(); ++e) {
      next[e + 1] += basis[e];
      next[e] -= basis[e] * Rational(static_cast<long>(j));
    }
    basis = std::move(next);
  }
  return MatrixPolynomial(d, std::move(coeffs));
}

MatrixPolynomial dot_polynomial(const MomentSystem& x, std::span<const int> indices, std::span<const BMatrix> args,
                                DotMethod method) {
  const std::size_t n = indices.size();
  if (n == 0) return MatrixPolynomial(x.dim(), {BMatrix::identity(x.dim())});
  std::vector<long> Ns;
  for (std::size_t N = 1; N <= n + 1; ++N) Ns.push_back(static_cast<long>(N));
  const auto values = dot_moment_values(x, Ns, indices, args, method);
  MatrixPolynomial p = interpolate_through_origin(std::span<const BMatrix>(values.data(), n));
  if (p.evaluate(Rational(static_cast<long>(n + 1))) != values.back()) {
    throw std::logic_error("dot_polynomial: interpolant disagrees with the moment at N = n + 1");
  }
  return p;
}

CumulantSystem cumulant(const MomentSystem& x, DotMethod method) {
  if (x.degree_cap() < 1) throw std::invalid_argument("cumulant: degree cap must be at least 1");
  return CumulantSystem(x.components(), x.dim(), x.degree_cap(),
                        [x, method](std::span<const int> idx, std::span<const BMatrix> args) {
                          if (idx.empty()) return BMatrix::zero(x.dim());
                          return dot_polynomial(x, idx, args, method).coefficient(1);
                        });
}

namespace {

BMatrix moment_cumulant_sum(const Evaluator& kappa, std::size_t d, std::span<const int> indices,
                            std::span<const BMatrix> args, bool skip_single_block) {
  const std::size_t n = indices.size();
  if (n == 0) return BMatrix::identity(d);
  const auto& table = monotone_weights(static_cast<int>(n));
  BMatrix total = BMatrix::zero(d);
  for (std::size_t s = 0; s < table.partitions.size(); ++s) {
    const auto& blocks = table.partitions[s].blocks();
    if (skip_single_block && blocks.size() == 1) continue;
    total.add_scaled(table.weights[s], functional_pi(kappa, blocks, indices, args));
  }
  return total;
}

}  // namespace

BMatrix moments_from_cumulants(const CumulantSystem& kappa, std::span<const int> indices,
                               std::span<const BMatrix> args) {
  check_call(kappa.components(), kappa.dim(), kappa.degree_cap(), indices, args);
  return moment_cumulant_sum(kappa.evaluator(), kappa.dim(), indices, args, false);
}

MomentSystem moment_system_from_cumulants(const CumulantSystem& kappa) {
  return MomentSystem(kappa.components(), kappa.dim(), kappa.degree_cap(),
                      [kappa](std::span<const int> idx, std::span<const BMatrix> args) {
                        return moment_cumulant_sum(kappa.evaluator(), kappa.dim(), idx, args, false);
                      });
}

CumulantSystem cumulants_from_moments(const MomentSystem& x) {
  // The evaluator refers to the memoized system itself for shorter words.
  struct Shared {
    std::shared_ptr<BasisTensorCache> cache;
  };
  auto shared = std::make_shared<Shared>();
  const std::size_t d = x.dim();
  Evaluator lower = [weak = std::weak_ptr<Shared>(shared)](std::span<const int> idx, std::span<const BMatrix> args) {
    return weak.lock()->cache->evaluate(idx, args);
  };
  Evaluator raw = [x, d, lower](std::span<const int> idx, std::span<const BMatrix> args) {
    if (idx.empty()) return BMatrix::zero(d);
    BMatrix value = x.evaluator()(idx, args);
    value -= moment_cumulant_sum(lower, d, idx, args, true);
    return value;
  };
  shared->cache = std::make_shared<BasisTensorCache>(d, raw);
  return CumulantSystem(x.components(), d, x.degree_cap(),
                        [shared](std::span<const int> idx, std::span<const BMatrix> args) {
                          // Top-level words are evaluated directly; only the
                          // recursion goes through the table.
                          return shared->cache->evaluate(idx, args);
                        });
}

}  // namespace opmono
