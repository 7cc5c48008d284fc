#include "opmono/series.hpp"

#include <random>

#include "opmono/cumulants.hpp"
#include "opmono/moment_oracle.hpp"
#include "opmono/random_models.hpp"

namespace opmono {

std::vector<std::vector<BMatrix>> equality_tuples(const EqualityMode& mode, std::size_t dim, std::size_t n,
                                                  std::uint64_t word_salt) {
  if (const auto* ex = std::get_if<Exhaustive>(&mode)) {
    (void)ex;
    return basis_tuples(dim, n);
  }
  const auto& rnd = std::get<Randomized>(mode);
  std::mt19937_64 rng(rnd.seed * 0x9E3779B97F4A7C15ULL + word_salt);
  std::vector<std::vector<BMatrix>> out;
  for (std::size_t s = 0; s < rnd.samples; ++s) out.push_back(random_args(rng, dim, n));
  return out;
}

BSeries from_moments(const MomentSystem& x) {
  return BSeries(x.components(), x.dim(), x.degree_cap(), BMatrix::identity(x.dim()), x.evaluator());
}

BSeries from_cumulants(const CumulantSystem& kappa) {
  return BSeries(kappa.components(), kappa.dim(), kappa.degree_cap(), BMatrix::zero(kappa.dim()),
                 kappa.evaluator());
}

PolySeries lift(const BSeries& f) {
  return PolySeries(f.components(), f.dim(), f.degree_cap(), PolyMatrix(f.constant()),
                    [f](std::span<const int> idx, std::span<const BMatrix> b) { return PolyMatrix(f.entry()(idx, b)); });
}

PolySeries derivative(const PolySeries& f, int var) {
  return PolySeries(f.components(), f.dim(), f.degree_cap(), f.constant().derivative(var),
                    [f, var](std::span<const int> idx, std::span<const BMatrix> b) {
                      return f.entry()(idx, b).derivative(var);
                    });
}

BSeries specialize(const PolySeries& f, const Rational& t, const Rational& s) {
  return BSeries(f.components(), f.dim(), f.degree_cap(), f.constant().evaluate(t, s),
                 [f, t, s](std::span<const int> idx, std::span<const BMatrix> b) {
                   return f.entry()(idx, b).evaluate(t, s);
                 });
}

BSeries muraki_sum(const MomentSystem& x, const MomentSystem& y) { return odot(from_moments(x), from_moments(y)); }

BSeries muraki_oracle(const MomentSystem& x, const MomentSystem& y) {
  if (x.components() != y.components() || x.dim() != y.dim()) {
    throw std::invalid_argument("muraki_oracle: component count or dimension mismatch");
  }
  const Marginals marginals{{0, x}, {1, y}};
  return BSeries(x.components(), x.dim(), std::min(x.degree_cap(), y.degree_cap()), BMatrix::identity(x.dim()),
                 [marginals](std::span<const int> idx, std::span<const BMatrix> b) {
                   const std::size_t n = idx.size();
                   const std::vector<int> order{0, 1};
                   BMatrix total = BMatrix::zero(b.front().dim());
                   std::vector<int> labels(n);
                   for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
                     for (std::size_t j = 0; j < n; ++j) labels[j] = static_cast<int>(mask >> j & 1U);
                     total += mixed_moment(make_word(labels, idx, b), marginals, order);
                   }
                   return total;
                 });
}

PolySeries t_family(const MomentSystem& x, int var) {
  if (var != 0 && var != 1) throw std::out_of_range("t_family: variable must be 0 or 1");
  return memoize(PolySeries(x.components(), x.dim(), x.degree_cap(), PolyMatrix(BMatrix::identity(x.dim())),
                            [x, var](std::span<const int> idx, std::span<const BMatrix> b) {
                              return in_variable(dot_polynomial(x, idx, b), var);
                            }));
}

PolySeries sum_family(const MomentSystem& x) {
  return memoize(PolySeries(x.components(), x.dim(), x.degree_cap(), PolyMatrix(BMatrix::identity(x.dim())),
                            [x](std::span<const int> idx, std::span<const BMatrix> b) {
                              return at_sum(dot_polynomial(x, idx, b));
                            }));
}

std::pair<PolySeries, PolySeries> diff_eq_residuals(const MomentSystem& x) {
  const PolySeries mu = t_family(x, 0);
  const PolySeries kappa = memoize(lift(from_cumulants(cumulant(x))));
  const PolySeries dmu = memoize(derivative(mu, 0));
  return {dmu - odot(kappa, mu), dmu - star(mu, kappa)};
}

std::pair<PolySeries, PolySeries> semigroup_sides(const MomentSystem& x) {
  return {sum_family(x), odot(t_family(x, 0), t_family(x, 1))};
}

BSeries random_series(std::uint64_t seed, std::size_t components, std::size_t dim, std::size_t degree_cap) {
  // Per word: two sandwiches of n + 1 matrices each.
  auto sandwiches = std::make_shared<std::map<std::vector<int>, std::vector<BMatrix>>>();
  std::mt19937_64 rng(seed);
  const BMatrix constant = random_bmatrix(rng, dim);
  for (std::size_t n = 1; n <= degree_cap; ++n) {
    for (auto& word : index_words(components, n)) {
      std::vector<BMatrix> mats;
      for (std::size_t j = 0; j < 2 * (n + 1); ++j) mats.push_back(random_bmatrix(rng, dim));
      sandwiches->emplace(std::move(word), std::move(mats));
    }
  }
  return BSeries(components, dim, degree_cap, constant,
                 [sandwiches](std::span<const int> idx, std::span<const BMatrix> b) {
                   const auto& mats = sandwiches->at(std::vector<int>(idx.begin(), idx.end()));
                   const std::size_t n = idx.size();
                   BMatrix total = BMatrix::zero(b.front().dim());
                   for (std::size_t term = 0; term < 2; ++term) {
                     const BMatrix* a = &mats[term * (n + 1)];
                     BMatrix acc = a[0];
                     for (std::size_t j = 0; j < n; ++j) acc = acc * b[j] * a[j + 1];
                     total += acc;
                   }
                   return total;
                 });
}

}  // namespace opmono
