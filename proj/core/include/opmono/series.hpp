#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "opmono/bmatrix.hpp"
#include "opmono/moment_system.hpp"
#include "opmono/poly_matrix.hpp"

namespace opmono {

// Coefficient rings. A ring R contains B (from_matrix) and every series
// entry is B-multilinear; `apply` extends an entry to R-valued arguments.
template <class R>
struct RingTraits;

template <>
struct RingTraits<BMatrix> {
  static BMatrix zero(std::size_t d) { return BMatrix::zero(d); }
  static BMatrix one(std::size_t d) { return BMatrix::identity(d); }
  static BMatrix from_matrix(const BMatrix& m) { return m; }
  static BMatrix times(const BMatrix& a, const BMatrix& b) { return a * b; }

  template <class F>
  static BMatrix apply(const F& entry, std::span<const int> idx, std::span<const BMatrix> args) {
    return entry(idx, args);
  }
};

template <>
struct RingTraits<PolyMatrix> {
  static PolyMatrix zero(std::size_t d) { return PolyMatrix(d); }
  static PolyMatrix one(std::size_t d) { return PolyMatrix(BMatrix::identity(d)); }
  static PolyMatrix from_matrix(const BMatrix& m) { return PolyMatrix(m); }
  static PolyMatrix times(const PolyMatrix& a, const BMatrix& b) { return a * PolyMatrix(b); }

  // Expand every argument into monomials and sum the shifted values.
  template <class F>
  static PolyMatrix apply(const F& entry, std::span<const int> idx, std::span<const PolyMatrix> args) {
    const std::size_t n = args.size();
    std::vector<std::vector<std::pair<PolyMatrix::Exponent, BMatrix>>> parts(n);
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& [e, m] : args[j].terms()) parts[j].emplace_back(e, m);
      if (parts[j].empty()) return PolyMatrix(args[j].dim());
    }
    PolyMatrix total(args.empty() ? 0 : args.front().dim());
    std::vector<std::size_t> pick(n, 0);
    std::vector<BMatrix> coeffs(n);
    while (true) {
      PolyMatrix::Exponent shift{0, 0};
      for (std::size_t j = 0; j < n; ++j) {
        const auto& [e, m] = parts[j][pick[j]];
        coeffs[j] = m;
        shift[0] += e[0];
        shift[1] += e[1];
      }
      const PolyMatrix value = entry(idx, std::span<const BMatrix>(coeffs));
      if (!value.is_zero()) total += value * PolyMatrix(BMatrix::identity(value.dim()), shift);
      std::size_t j = 0;
      while (j < n && ++pick[j] == parts[j].size()) pick[j++] = 0;
      if (j == n) break;
    }
    return total;
  }
};

/// An element of the series algebra over the coefficient ring R: a constant
/// plus, per nonempty index word, a B-multilinear functional with values in R.
template <class R>
class Series {
 public:
  using Entry = std::function<R(std::span<const int>, std::span<const BMatrix>)>;

  Series(std::size_t components, std::size_t dim, std::size_t degree_cap, R constant, Entry entry)
      : r_(components), d_(dim), cap_(degree_cap), constant_(std::move(constant)), entry_(std::move(entry)) {}

  std::size_t components() const { return r_; }
  std::size_t dim() const { return d_; }
  std::size_t degree_cap() const { return cap_; }
  const R& constant() const { return constant_; }
  const Entry& entry() const { return entry_; }

  /// Checked evaluation; the empty word yields the constant.
  R operator()(std::span<const int> idx, std::span<const BMatrix> args) const {
    check_call(r_, d_, cap_, idx, args);
    return idx.empty() ? constant_ : entry_(idx, args);
  }

  /// Evaluation on R-valued arguments (unchecked).
  R apply(std::span<const int> idx, std::span<const R> args) const {
    if (idx.empty()) return constant_;
    return RingTraits<R>::apply(entry_, idx, args);
  }

 private:
  std::size_t r_;
  std::size_t d_;
  std::size_t cap_;
  R constant_;
  Entry entry_;
};

using BSeries = Series<BMatrix>;
/// Series with coefficients polynomial in t and s (the t-extended families).
using PolySeries = Series<PolyMatrix>;

namespace detail {

template <class R>
void require_compatible(const Series<R>& f, const Series<R>& g, const char* what) {
  if (f.components() != g.components() || f.dim() != g.dim()) {
    throw std::invalid_argument(std::string(what) + ": component count or dimension mismatch");
  }
}

template <class T>
std::vector<T> gather(std::span<const T> v, std::size_t from, std::size_t to) {
  return std::vector<T>(v.begin() + static_cast<std::ptrdiff_t>(from), v.begin() + static_cast<std::ptrdiff_t>(to));
}

}  // namespace detail

template <class R>
Series<R> identity_series(std::size_t components, std::size_t dim, std::size_t degree_cap) {
  return Series<R>(components, dim, degree_cap, RingTraits<R>::one(dim),
                   [dim](std::span<const int>, std::span<const BMatrix>) { return RingTraits<R>::zero(dim); });
}

template <class R>
Series<R> zero_series(std::size_t components, std::size_t dim, std::size_t degree_cap) {
  return Series<R>(components, dim, degree_cap, RingTraits<R>::zero(dim),
                   [dim](std::span<const int>, std::span<const BMatrix>) { return RingTraits<R>::zero(dim); });
}

/// (F + G), entrywise.
template <class R>
Series<R> operator+(const Series<R>& f, const Series<R>& g) {
  detail::require_compatible(f, g, "series sum");
  return Series<R>(f.components(), f.dim(), std::min(f.degree_cap(), g.degree_cap()), f.constant() + g.constant(),
                   [f, g](std::span<const int> idx, std::span<const BMatrix> b) {
                     return f.entry()(idx, b) + g.entry()(idx, b);
                   });
}

template <class R>
Series<R> operator-(const Series<R>& f, const Series<R>& g) {
  detail::require_compatible(f, g, "series difference");
  return Series<R>(f.components(), f.dim(), std::min(f.degree_cap(), g.degree_cap()), f.constant() - g.constant(),
                   [f, g](std::span<const int> idx, std::span<const BMatrix> b) {
                     return f.entry()(idx, b) - g.entry()(idx, b);
                   });
}

/// Monotone composition. Entry (i_1..i_n)(b_1..b_n) sums over subsets
/// V = {v_1 < ... < v_p}: F_{i_V}(G_{I_0} b_{v_1}, ..., G_{I_{p-1}} b_{v_p}) G_{I_p},
/// where I_j are the gaps of V and G on an empty gap is G's constant.
template <class R>
Series<R> odot(const Series<R>& f, const Series<R>& g) {
  detail::require_compatible(f, g, "odot");
  using T = RingTraits<R>;
  return Series<R>(
      f.components(), f.dim(), std::min(f.degree_cap(), g.degree_cap()), f.constant() * g.constant(),
      [f, g](std::span<const int> idx, std::span<const BMatrix> b) {
        const std::size_t n = idx.size();
        // G on every interval [a, c), computed on demand.
        std::vector<std::optional<R>> gint((n + 1) * (n + 1));
        auto g_on = [&](std::size_t a, std::size_t c) -> const R& {
          auto& slot = gint[a * (n + 1) + c];
          if (!slot) {
            slot = a == c ? g.constant() : g.entry()(idx.subspan(a, c - a), b.subspan(a, c - a));
          }
          return *slot;
        };
        R total = T::zero(f.dim());
        std::vector<int> fidx;
        std::vector<R> fargs;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
          fidx.clear();
          fargs.clear();
          std::size_t gap_start = 0;
          for (std::size_t v = 0; v < n; ++v) {
            if (!(mask >> v & 1U)) continue;
            fidx.push_back(idx[v]);
            fargs.push_back(T::times(g_on(gap_start, v), b[v]));
            gap_start = v + 1;
          }
          total += f.apply(fidx, fargs) * g_on(gap_start, n);
        }
        return total;
      });
}

/// The operation star: a sum over interval blocks V = [k, k + l) with
/// G_{i_V}(b_V) multiplied into the next argument of F, or onto the right of
/// F's value when V ends the word.
template <class R>
Series<R> star(const Series<R>& f, const Series<R>& g) {
  detail::require_compatible(f, g, "star");
  using T = RingTraits<R>;
  return Series<R>(f.components(), f.dim(), std::min(f.degree_cap(), g.degree_cap()), f.constant() * g.constant(),
                   [f, g](std::span<const int> idx, std::span<const BMatrix> b) {
                     const std::size_t n = idx.size();
                     R total = T::zero(f.dim());
                     std::vector<int> fidx;
                     std::vector<R> fargs;
                     for (std::size_t k = 0; k < n; ++k) {
                       for (std::size_t end = k + 1; end <= n; ++end) {
                         const R gv = g.entry()(idx.subspan(k, end - k), b.subspan(k, end - k));
                         fidx.clear();
                         fargs.clear();
                         for (std::size_t j = 0; j < k; ++j) {
                           fidx.push_back(idx[j]);
                           fargs.push_back(T::from_matrix(b[j]));
                         }
                         if (end == n) {
                           total += f.apply(fidx, fargs) * gv;
                           continue;
                         }
                         fidx.push_back(idx[end]);
                         fargs.push_back(T::times(gv, b[end]));
                         for (std::size_t j = end + 1; j < n; ++j) {
                           fidx.push_back(idx[j]);
                           fargs.push_back(T::from_matrix(b[j]));
                         }
                         total += f.apply(fidx, fargs);
                       }
                     }
                     return total;
                   });
}

/// Stores entry values on every matrix-unit tuple, per index word, and
/// evaluates by contracting with the argument coordinates.
template <class R>
class SeriesCache {
 public:
  SeriesCache(std::size_t dim, typename Series<R>::Entry entry) : d_(dim), entry_(std::move(entry)) {}

  R evaluate(std::span<const int> idx, std::span<const BMatrix> args) const {
    const auto& tab = table(idx);
    if (idx.empty()) return tab.front();
    R total = RingTraits<R>::zero(d_);
    contract_sparse(tab, d_, args, [&](const Rational& w, const R& v) { total.add_scaled(w, v); });
    return total;
  }

  const std::vector<R>& table(std::span<const int> idx) const {
    std::vector<int> key(idx.begin(), idx.end());
    {
      std::lock_guard lock(mutex_);
      auto it = tables_.find(key);
      if (it != tables_.end()) return *it->second;
    }
    auto values = std::make_unique<std::vector<R>>();
    for (const auto& tuple : basis_tuples(d_, key.size())) values->push_back(entry_(key, tuple));
    std::lock_guard lock(mutex_);
    auto [it, inserted] = tables_.emplace(std::move(key), std::move(values));
    return *it->second;
  }

 private:
  std::size_t d_;
  typename Series<R>::Entry entry_;
  mutable std::mutex mutex_;
  mutable std::map<std::vector<int>, std::unique_ptr<std::vector<R>>> tables_;
};

/// Same series; entries are tabulated on matrix units on first use.
template <class R>
Series<R> memoize(const Series<R>& f) {
  auto cache = std::make_shared<SeriesCache<R>>(f.dim(), f.entry());
  return Series<R>(f.components(), f.dim(), f.degree_cap(), f.constant(),
                   [cache](std::span<const int> idx, std::span<const BMatrix> b) { return cache->evaluate(idx, b); });
}

/// Equality checking modes: every index word and every matrix-unit tuple up
/// to `degree` (complete by multilinearity), or `samples` seeded random
/// argument tuples per index word of each length up to `degree`.
struct Exhaustive {
  std::size_t degree = 4;
};
struct Randomized {
  std::uint64_t seed = 0;
  std::size_t degree = 5;
  std::size_t samples = 2;
};
using EqualityMode = std::variant<Exhaustive, Randomized>;

struct Mismatch {
  std::vector<int> indices;  // empty: the constants differ
  std::vector<BMatrix> args;
};

std::vector<std::vector<BMatrix>> equality_tuples(const EqualityMode& mode, std::size_t dim, std::size_t n,
                                                  std::uint64_t word_salt);

/// The first argument tuple on which F and G differ, in the enumeration order
/// of `mode`; nullopt if they agree. Throws std::invalid_argument on a shape
/// mismatch or if the mode's degree exceeds either cap.
template <class R>
std::optional<Mismatch> first_mismatch(const Series<R>& f, const Series<R>& g, const EqualityMode& mode) {
  detail::require_compatible(f, g, "series_equal");
  const std::size_t degree = std::visit([](const auto& m) { return m.degree; }, mode);
  if (degree > f.degree_cap() || degree > g.degree_cap()) {
    throw std::invalid_argument("series_equal: degree exceeds a degree cap");
  }
  if (!(f.constant() == g.constant())) return Mismatch{};
  std::uint64_t salt = 0;
  for (std::size_t n = 1; n <= degree; ++n) {
    for (const auto& word : index_words(f.components(), n)) {
      for (const auto& tuple : equality_tuples(mode, f.dim(), n, salt++)) {
        if (!(f.entry()(word, tuple) == g.entry()(word, tuple))) return Mismatch{word, tuple};
      }
    }
  }
  return std::nullopt;
}

template <class R>
bool series_equal(const Series<R>& f, const Series<R>& g, const EqualityMode& mode) {
  return !first_mismatch(f, g, mode).has_value();
}

/// Whether every entry up to `degree` vanishes on every matrix-unit tuple.
template <class R>
bool is_zero_series(const Series<R>& f, std::size_t degree) {
  return series_equal(f, zero_series<R>(f.components(), f.dim(), f.degree_cap()), Exhaustive{degree});
}

/// The moment generating series (constant 1) and the cumulant series
/// (constant 0).
BSeries from_moments(const MomentSystem& x);
BSeries from_cumulants(const CumulantSystem& kappa);

/// The same series with constant polynomial coefficients.
PolySeries lift(const BSeries& f);
/// Partial derivative of every coefficient in variable `var` (0 = t, 1 = s).
PolySeries derivative(const PolySeries& f, int var);
/// Evaluation of every coefficient at (t, s).
BSeries specialize(const PolySeries& f, const Rational& t, const Rational& s);

/// mu^X composed with mu^Y.
BSeries muraki_sum(const MomentSystem& x, const MomentSystem& y);

/// mu^{X+Y} from the definition: every entry expands into the 2^n words with
/// letters from X or Y and evaluates them with mixed_moment, X before Y.
BSeries muraki_oracle(const MomentSystem& x, const MomentSystem& y);

/// mu^{t.X} (var = 0) or mu^{s.X} (var = 1), interpolated entrywise from
/// N -> mu^{N.X}. Entries are memoized.
PolySeries t_family(const MomentSystem& x, int var = 0);
/// mu^{(s+t).X}.
PolySeries sum_family(const MomentSystem& x);

/// d/dt mu^{t.X} - kappa^X odot mu^{t.X} and d/dt mu^{t.X} - mu^{t.X} star kappa^X.
std::pair<PolySeries, PolySeries> diff_eq_residuals(const MomentSystem& x);

/// mu^{(s+t).X} and mu^{t.X} odot mu^{s.X}.
std::pair<PolySeries, PolySeries> semigroup_sides(const MomentSystem& x);

/// Seeded random series: constant and, per index word, a sum of two terms
/// A_0 b_1 A_1 ... b_n A_n with small random rational matrices A_j.
BSeries random_series(std::uint64_t seed, std::size_t components, std::size_t dim, std::size_t degree_cap);

}  // namespace opmono
