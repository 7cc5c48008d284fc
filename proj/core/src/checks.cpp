#include "opmono/checks.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "opmono/clt.hpp"
#include "opmono/cumulants.hpp"
#include "opmono/json_io.hpp"
#include "opmono/moment_oracle.hpp"
#include "opmono/partitions.hpp"
#include "opmono/random_models.hpp"
#include "opmono/series.hpp"
#include "opmono/symbolic.hpp"

namespace opmono {

namespace {

// The seeded models every suite runs on.
MatrixModel model_a(std::uint64_t seed) { return random_model(1000 + seed, {2, 2, 2, false}); }
MatrixModel model_b(std::uint64_t seed) { return random_model(2000 + seed, {2, 3, 2, false}); }
MatrixModel model_centered(std::uint64_t seed) { return random_model(3000 + seed, {2, 2, 1, true}); }

std::string describe(std::span<const int> word, std::size_t tuple_index) {
  return "word [" + word_key(word) + "], argument tuple #" + std::to_string(tuple_index);
}

std::string str(std::size_t v) { return std::to_string(v); }

// ---------------------------------------------------------------- partitions

std::string nc_counts(const CheckOptions&) {
  const std::size_t catalan[] = {1, 2, 5, 14, 42, 132};
  for (int n = 1; n <= 6; ++n) {
    const auto nc = noncrossing_partitions(n);
    std::vector<SetPartition> filtered;
    for (const auto& p : set_partitions(n)) {
      if (is_noncrossing(p.blocks())) filtered.push_back(p);
    }
    if (nc.size() != catalan[n - 1]) return "|NC(" + str(n) + ")| = " + str(nc.size());
    if (nc != filtered) return "NC(" + str(n) + ") differs from the crossing-test filter";
  }
  return {};
}

std::string monotone_counts(const CheckOptions&) {
  for (int n = 1; n <= 6; ++n) {
    std::uint64_t extensions = 0;
    for (const auto& p : noncrossing_partitions(n)) extensions += count_linear_extensions(p);
    const auto m = monotone_partitions(n);
    if (m.size() != extensions) return "|M(" + str(n) + ")| = " + str(m.size()) + " vs " + str(extensions);
    for (const auto& p : m) {
      if (!is_monotone(p)) return "non-monotone member " + to_string(p.blocks());
    }
  }
  for (int n = 1; n <= 5; ++n) {
    std::vector<OrderedPartition> filtered;
    for (const auto& p : ordered_partitions(n)) {
      if (is_monotone(p)) filtered.push_back(p);
    }
    std::set<OrderedPartition> a(filtered.begin(), filtered.end());
    const auto m = monotone_partitions(n);
    if (a != std::set<OrderedPartition>(m.begin(), m.end())) return "M(" + str(n) + ") differs from the LP filter";
  }
  return {};
}

std::string worked_examples(const CheckOptions&) {
  if (!is_monotone(OrderedPartition(11, {{2, 11}, {3, 8, 10}, {9}, {7}, {1}, {4, 5, 6}}))) {
    return "the eleven-point example is not monotone";
  }
  if (!nests({4, 5, 6}, {3, 8, 10}) || nests({1}, {2, 3}) || !nests({2}, {1, 3})) return "nesting examples";
  if (q_map(OrderedPartition(7, {{2, 6}, {1, 3, 4}, {5, 7}})).blocks() != BlockList{{1}, {2, 6}, {3, 4}, {5}, {7}}) {
    return "q_map of ({2,6},{1,3,4},{5,7})";
  }
  if (q_map(OrderedPartition(7, {{1, 3, 4}, {2, 6}, {5, 7}})).blocks() != BlockList{{1, 3, 4}, {2}, {5}, {6}, {7}}) {
    return "q_map of ({1,3,4},{2,6},{5,7})";
  }
  const auto ib1 = interpolation_blocks({2, 3, 4, 6}, {1, 2, 3, 4, 5, 6}).blocks;
  const auto ib2 = interpolation_blocks({3, 4, 7}, {1, 2, 3, 4, 6, 7, 8}).blocks;
  if (ib1 != std::vector<std::vector<int>>{{1}, {}, {}, {5}, {}}) return "interpolation blocks, first example";
  if (ib2 != std::vector<std::vector<int>>{{1, 2}, {}, {6}, {8}}) return "interpolation blocks, second example";
  const std::vector<int> s1{3, 1, 2};
  const std::vector<int> s2{2, 1, 2};
  if (ordered_from_sequence(s1).blocks() != BlockList{{1}, {3}, {2}}) return "ordered_from_sequence (3,1,2)";
  if (ordered_from_sequence(s2).blocks() != BlockList{{1, 3}, {2}}) return "ordered_from_sequence (2,1,2)";
  return {};
}

std::string qmap_structure(const CheckOptions&) {
  for (int n = 1; n <= 6; ++n) {
    std::set<SetPartition> image;
    for (const auto& p : ordered_partitions(n)) {
      const SetPartition q = q_map(p);
      if (!q.is_noncrossing()) return "q_map(" + to_string(p.blocks()) + ") crosses";
      image.insert(q);
    }
    const auto nc = noncrossing_partitions(n);
    if (n <= 5 && image != std::set<SetPartition>(nc.begin(), nc.end())) return "q_map not onto NC(" + str(n) + ")";
  }
  for (int n = 1; n <= 5; ++n) {
    for (const auto& p : monotone_partitions(n)) {
      if (q_map(p) != p.underlying()) return "q_map moves the monotone partition " + to_string(p.blocks());
    }
  }
  return {};
}

std::string a_pi_polynomials(const CheckOptions&) {
  for (int n = 1; n <= 5; ++n) {
    const auto& table = factorization_table(n);
    for (int N = 0; N <= n + 1; ++N) {
      // Brute force over all label sequences, independent of the table.
      std::map<SetPartition, std::uint64_t> counts;
      std::vector<int> seq(static_cast<std::size_t>(n), 1);
      std::uint64_t total = 0;
      if (N > 0) {
        while (true) {
          ++counts[monotone_factorization(seq)];
          ++total;
          std::size_t j = 0;
          while (j < seq.size() && ++seq[j] > N) seq[j++] = 1;
          if (j == seq.size()) break;
        }
      }
      Rational power(1);
      for (int j = 0; j < n; ++j) power *= Rational(N);
      if (Rational(static_cast<long>(total)) != power) return "sequence count";
      Rational sum(0);
      for (std::size_t i = 0; i < table.partitions.size(); ++i) {
        const Rational a = table.a_pi(i, N);
        sum += a;
        if (a != Rational(static_cast<long>(counts[table.partitions[i]]))) {
          return "a_pi(" + to_string(table.partitions[i].blocks()) + ", " + str(static_cast<std::size_t>(N)) + ")";
        }
      }
      if (sum != power) return "sum of a_pi(N) != N^n for n = " + str(n);
      if (n <= 3 && N <= 3) {
        for (std::size_t i = 0; i < table.partitions.size(); ++i) {
          if (Rational(static_cast<long>(a_pi_count(table.partitions[i], N))) != table.a_pi(i, N)) return "a_pi_count";
        }
      }
    }
  }
  return {};
}

// -------------------------------------------------------------------- oracle

std::string reduction_equals_qmap(const CheckOptions& o) {
  const MomentSystem x = moments_of(model_a(o.seed), 4);
  const std::vector<long> Ns{0, 1, 2, 3};
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto tuples = basis_tuples(2, n);
    for (const auto& word : index_words(2, n)) {
      for (std::size_t t = 0; t < tuples.size(); ++t) {
        const auto a = dot_moment_values(x, Ns, word, tuples[t], DotMethod::Reduction);
        const auto b = dot_moment_values(x, Ns, word, tuples[t], DotMethod::QMap);
        if (a != b) return describe(word, t);
      }
    }
  }
  return {};
}

std::string literal_dot_sum(const CheckOptions& o) {
  const MomentSystem x = moments_of(model_b(o.seed), 4);
  std::mt19937_64 rng(o.seed + 7);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& word : index_words(2, n)) {
      const auto args = random_args(rng, 2, n);
      for (long N = 0; N <= 3; ++N) {
        const BMatrix grouped = dot_moment(x, N, word, args, DotMethod::Reduction);
        if (grouped != dot_moment_literal(x, N, word, args, DotMethod::Reduction) ||
            grouped != dot_moment_literal(x, N, word, args, DotMethod::QMap)) {
          return describe(word, 0) + ", N = " + str(static_cast<std::size_t>(N));
        }
      }
    }
  }
  return {};
}

std::string reduction_confluence(const CheckOptions& o) {
  const Marginals marginals{{0, moments_of(random_model(5000 + o.seed, {2, 2, 2, false}), 5)},
                            {1, moments_of(random_model(5001 + o.seed, {2, 2, 2, false}), 5)},
                            {2, moments_of(random_model(5002 + o.seed, {2, 3, 2, false}), 5)}};
  const std::vector<int> order{0, 1, 2};
  std::mt19937_64 rng(o.seed + 11);
  std::uniform_int_distribution<int> component(0, 1);
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& labels : index_words(3, n)) {
      std::vector<int> idx(n);
      for (auto& i : idx) i = component(rng);
      const FormalWord word = make_word(labels, idx, random_args(rng, 2, n));
      const BMatrix reference = mixed_moment(word, marginals, order);
      for (const auto& v : mixed_moment_all_paths(word, marginals, order)) {
        if (v != reference) return "label word [" + word_key(labels) + "]";
      }
    }
  }
  return {};
}

std::string qmap_universality(const CheckOptions& o) {
  std::mt19937_64 rng(o.seed + 13);
  for (const auto& model : {model_a(o.seed), model_b(o.seed)}) {
    const MomentSystem x = moments_of(model, 4);
    for (int n = 1; n <= 4; ++n) {
      const auto nc = noncrossing_partitions(n);
      for (long N = 0; N <= 3; ++N) {
        std::vector<std::uint64_t> counts;
        for (const auto& p : nc) counts.push_back(a_pi_count(p, static_cast<int>(N)));
        for (const auto& word : index_words(2, static_cast<std::size_t>(n))) {
          const auto args = random_args(rng, 2, static_cast<std::size_t>(n));
          BMatrix expansion = BMatrix::zero(2);
          for (std::size_t i = 0; i < nc.size(); ++i) {
            if (counts[i] == 0) continue;
            expansion.add_scaled(Rational(static_cast<long>(counts[i])),
                                 functional_pi(x.evaluator(), nc[i].blocks(), word, args));
          }
          if (expansion != dot_moment(x, N, word, args, DotMethod::Reduction)) return describe(word, 0);
        }
      }
    }
  }
  return {};
}

std::string moment_model_consistency(const CheckOptions& o) {
  const MatrixModel model = model_b(o.seed);
  const MomentSystem x = moments_of(model, 5);
  std::mt19937_64 rng(o.seed + 17);
  std::uniform_real_distribution<double> coin;
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& word : index_words(2, n)) {
      auto args = random_args(rng, 2, n);
      // Literal block product.
      BlockMatrix product = BlockMatrix::identity(model.blocks(), model.dim());
      for (std::size_t j = 0; j < n; ++j) product = product * embed(model, args[j]) * model.component(word[j]);
      const BMatrix value = x(word, args);
      if (value != cond_expect(model, product)) return "block product, " + describe(word, 0);
      // Multilinearity in a random slot.
      const std::size_t slot = static_cast<std::size_t>(coin(rng) * static_cast<double>(n));
      const BMatrix u = random_bmatrix(rng, 2);
      const Rational alpha = random_rational(rng);
      auto mixed = args;
      mixed[slot] = args[slot] * alpha + u;
      auto other = args;
      other[slot] = u;
      if (x(word, mixed) != value * alpha + x(word, other)) return "multilinearity, " + describe(word, 0);
    }
  }
  const std::vector<int> none;
  if (x(none, std::vector<BMatrix>{}) != BMatrix::identity(2)) return "empty moment";
  return {};
}

std::string peel_order_independence(const CheckOptions& o) {
  const MomentSystem x = moments_of(model_a(o.seed), 5);
  std::mt19937_64 rng(o.seed + 19);
  for (int n = 1; n <= 5; ++n) {
    for (const auto& p : noncrossing_partitions(n)) {
      std::vector<int> idx(static_cast<std::size_t>(n));
      for (std::size_t j = 0; j < idx.size(); ++j) idx[j] = static_cast<int>((j * 5 + rng()) % 2);
      const auto args = random_args(rng, 2, idx.size());
      const auto values = functional_pi_all_orders(x.evaluator(), p.blocks(), idx, args);
      for (const auto& v : values) {
        if (v != values.front()) return "A_pi for " + to_string(p.blocks());
      }
    }
  }
  return {};
}

// ----------------------------------------------------------------- cumulants

std::string interpolation_equals_inversion(const CheckOptions& o) {
  const MomentSystem x = memoize(moments_of(model_a(o.seed), 5));
  const CumulantSystem interpolated = cumulant(x);
  const CumulantSystem inverted = cumulants_from_moments(x);
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto tuples = basis_tuples(2, n);
    for (const auto& word : index_words(2, n)) {
      for (std::size_t t = 0; t < tuples.size(); ++t) {
        if (interpolated(word, tuples[t]) != inverted(word, tuples[t])) return describe(word, t);
      }
    }
  }
  return {};
}

std::string moment_cumulant_roundtrip(const CheckOptions& o) {
  const MomentSystem x = memoize(moments_of(model_b(o.seed), 5));
  const CumulantSystem kappa = cumulant(x);
  std::mt19937_64 rng(o.seed + 23);
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& word : index_words(2, n)) {
      const auto args = random_args(rng, 2, n);
      if (moments_from_cumulants(kappa, word, args) != x(word, args)) return "moments, " + describe(word, 0);
    }
  }
  // A synthetic cumulant family, pushed through the formula and back.
  const BSeries synthetic = random_series(o.seed + 29, 2, 2, 4);
  const CumulantSystem given(2, 2, 4, synthetic.entry());
  const CumulantSystem recovered = cumulants_from_moments(memoize(moment_system_from_cumulants(given)));
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& word : index_words(2, n)) {
      const auto args = random_args(rng, 2, n);
      if (recovered(word, args) != given(word, args)) return "cumulants, " + describe(word, 0);
    }
  }
  return {};
}

std::string low_order_formulas(const CheckOptions& o) {
  // Scalar: m3 = K3 + (5/2) K1 K2 + K1^3 and K2 = m2 - m1^2.
  const MomentSystem s = moments_of(random_model(4000 + o.seed, {1, 3, 1, false}), 3);
  const CumulantSystem k = cumulant(s);
  const std::vector<BMatrix> ones(3, BMatrix::identity(1));
  const std::vector<int> w(3, 0);
  auto at = [&](const auto& f, std::size_t n) {
    return f(std::span<const int>(w).first(n), std::span<const BMatrix>(ones).first(n))(0, 0);
  };
  const Rational m1 = at(s, 1), m2 = at(s, 2), m3 = at(s, 3);
  const Rational k1 = at(k, 1), k2 = at(k, 2), k3 = at(k, 3);
  if (k1 != m1 || k2 != m2 - m1 * m1) return "scalar K1, K2";
  if (m3 != k3 + Rational(5, 2) * k1 * k2 + k1 * k1 * k1) return "scalar m3";
  // Operator-valued second cumulant, expanded by hand over label pairs.
  const MomentSystem x = moments_of(model_a(o.seed), 2);
  const CumulantSystem kx = cumulant(x);
  for (const auto& word : index_words(2, 2)) {
    for (const auto& b : basis_tuples(2, 2)) {
      const std::vector<int> i1{word[0]}, i2{word[1]};
      const std::vector<BMatrix> b1{b[0]}, b2{b[1]};
      const BMatrix inner_right = x(i2, b2);
      const BMatrix inner_left = x(i1, b1);
      const std::vector<BMatrix> left_args{inner_left * b[1]};
      BMatrix expected = x(word, b);
      // phi(b1 X phi(b2 X)) = phi(b1 X) phi(b2 X) by right B-linearity.
      expected -= Rational(1, 2) * (x(i1, b1) * inner_right + x(i2, left_args));
      if (kx(word, b) != expected) return "second cumulant, word [" + word_key(word) + "]";
    }
  }
  return {};
}

std::string extra_point_guard(const CheckOptions& o) {
  const MomentSystem x = moments_of(model_b(o.seed), 5);
  std::mt19937_64 rng(o.seed + 31);
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& word : index_words(2, n)) {
      const auto args = random_args(rng, 2, n);
      const MatrixPolynomial p = dot_polynomial(x, word, args);  // throws on a mismatch at N = n + 1
      if (p.degree() > static_cast<int>(n) || !p.coefficient(0).is_zero()) return "degree, " + describe(word, 0);
      if (p.evaluate(Rational(n + 2)) != dot_moment(x, static_cast<long>(n + 2), word, args, DotMethod::Reduction)) {
        return "prediction at N = n + 2, " + describe(word, 0);
      }
    }
  }
  return {};
}

std::string additivity(const CheckOptions& o) {
  const MomentSystem x = moments_of(model_a(o.seed), 4);
  const CumulantSystem kx = memoize(cumulant(x));
  for (long N = 0; N <= 4; ++N) {
    const CumulantSystem kn = cumulant(memoize(dot_system(x, N)));
    for (std::size_t n = 1; n <= 4; ++n) {
      const auto tuples = basis_tuples(2, n);
      for (const auto& word : index_words(2, n)) {
        for (std::size_t t = 0; t < tuples.size(); ++t) {
          if (kn(word, tuples[t]) != kx(word, tuples[t]) * Rational(N)) {
            return "N = " + str(static_cast<std::size_t>(N)) + ", " + describe(word, t);
          }
        }
      }
    }
  }
  return {};
}

std::string dot_associativity(const CheckOptions& o) {
  const MomentSystem x = moments_of(model_b(o.seed), 4);
  std::mt19937_64 rng(o.seed + 37);
  for (long M = 0; M <= 3; ++M) {
    const MomentSystem mx = memoize(dot_system(x, M));
    for (long N = 0; N <= 3; ++N) {
      const MomentSystem iterated = dot_system(mx, N);
      const MomentSystem direct = dot_system(x, N * M);
      for (std::size_t n = 1; n <= 4; ++n) {
        for (const auto& word : index_words(2, n)) {
          const auto args = random_args(rng, 2, n);
          if (iterated(word, args) != direct(word, args)) {
            return "N = " + str(static_cast<std::size_t>(N)) + ", M = " + str(static_cast<std::size_t>(M)) + ", " +
                   describe(word, 0);
          }
        }
      }
    }
  }
  return {};
}

// -------------------------------------------------------------------- series

std::string mismatch_text(const std::optional<Mismatch>& m) {
  if (!m) return {};
  if (m->indices.empty()) return "constants differ";
  return "word [" + word_key(m->indices) + "]";
}

std::string series_identity(const CheckOptions& o) {
  const BSeries f = random_series(o.seed + 41, 2, 2, 4);
  const BSeries id = identity_series<BMatrix>(2, 2, 4);
  if (auto m = first_mismatch(odot(id, f), f, Exhaustive{4})) return "Id odot F: " + mismatch_text(m);
  if (auto m = first_mismatch(odot(f, id), f, Exhaustive{4})) return "F odot Id: " + mismatch_text(m);
  // Id star G has constant G_0 and entries G.
  const BSeries g = random_series(o.seed + 43, 2, 2, 4);
  if (auto m = first_mismatch(star(id, g), g, Exhaustive{4})) return "Id star G: " + mismatch_text(m);
  return {};
}

std::string series_low_degree(const CheckOptions& o) {
  // The composition and star at n = 1, 2 against their explicit expansions.
  const BSeries f = random_series(o.seed + 47, 2, 2, 2);
  const BSeries g = random_series(o.seed + 53, 2, 2, 2);
  const BSeries fg = odot(f, g);
  const BSeries fsg = star(f, g);
  const BMatrix& f0 = f.constant();
  const BMatrix& g0 = g.constant();
  for (const auto& word : index_words(2, 2)) {
    for (const auto& b : basis_tuples(2, 2)) {
      const std::span<const int> w(word);
      const std::span<const BMatrix> bs(b);
      auto F = [&](std::initializer_list<int> i, std::vector<BMatrix> a) { return f(std::vector<int>(i), a); };
      auto G = [&](std::initializer_list<int> i, std::vector<BMatrix> a) { return g(std::vector<int>(i), a); };
      const int i1 = word[0], i2 = word[1];
      const BMatrix one = F({i1}, {g0 * b[0]}) * g0 + f0 * G({i1}, {b[0]});
      if (fg(w.first(1), bs.first(1)) != one) return "odot, n = 1";
      const BMatrix two = F({i1, i2}, {g0 * b[0], g0 * b[1]}) * g0 + F({i1}, {g0 * b[0]}) * G({i2}, {b[1]}) +
                          F({i2}, {G({i1}, {b[0]}) * b[1]}) * g0 + f0 * G({i1, i2}, {b[0], b[1]});
      if (fg(w, bs) != two) return "odot, n = 2";
      if (fsg(w.first(1), bs.first(1)) != f0 * G({i1}, {b[0]})) return "star, n = 1";
      const BMatrix star_two = F({i2}, {G({i1}, {b[0]}) * b[1]}) + F({i1}, {b[0]}) * G({i2}, {b[1]}) +
                               f0 * G({i1, i2}, {b[0], b[1]});
      if (fsg(w, bs) != star_two) return "star, n = 2";
    }
  }
  if (fg.constant() != f0 * g0 || fsg.constant() != f0 * g0) return "constants";
  return {};
}

std::string odot_associativity(const CheckOptions& o) {
  const BSeries f = random_series(o.seed + 59, 2, 2, 4);
  const BSeries g = random_series(o.seed + 61, 2, 2, 4);
  const BSeries h = random_series(o.seed + 67, 2, 2, 4);
  return mismatch_text(first_mismatch(odot(memoize(odot(f, g)), h), odot(f, memoize(odot(g, h))), Exhaustive{4}));
}

std::string right_distributivity(const CheckOptions& o) {
  const BSeries f = random_series(o.seed + 71, 2, 2, 4);
  const BSeries g = random_series(o.seed + 73, 2, 2, 4);
  const BSeries h = random_series(o.seed + 79, 2, 2, 4);
  return mismatch_text(first_mismatch(odot(f + g, h), odot(f, h) + odot(g, h), Exhaustive{4}));
}

std::string symbolic_counts(const CheckOptions&) {
  std::size_t two = 1, three = 1;
  for (std::size_t n = 1; n <= 6; ++n) {
    two *= 2;
    three *= 3;
    if (odot_term_count(n) != two) return "2^n count at n = " + str(n);
    const auto triple = triple_odot_terms(n);
    if (triple.left.size() != three || triple.right.size() != three) return "3^n count at n = " + str(n);
    if (triple.left != triple.right) return "expansions of the two bracketings differ at n = " + str(n);
  }
  return {};
}

std::string muraki(const CheckOptions& o) {
  const MomentSystem x = moments_of(model_a(o.seed), 5);
  const MomentSystem y = moments_of(model_b(o.seed), 5);
  const BSeries lhs = muraki_sum(x, y);
  const BSeries rhs = muraki_oracle(x, y);
  if (auto m = first_mismatch(lhs, rhs, Exhaustive{4})) return mismatch_text(m);
  if (auto m = first_mismatch(lhs, rhs, Randomized{o.seed, 5, 2})) return "degree 5: " + mismatch_text(m);
  // Degree-1 entries are additive; a variable with vanishing moments is neutral.
  const MomentSystem zero(2, 2, 5, [](std::span<const int>, std::span<const BMatrix> b) { return BMatrix::zero(b.front().dim()); });
  if (auto m = first_mismatch(muraki_sum(x, zero), from_moments(x), Exhaustive{3})) return "zero summand: " + mismatch_text(m);
  return {};
}

std::string differential_equations(const CheckOptions& o) {
  const MomentSystem x = moments_of(model_a(o.seed), 4);
  const auto [odot_residual, star_residual] = diff_eq_residuals(x);
  if (!is_zero_series(odot_residual, 4)) return "d/dt mu - kappa odot mu";
  if (!is_zero_series(star_residual, 4)) return "d/dt mu - mu star kappa";
  // mu^{t.X} specializes to mu^{N.X}.
  const PolySeries mu = t_family(x);
  for (long N = 0; N <= 3; ++N) {
    if (auto m = first_mismatch(specialize(mu, Rational(N), Rational(0)), from_moments(dot_system(x, N)), Exhaustive{3})) {
      return "t = " + str(static_cast<std::size_t>(N)) + ": " + mismatch_text(m);
    }
  }
  return {};
}

std::string semigroup(const CheckOptions& o) {
  const MomentSystem x = moments_of(model_b(o.seed), 4);
  const auto [sum, composed] = semigroup_sides(x);
  return mismatch_text(first_mismatch(sum, composed, Exhaustive{4}));
}

// ----------------------------------------------------------------------- clt

std::string clt_dual_method(const CheckOptions& o) {
  const MomentSystem x = memoize(moments_of(model_centered(o.seed), 6));
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto tuples = basis_tuples(2, n);
    for (std::size_t t = 0; t < tuples.size(); ++t) {
      const BMatrix limit = clt_limit(x, tuples[t]);
      const BMatrix oracle = clt_oracle(x, tuples[t]);
      if (limit != oracle) return "n = " + str(n) + ", argument tuple #" + str(t);
      if (n % 2 == 1 && !limit.is_zero()) return "odd moment n = " + str(n);
    }
  }
  return {};
}

std::string clt_scalar(const CheckOptions&) {
  // X = [[0,1],[1,0]] with equal weights: phi(X) = 0, phi(X^2) = 1.
  const BlockMatrix flip(2, 1, {BMatrix::zero(1), BMatrix::identity(1), BMatrix::identity(1), BMatrix::zero(1)});
  const MatrixModel model(1, 2, {Rational(1, 2), Rational(1, 2)}, {{"X1", flip}});
  const MomentSystem x = moments_of(model, 6);
  for (std::size_t n = 1; n <= 6; ++n) {
    const std::vector<BMatrix> ones(n, BMatrix::identity(1));
    Rational expected(0);
    if (n % 2 == 0) {
      expected = binomial(static_cast<long>(n), static_cast<long>(n / 2));
      for (std::size_t j = 0; j < n / 2; ++j) expected /= Rational(2);
    }
    if (clt_limit(x, ones)(0, 0) != expected || clt_oracle(x, ones)(0, 0) != expected) return "n = " + str(n);
  }
  const Rational table[] = {Rational(1), Rational(3, 2), Rational(5, 2)};
  for (std::size_t j = 0; j < 3; ++j) {
    const std::vector<BMatrix> ones(2 * (j + 1), BMatrix::identity(1));
    if (clt_limit(x, ones)(0, 0) != table[j]) return "tabulated moment " + str(2 * (j + 1));
  }
  return {};
}

CheckSpec make(std::string suite, std::string name, std::string (*body)(const CheckOptions&)) {
  return CheckSpec{suite, name, [suite, name, body](const CheckOptions& o) {
                     CheckResult r{suite, name, false, {}, 0};
                     const auto start = std::chrono::steady_clock::now();
                     try {
                       r.detail = body(o);
                       r.passed = r.detail.empty();
                     } catch (const std::exception& e) {
                       r.detail = std::string("exception: ") + e.what();
                     }
                     r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
                     return r;
                   }};
}

}  // namespace

const std::vector<CheckSpec>& all_checks() {
  static const std::vector<CheckSpec> checks{
      make("partitions", "nc_counts", nc_counts),
      make("partitions", "monotone_counts", monotone_counts),
      make("partitions", "worked_examples", worked_examples),
      make("partitions", "qmap_structure", qmap_structure),
      make("partitions", "a_pi_polynomials", a_pi_polynomials),
      make("oracle", "moment_model_consistency", moment_model_consistency),
      make("oracle", "peel_order_independence", peel_order_independence),
      make("oracle", "reduction_confluence", reduction_confluence),
      make("oracle", "literal_dot_sum", literal_dot_sum),
      make("oracle", "reduction_equals_qmap", reduction_equals_qmap),
      make("oracle", "qmap_universality", qmap_universality),
      make("cumulants", "low_order_formulas", low_order_formulas),
      make("cumulants", "extra_point_guard", extra_point_guard),
      make("cumulants", "interpolation_equals_inversion", interpolation_equals_inversion),
      make("cumulants", "moment_cumulant_roundtrip", moment_cumulant_roundtrip),
      make("cumulants", "additivity", additivity),
      make("cumulants", "dot_associativity", dot_associativity),
      make("series", "identity", series_identity),
      make("series", "low_degree_expansions", series_low_degree),
      make("series", "symbolic_counts", symbolic_counts),
      make("series", "odot_associativity", odot_associativity),
      make("series", "right_distributivity", right_distributivity),
      make("series", "muraki", muraki),
      make("series", "differential_equations", differential_equations),
      make("series", "semigroup", semigroup),
      make("clt", "scalar_moments", clt_scalar),
      make("clt", "limit_equals_oracle", clt_dual_method),
  };
  return checks;
}

std::vector<std::string> suite_names() { return {"partitions", "oracle", "cumulants", "series", "clt"}; }

std::vector<CheckResult> run_suite(const std::string& suite, const CheckOptions& options,
                                   const std::function<void(const CheckResult&)>& on_result) {
  const auto names = suite_names();
  if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end()) {
    throw std::invalid_argument("unknown suite: " + suite);
  }
  std::vector<CheckResult> out;
  for (const auto& c : all_checks()) {
    if (suite != "all" && c.suite != suite) continue;
    out.push_back(c.run(options));
    if (on_result) on_result(out.back());
  }
  return out;
}

CheckResult run_check(const std::string& name, const CheckOptions& options) {
  for (const auto& c : all_checks()) {
    if (c.name == name) return c.run(options);
  }
  throw std::invalid_argument("unknown check: " + name);
}

}  // namespace opmono
