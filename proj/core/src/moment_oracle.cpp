#include "opmono/moment_oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace opmono {

FormalWord make_word(std::span<const int> labels, std::span<const int> indices, std::span<const BMatrix> args) {
  if (labels.size() != indices.size() || indices.size() != args.size()) {
    throw std::invalid_argument("make_word: length mismatch");
  }
  if (args.empty()) throw std::invalid_argument("make_word: empty word needs an explicit dimension");
  const std::size_t d = args.front().dim();
  FormalWord w{args.front(), {}};
  for (std::size_t j = 0; j < labels.size(); ++j) {
    const BMatrix& right = j + 1 < args.size() ? args[j + 1] : BMatrix::identity(d);
    w.letters.push_back(Letter{labels[j], indices[j], right});
  }
  return w;
}

namespace {

struct Run {
  std::size_t first;
  std::size_t last;
};

class Reducer {
 public:
  Reducer(const Marginals& marginals, std::span<const int> order) : marginals_(marginals) {
    for (std::size_t i = 0; i < order.size(); ++i) rank_[order[i]] = static_cast<int>(i);
  }

  int rank(int label) const {
    auto it = rank_.find(label);
    if (it == rank_.end()) throw std::invalid_argument("mixed_moment: label " + std::to_string(label) + " is not ordered");
    return it->second;
  }

  void validate(const FormalWord& w) const {
    for (const auto& l : w.letters) {
      rank(l.label);
      if (!marginals_.count(l.label)) {
        throw std::invalid_argument("mixed_moment: no marginal for label " + std::to_string(l.label));
      }
      if (l.trailing.dim() != w.leading.dim()) throw std::invalid_argument("mixed_moment: coefficient dimensions differ");
    }
  }

  std::vector<Run> peaks(const FormalWord& w) const {
    std::vector<Run> runs;
    const auto& ls = w.letters;
    for (std::size_t i = 0; i < ls.size();) {
      std::size_t j = i;
      while (j + 1 < ls.size() && ls[j + 1].label == ls[i].label) ++j;
      const int r = rank(ls[i].label);
      const bool left_ok = i == 0 || rank(ls[i - 1].label) < r;
      const bool right_ok = j + 1 == ls.size() || rank(ls[j + 1].label) < r;
      if (left_ok && right_ok) runs.push_back({i, j});
      i = j + 1;
    }
    return runs;
  }

  // Replace the run by its marginal value absorbed into the coefficient to its right.
  FormalWord reduce(const FormalWord& w, Run run) const {
    const auto& ls = w.letters;
    std::vector<int> idx;
    std::vector<BMatrix> args;
    args.push_back(run.first == 0 ? w.leading : ls[run.first - 1].trailing);
    for (std::size_t j = run.first; j <= run.last; ++j) {
      idx.push_back(ls[j].component);
      if (j < run.last) args.push_back(ls[j].trailing);
    }
    const BMatrix value = marginals_.at(ls[run.first].label)(idx, args);
    BMatrix absorbed = value * ls[run.last].trailing;

    FormalWord out;
    out.leading = run.first == 0 ? std::move(absorbed) : w.leading;
    for (std::size_t j = 0; j < run.first; ++j) out.letters.push_back(ls[j]);
    if (run.first > 0) out.letters.back().trailing = std::move(absorbed);
    for (std::size_t j = run.last + 1; j < ls.size(); ++j) out.letters.push_back(ls[j]);
    return out;
  }

  Run default_peak(const FormalWord& w) const {
    int best = -1;
    std::size_t at = 0;
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
      const int r = rank(w.letters[i].label);
      if (r > best) {
        best = r;
        at = i;
      }
    }
    std::size_t last = at;
    while (last + 1 < w.letters.size() && w.letters[last + 1].label == w.letters[at].label) ++last;
    return {at, last};
  }

  void all_paths(const FormalWord& w, std::vector<BMatrix>& out) const {
    if (w.letters.empty()) {
      out.push_back(w.leading);
      return;
    }
    for (const Run& run : peaks(w)) all_paths(reduce(w, run), out);
  }

 private:
  const Marginals& marginals_;
  std::map<int, int> rank_;
};

}  // namespace

BMatrix mixed_moment(const FormalWord& word, const Marginals& marginals, std::span<const int> order) {
  Reducer reducer(marginals, order);
  reducer.validate(word);
  FormalWord w = word;
  while (!w.letters.empty()) w = reducer.reduce(w, reducer.default_peak(w));
  return w.leading;
}

std::vector<BMatrix> mixed_moment_all_paths(const FormalWord& word, const Marginals& marginals,
                                            std::span<const int> order) {
  Reducer reducer(marginals, order);
  reducer.validate(word);
  std::vector<BMatrix> out;
  reducer.all_paths(word, out);
  return out;
}

namespace {

struct PiState {
  std::vector<int> alive;          // remaining positions (0-based), increasing
  std::vector<BMatrix> coef;       // current left coefficient per position
  std::vector<std::size_t> owner;  // block index per position
  std::vector<char> block_alive;
  BMatrix right;                   // accumulated right factor
};

// Blocks whose elements occupy consecutive alive slots: (block, first slot, last slot).
std::vector<std::array<std::size_t, 3>> interval_candidates(const PiState& s, const BlockList& blocks) {
  std::vector<std::array<std::size_t, 3>> out;
  for (std::size_t slot = 0; slot < s.alive.size();) {
    const std::size_t b = s.owner[s.alive[slot]];
    std::size_t end = slot;
    while (end + 1 < s.alive.size() && s.owner[s.alive[end + 1]] == b) ++end;
    if (end - slot + 1 == blocks[b].size()) out.push_back({b, slot, end});
    slot = end + 1;
  }
  return out;
}

void peel(PiState& s, const Evaluator& family, std::span<const int> indices, const std::array<std::size_t, 3>& cand) {
  const auto [b, first, last] = cand;
  std::vector<int> idx;
  std::vector<BMatrix> args;
  for (std::size_t slot = first; slot <= last; ++slot) {
    idx.push_back(indices[s.alive[slot]]);
    args.push_back(s.coef[s.alive[slot]]);
  }
  BMatrix value = family(idx, args);
  if (last + 1 == s.alive.size()) {
    s.right = value * s.right;
  } else {
    const int next = s.alive[last + 1];
    s.coef[next] = value * s.coef[next];
  }
  s.alive.erase(s.alive.begin() + static_cast<std::ptrdiff_t>(first),
                s.alive.begin() + static_cast<std::ptrdiff_t>(last) + 1);
  s.block_alive[b] = 0;
}

PiState start_state(const BlockList& blocks, std::span<const int> indices, std::span<const BMatrix> args) {
  if (indices.size() != args.size()) throw std::invalid_argument("functional_pi: arity mismatch");
  if (args.empty()) throw std::invalid_argument("functional_pi: empty word");
  if (!is_noncrossing(blocks)) throw std::domain_error("functional_pi: partition is crossing");
  const std::size_t n = args.size();
  PiState s;
  s.owner.assign(n, blocks.size());
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (int x : blocks[b]) {
      if (x < 1 || static_cast<std::size_t>(x) > n || s.owner[x - 1] != blocks.size()) {
        throw std::invalid_argument("functional_pi: blocks do not partition the word");
      }
      s.owner[x - 1] = b;
    }
  }
  for (std::size_t p = 0; p < n; ++p) {
    if (s.owner[p] == blocks.size()) throw std::invalid_argument("functional_pi: blocks do not cover the word");
    s.alive.push_back(static_cast<int>(p));
  }
  s.coef.assign(args.begin(), args.end());
  s.block_alive.assign(blocks.size(), 1);
  s.right = BMatrix::identity(args.front().dim());
  return s;
}

void all_orders_rec(PiState s, const Evaluator& family, const BlockList& blocks, std::span<const int> indices,
                    std::vector<BMatrix>& out) {
  if (s.alive.empty()) {
    out.push_back(s.right);
    return;
  }
  for (const auto& cand : interval_candidates(s, blocks)) {
    PiState next = s;
    peel(next, family, indices, cand);
    all_orders_rec(std::move(next), family, blocks, indices, out);
  }
}

}  // namespace

BMatrix functional_pi(const Evaluator& family, const BlockList& blocks, std::span<const int> indices,
                      std::span<const BMatrix> args, PeelOrder order) {
  PiState s = start_state(blocks, indices, args);
  while (!s.alive.empty()) {
    const auto cands = interval_candidates(s, blocks);
    // A non-crossing partition always has an interval block.
    peel(s, family, indices, order == PeelOrder::Leftmost ? cands.front() : cands.back());
    // A zero block value annihilates the rest by multilinearity.
    const bool dead = s.right.is_zero() ||
                      std::any_of(s.alive.begin(), s.alive.end(), [&](int p) { return s.coef[p].is_zero(); });
    if (dead) return BMatrix::zero(s.right.dim());
  }
  return s.right;
}

std::vector<BMatrix> functional_pi_all_orders(const Evaluator& family, const BlockList& blocks,
                                              std::span<const int> indices, std::span<const BMatrix> args) {
  std::vector<BMatrix> out;
  all_orders_rec(start_state(blocks, indices, args), family, blocks, indices, out);
  return out;
}

namespace {

// Labels for the ordered partition tau = (V_1..V_p) read max-first: positions
// in V_m carry label p - 1 - m.
std::vector<int> labels_of(const OrderedPartition& tau) {
  std::vector<int> labels(static_cast<std::size_t>(tau.ground()));
  const int p = static_cast<int>(tau.size());
  for (int m = 0; m < p; ++m) {
    for (int x : tau.blocks()[m]) labels[x - 1] = p - 1 - m;
  }
  return labels;
}

Marginals iid_marginals(const MomentSystem& x, std::size_t count) {
  Marginals m;
  for (std::size_t l = 0; l < count; ++l) m.emplace(static_cast<int>(l), x);
  return m;
}

std::vector<int> iota_labels(std::size_t count) {
  std::vector<int> order(count);
  for (std::size_t l = 0; l < count; ++l) order[l] = static_cast<int>(l);
  return order;
}

}  // namespace

std::vector<BMatrix> dot_moment_values(const MomentSystem& x, std::span<const long> Ns, std::span<const int> indices,
                                       std::span<const BMatrix> args, DotMethod method) {
  check_call(x.components(), x.dim(), x.degree_cap(), indices, args);
  for (long N : Ns) {
    if (N < 0) throw std::domain_error("dot_moment: N must be nonnegative");
  }
  const std::size_t d = x.dim();
  const std::size_t n = indices.size();
  std::vector<BMatrix> out(Ns.size(), BMatrix::zero(d));
  if (n == 0) {
    // The empty word is the unit.
    for (std::size_t k = 0; k < Ns.size(); ++k) out[k] = BMatrix::identity(d);
    return out;
  }
  const int ni = static_cast<int>(n);
  if (method == DotMethod::Reduction) {
    const auto marginals = iid_marginals(x, n);
    const auto order = iota_labels(n);
    for (const auto& tau : ordered_partitions(ni)) {
      const long p = static_cast<long>(tau.size());
      bool needed = false;
      for (long N : Ns) needed = needed || p <= N;
      if (!needed) continue;
      const BMatrix value = mixed_moment(make_word(labels_of(tau), indices, args), marginals, order);
      for (std::size_t k = 0; k < Ns.size(); ++k) {
        if (p <= Ns[k]) out[k].add_scaled(binomial(Ns[k], p), value);
      }
    }
  } else {
    const auto& table = factorization_table(ni);
    // C(N_k, j) for every requested N and block count j.
    std::vector<std::vector<Rational>> binom(Ns.size());
    for (std::size_t k = 0; k < Ns.size(); ++k) {
      for (long j = 0; j <= ni; ++j) binom[k].push_back(binomial(Ns[k], j));
    }
    for (std::size_t s = 0; s < table.partitions.size(); ++s) {
      std::vector<Rational> coeff(Ns.size());
      bool needed = false;
      const auto& counts = table.counts[s];
      for (std::size_t k = 0; k < Ns.size(); ++k) {
        for (std::size_t j = 0; j < counts.size(); ++j) {
          if (counts[j] != 0) coeff[k].add_product(Rational(static_cast<long>(counts[j])), binom[k][j]);
        }
        needed = needed || !coeff[k].is_zero();
      }
      if (!needed) continue;
      const BMatrix value = functional_pi(x.evaluator(), table.partitions[s].blocks(), indices, args);
      for (std::size_t k = 0; k < Ns.size(); ++k) out[k].add_scaled(coeff[k], value);
    }
  }
  return out;
}

BMatrix dot_moment(const MomentSystem& x, long N, std::span<const int> indices, std::span<const BMatrix> args,
                   DotMethod method) {
  const long Ns[] = {N};
  return dot_moment_values(x, Ns, indices, args, method).front();
}

BMatrix dot_moment_literal(const MomentSystem& x, long N, std::span<const int> indices,
                           std::span<const BMatrix> args, DotMethod method) {
  check_call(x.components(), x.dim(), x.degree_cap(), indices, args);
  if (N < 0) throw std::domain_error("dot_moment: N must be nonnegative");
  const std::size_t n = indices.size();
  if (n == 0) return BMatrix::identity(x.dim());
  BMatrix total = BMatrix::zero(x.dim());
  if (N == 0) return total;
  const auto marginals = iid_marginals(x, static_cast<std::size_t>(N));
  const auto order = iota_labels(static_cast<std::size_t>(N));
  std::vector<int> seq(n, 0);
  while (true) {
    if (method == DotMethod::Reduction) {
      total += mixed_moment(make_word(seq, indices, args), marginals, order);
    } else {
      total += functional_pi(x.evaluator(), monotone_factorization(seq).blocks(), indices, args);
    }
    std::size_t pos = n;
    while (pos > 0 && seq[pos - 1] == N - 1) seq[--pos] = 0;
    if (pos == 0) break;
    ++seq[pos - 1];
  }
  return total;
}

MomentSystem dot_system(const MomentSystem& x, long N, DotMethod method) {
  return MomentSystem(x.components(), x.dim(), x.degree_cap(),
                      [x, N, method](std::span<const int> idx, std::span<const BMatrix> args) {
                        return dot_moment(x, N, idx, args, method);
                      });
}

}  // namespace opmono
