#include "opmono/partitions.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace opmono {

void validate_block(const Block& b) {
  if (b.empty()) throw std::invalid_argument("empty block");
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i] < 1) throw std::invalid_argument("block elements must be positive");
    if (i > 0 && b[i] <= b[i - 1]) throw std::invalid_argument("block elements must be strictly increasing");
  }
}

namespace {

void validate_cover(int n, const BlockList& blocks) {
  if (n < 0) throw std::invalid_argument("negative ground size");
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  int count = 0;
  for (const auto& b : blocks) {
    validate_block(b);
    for (int x : b) {
      if (x > n) throw std::invalid_argument("block element " + std::to_string(x) + " exceeds ground size");
      if (seen[x]) throw std::invalid_argument("element " + std::to_string(x) + " appears in two blocks");
      seen[x] = 1;
      ++count;
    }
  }
  if (count != n) throw std::invalid_argument("blocks do not cover {1.." + std::to_string(n) + "}");
}

}  // namespace

SetPartition::SetPartition(int n, BlockList blocks) : n_(n), blocks_(std::move(blocks)) {
  validate_cover(n_, blocks_);
  std::sort(blocks_.begin(), blocks_.end());
}

bool SetPartition::is_noncrossing() const { return opmono::is_noncrossing(blocks_); }

OrderedPartition::OrderedPartition(int n, BlockList blocks) : n_(n), blocks_(std::move(blocks)) {
  validate_cover(n_, blocks_);
}

OrderedPartition OrderedPartition::reversed() const {
  BlockList rev(blocks_.rbegin(), blocks_.rend());
  return OrderedPartition(n_, std::move(rev));
}

MonotonePartition::MonotonePartition(OrderedPartition p) : p_(std::move(p)) {
  if (!is_monotone(p_)) throw std::invalid_argument("ordered partition is not monotone: " + to_string(p_.blocks()));
}

bool crosses(const Block& v, const Block& w) {
  // Some element of w lies strictly inside a gap of v and another outside it.
  auto one_way = [](const Block& a, const Block& b) {
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
      bool inside = false;
      bool outside = false;
      for (int x : b) {
        if (x > a[i] && x < a[i + 1]) inside = true;
        if (x < a[i] || x > a[i + 1]) outside = true;
      }
      if (inside && outside) return true;
    }
    return false;
  };
  return one_way(v, w) || one_way(w, v);
}

bool nests(const Block& v, const Block& w) {
  validate_block(v);
  validate_block(w);
  for (int x : v) {
    if (std::binary_search(w.begin(), w.end(), x)) {
      throw std::domain_error("nests: blocks are not disjoint");
    }
  }
  const bool below = w.front() < v.front();
  const bool above = w.back() > v.back();
  return below && above;
}

bool is_noncrossing(const BlockList& blocks) {
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      if (crosses(blocks[i], blocks[j])) return false;
    }
  }
  return true;
}

bool is_monotone(const OrderedPartition& p) {
  const auto& b = p.blocks();
  if (!is_noncrossing(b)) return false;
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (i != j && nests(b[i], b[j]) && !(i > j)) return false;
    }
  }
  return true;
}

namespace {

void require_positive(int n) {
  if (n < 1) throw std::domain_error("partition enumeration needs n >= 1");
}

// Restricted growth strings a[0..n-1], a[0] = 0, a[i] <= 1 + max(a[0..i-1]).
void set_partitions_rec(int n, int pos, int maxv, std::vector<int>& rgs, std::vector<SetPartition>& out) {
  if (pos == n) {
    BlockList blocks(static_cast<std::size_t>(maxv) + 1);
    for (int i = 0; i < n; ++i) blocks[rgs[i]].push_back(i + 1);
    out.emplace_back(n, std::move(blocks));
    return;
  }
  for (int v = 0; v <= maxv + 1; ++v) {
    rgs[pos] = v;
    set_partitions_rec(n, pos + 1, std::max(maxv, v), rgs, out);
  }
}

// Non-crossing partitions of the given increasing element list: choose the
// block of the first element, then fill each gap independently.
std::vector<BlockList> nc_on(const std::vector<int>& elems) {
  if (elems.empty()) return {BlockList{}};
  std::vector<BlockList> result;
  const std::size_t m = elems.size();
  // Choose the remaining members of the first block as a subset of elems[1..].
  const std::size_t rest = m - 1;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << rest); ++mask) {
    Block first{elems[0]};
    std::vector<std::vector<int>> gaps(1);
    for (std::size_t i = 1; i < m; ++i) {
      if (mask & (std::uint64_t{1} << (i - 1))) {
        first.push_back(elems[i]);
        gaps.emplace_back();
      } else {
        gaps.back().push_back(elems[i]);
      }
    }
    std::vector<BlockList> partial{BlockList{first}};
    for (const auto& gap : gaps) {
      const auto sub = nc_on(gap);
      std::vector<BlockList> next;
      for (const auto& p : partial) {
        for (const auto& s : sub) {
          BlockList joined = p;
          joined.insert(joined.end(), s.begin(), s.end());
          next.push_back(std::move(joined));
        }
      }
      partial = std::move(next);
    }
    for (auto& p : partial) result.push_back(std::move(p));
  }
  return result;
}

// Enclosers[i] = bitmask of blocks that block i is nested in.
std::vector<std::uint64_t> encloser_masks(const BlockList& blocks) {
  std::vector<std::uint64_t> enc(blocks.size(), 0);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = 0; j < blocks.size(); ++j) {
      if (i != j && nests(blocks[i], blocks[j])) enc[i] |= std::uint64_t{1} << j;
    }
  }
  return enc;
}

void orderings_rec(const SetPartition& p, const std::vector<std::uint64_t>& enc, std::uint64_t placed,
                   BlockList& current, std::vector<OrderedPartition>& out) {
  const std::size_t k = p.size();
  if (current.size() == k) {
    out.emplace_back(p.ground(), current);
    return;
  }
  for (std::size_t i = 0; i < k; ++i) {
    const std::uint64_t bit = std::uint64_t{1} << i;
    if ((placed & bit) || (enc[i] & ~placed)) continue;
    current.push_back(p.blocks()[i]);
    orderings_rec(p, enc, placed | bit, current, out);
    current.pop_back();
  }
}

void sort_ordered(std::vector<OrderedPartition>& v) {
  std::sort(v.begin(), v.end(),
            [](const OrderedPartition& a, const OrderedPartition& b) { return a.blocks() < b.blocks(); });
}

}  // namespace

std::vector<SetPartition> set_partitions(int n) {
  require_positive(n);
  std::vector<SetPartition> out;
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  set_partitions_rec(n, 1, 0, rgs, out);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.blocks() < b.blocks(); });
  return out;
}

std::vector<SetPartition> noncrossing_partitions(int n) {
  require_positive(n);
  std::vector<int> elems(static_cast<std::size_t>(n));
  std::iota(elems.begin(), elems.end(), 1);
  std::vector<SetPartition> out;
  for (auto& blocks : nc_on(elems)) out.emplace_back(n, std::move(blocks));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.blocks() < b.blocks(); });
  return out;
}

std::vector<Block> interval_blocks(int n) {
  require_positive(n);
  std::vector<Block> out;
  for (int k = 1; k <= n; ++k) {
    for (int last = k; last <= n; ++last) {
      Block b(static_cast<std::size_t>(last - k + 1));
      std::iota(b.begin(), b.end(), k);
      out.push_back(std::move(b));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<OrderedPartition> ordered_partitions(int n) {
  std::vector<OrderedPartition> out;
  for (const auto& p : set_partitions(n)) {
    BlockList blocks = p.blocks();
    std::sort(blocks.begin(), blocks.end());
    do {
      out.emplace_back(n, blocks);
    } while (std::next_permutation(blocks.begin(), blocks.end()));
  }
  sort_ordered(out);
  return out;
}

std::vector<OrderedPartition> monotone_orderings(const SetPartition& p) {
  if (!p.is_noncrossing()) throw std::domain_error("monotone_orderings: partition is crossing");
  if (p.size() > 63) throw std::domain_error("monotone_orderings: too many blocks");
  std::vector<OrderedPartition> out;
  BlockList current;
  orderings_rec(p, encloser_masks(p.blocks()), 0, current, out);
  return out;
}

std::uint64_t count_linear_extensions(const SetPartition& p) {
  const std::size_t k = p.size();
  if (k > 20) throw std::domain_error("count_linear_extensions: too many blocks");
  const auto enc = encloser_masks(p.blocks());
  std::vector<std::uint64_t> ways(std::size_t{1} << k, 0);
  ways[0] = 1;
  for (std::uint64_t mask = 0; mask < ways.size(); ++mask) {
    if (ways[mask] == 0) continue;
    for (std::size_t i = 0; i < k; ++i) {
      const std::uint64_t bit = std::uint64_t{1} << i;
      if ((mask & bit) || (enc[i] & ~mask)) continue;
      ways[mask | bit] += ways[mask];
    }
  }
  return ways.back();
}

std::vector<OrderedPartition> monotone_partitions(int n) {
  std::vector<OrderedPartition> out;
  for (const auto& p : noncrossing_partitions(n)) {
    for (auto& o : monotone_orderings(p)) out.push_back(std::move(o));
  }
  sort_ordered(out);
  return out;
}

std::vector<OrderedPartition> monotone_pair_partitions(int n) {
  require_positive(n);
  if (n % 2 != 0) throw std::domain_error("monotone pair partitions need an even n");
  std::vector<OrderedPartition> out;
  for (const auto& p : noncrossing_partitions(n)) {
    const bool pairs = std::all_of(p.blocks().begin(), p.blocks().end(), [](const Block& b) { return b.size() == 2; });
    if (!pairs) continue;
    for (auto& o : monotone_orderings(p)) out.push_back(std::move(o));
  }
  sort_ordered(out);
  return out;
}

std::vector<BlockList> enumerate(PartitionKind kind, int n) {
  require_positive(n);
  std::vector<BlockList> out;
  auto take_set = [&out](const std::vector<SetPartition>& v) {
    for (const auto& p : v) out.push_back(p.blocks());
  };
  auto take_ordered = [&out](const std::vector<OrderedPartition>& v) {
    for (const auto& p : v) out.push_back(p.blocks());
  };
  switch (kind) {
    case PartitionKind::All:
      take_set(set_partitions(n));
      break;
    case PartitionKind::NonCrossing:
      take_set(noncrossing_partitions(n));
      break;
    case PartitionKind::IntervalBlocks:
      for (auto& b : interval_blocks(n)) out.push_back(BlockList{std::move(b)});
      break;
    case PartitionKind::Ordered:
      take_ordered(ordered_partitions(n));
      break;
    case PartitionKind::Monotone:
      take_ordered(monotone_partitions(n));
      break;
    case PartitionKind::MonotonePair:
      take_ordered(monotone_pair_partitions(n));
      break;
  }
  return out;
}

InterpolationBlocks interpolation_blocks(const std::vector<int>& subset, const std::vector<int>& ground) {
  if (!std::is_sorted(ground.begin(), ground.end()) ||
      std::adjacent_find(ground.begin(), ground.end()) != ground.end()) {
    throw std::domain_error("interpolation_blocks: ground set must be strictly increasing");
  }
  std::vector<int> v = subset;
  std::sort(v.begin(), v.end());
  if (std::adjacent_find(v.begin(), v.end()) != v.end()) {
    throw std::domain_error("interpolation_blocks: repeated element in subset");
  }
  InterpolationBlocks result;
  result.blocks.emplace_back();
  std::size_t next = 0;
  for (int g : ground) {
    if (next < v.size() && v[next] == g) {
      result.blocks.emplace_back();
      ++next;
    } else {
      result.blocks.back().push_back(g);
    }
  }
  if (next != v.size()) throw std::domain_error("interpolation_blocks: subset is not contained in the ground set");
  return result;
}

OrderedPartition ordered_from_sequence(std::span<const int> sequence) {
  if (sequence.empty()) throw std::domain_error("ordered_from_sequence: empty sequence");
  std::vector<int> values(sequence.begin(), sequence.end());
  std::sort(values.begin(), values.end(), std::greater<>());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  BlockList blocks;
  for (int value : values) {
    Block b;
    for (std::size_t k = 0; k < sequence.size(); ++k) {
      if (sequence[k] == value) b.push_back(static_cast<int>(k) + 1);
    }
    blocks.push_back(std::move(b));
  }
  return OrderedPartition(static_cast<int>(sequence.size()), std::move(blocks));
}

SetPartition q_map(const OrderedPartition& p) {
  const int n = p.ground();
  std::vector<std::size_t> owner(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t k = 0; k < p.size(); ++k) {
    for (int x : p.blocks()[k]) owner[x] = k;
  }
  BlockList result;
  for (std::size_t k = 0; k < p.size(); ++k) {
    const Block& v = p.blocks()[k];
    Block chunk{v.front()};
    for (std::size_t i = 1; i < v.size(); ++i) {
      bool cut = false;
      for (int z = v[i - 1] + 1; z < v[i]; ++z) {
        if (owner[z] < k) {
          cut = true;
          break;
        }
      }
      if (cut) {
        result.push_back(std::move(chunk));
        chunk = Block{};
      }
      chunk.push_back(v[i]);
    }
    result.push_back(std::move(chunk));
  }
  return SetPartition(n, std::move(result));
}

SetPartition monotone_factorization(std::span<const int> labels) {
  return q_map(ordered_from_sequence(labels).reversed());
}

std::uint64_t a_pi_count(const SetPartition& p, int N) {
  if (!p.is_noncrossing()) throw std::domain_error("a_pi_count: partition is crossing");
  if (N < 0) throw std::domain_error("a_pi_count: N must be nonnegative");
  const int n = p.ground();
  if (N == 0) return 0;
  std::vector<int> seq(static_cast<std::size_t>(n), 1);
  std::uint64_t count = 0;
  while (true) {
    if (monotone_factorization(seq) == p) ++count;
    int pos = n - 1;
    while (pos >= 0 && seq[pos] == N) seq[pos--] = 1;
    if (pos < 0) break;
    ++seq[pos];
  }
  return count;
}

Rational FactorizationTable::a_pi(std::size_t idx, long N) const {
  Rational total;
  const auto& c = counts.at(idx);
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j] != 0) total += Rational(static_cast<long>(c[j])) * binomial(N, static_cast<long>(j));
  }
  return total;
}

std::vector<Rational> FactorizationTable::a_pi_polynomial(std::size_t idx) const {
  std::vector<Rational> poly(static_cast<std::size_t>(n) + 1);
  const auto& c = counts.at(idx);
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j] == 0) continue;
    // C(N, j) = N (N-1) ... (N-j+1) / j!
    std::vector<Rational> falling{Rational(1)};
    for (std::size_t m = 0; m < j; ++m) {
      std::vector<Rational> next(falling.size() + 1);
      for (std::size_t e = 0; e < falling.size(); ++e) {
        next[e + 1] += falling[e];
        next[e] -= falling[e] * Rational(static_cast<long>(m));
      }
      falling = std::move(next);
    }
    const Rational scale = Rational(static_cast<long>(c[j])) / factorial(static_cast<long>(j));
    for (std::size_t e = 0; e < falling.size(); ++e) poly[e] += falling[e] * scale;
  }
  return poly;
}

std::size_t FactorizationTable::index_of(const SetPartition& p) const {
  const auto it = std::lower_bound(partitions.begin(), partitions.end(), p,
                                   [](const SetPartition& a, const SetPartition& b) { return a.blocks() < b.blocks(); });
  if (it == partitions.end() || *it != p) throw std::domain_error("partition is not in the factorization table");
  return static_cast<std::size_t>(it - partitions.begin());
}

const FactorizationTable& factorization_table(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<FactorizationTable>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) {
    auto table = std::make_unique<FactorizationTable>();
    table->n = n;
    table->partitions = noncrossing_partitions(n);
    table->counts.assign(table->partitions.size(), std::vector<std::uint64_t>(static_cast<std::size_t>(n) + 1, 0));
    for (const auto& tau : ordered_partitions(n)) {
      const std::size_t idx = table->index_of(q_map(tau));
      ++table->counts[idx][tau.size()];
    }
    slot = std::move(table);
  }
  return *slot;
}

const MonotoneWeights& monotone_weights(int n, bool pairs_only) {
  static std::mutex mutex;
  static std::map<std::pair<int, bool>, std::unique_ptr<MonotoneWeights>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{n, pairs_only}];
  if (!slot) {
    const auto all = pairs_only ? monotone_pair_partitions(n) : monotone_partitions(n);
    std::map<BlockList, std::uint64_t> per_partition;
    for (const auto& o : all) ++per_partition[o.underlying().blocks()];
    auto w = std::make_unique<MonotoneWeights>();
    for (const auto& [blocks, count] : per_partition) {
      w->partitions.emplace_back(n, blocks);
      w->weights.push_back(Rational(static_cast<long>(count)) / factorial(static_cast<long>(blocks.size())));
    }
    slot = std::move(w);
  }
  return *slot;
}

std::string to_string(const BlockList& blocks) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) os << ',';
    os << '[';
    for (std::size_t j = 0; j < blocks[i].size(); ++j) {
      if (j) os << ',';
      os << blocks[i][j];
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace opmono
