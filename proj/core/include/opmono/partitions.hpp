#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "opmono/rational.hpp"

namespace opmono {

/// A strictly increasing, nonempty list of positive integers.
using Block = std::vector<int>;
/// An ordered list of blocks. Used for enumeration results and serialization.
using BlockList = std::vector<Block>;

/// Throws std::invalid_argument unless `b` is nonempty, strictly increasing
/// and positive.
void validate_block(const Block& b);

/// A partition of {1..n}. Blocks are kept sorted by their least element.
class SetPartition {
 public:
  SetPartition() = default;
  /// Validates disjointness and coverage of {1..n}; canonicalizes block order.
  SetPartition(int n, BlockList blocks);

  int ground() const { return n_; }
  const BlockList& blocks() const { return blocks_; }
  std::size_t size() const { return blocks_.size(); }

  bool is_noncrossing() const;

  friend auto operator<=>(const SetPartition&, const SetPartition&) = default;

 private:
  int n_ = 0;
  BlockList blocks_;
};

/// A sequence of blocks whose underlying set is a partition of {1..n}.
class OrderedPartition {
 public:
  OrderedPartition() = default;
  OrderedPartition(int n, BlockList blocks);

  int ground() const { return n_; }
  const BlockList& blocks() const { return blocks_; }
  std::size_t size() const { return blocks_.size(); }

  SetPartition underlying() const { return SetPartition(n_, blocks_); }
  OrderedPartition reversed() const;

  friend auto operator<=>(const OrderedPartition&, const OrderedPartition&) = default;

 private:
  int n_ = 0;
  BlockList blocks_;
};

/// An ordered partition with a non-crossing block set in which every block
/// comes after all blocks it is nested in.
class MonotonePartition {
 public:
  /// Throws std::invalid_argument if either axiom fails.
  explicit MonotonePartition(OrderedPartition p);
  const OrderedPartition& ordered() const { return p_; }

 private:
  OrderedPartition p_;
};

/// Whether blocks V and W cross (a < b < c < d with a, c in one, b, d in the other).
bool crosses(const Block& v, const Block& w);

/// V is nested inside W: some i, j in W satisfy i < k < j for every k in V.
/// Throws std::domain_error if V and W share an element.
bool nests(const Block& v, const Block& w);

bool is_noncrossing(const BlockList& blocks);
bool is_monotone(const OrderedPartition& p);

enum class PartitionKind { All, NonCrossing, IntervalBlocks, Ordered, Monotone, MonotonePair };

/// Exhaustive, duplicate-free enumeration sorted lexicographically on the
/// block-list encoding. Set-partition kinds list blocks by least element;
/// ordered kinds keep block order; IntervalBlocks yields each interval block
/// of {1..n} as a one-block list. Throws std::domain_error for n < 1 or for
/// MonotonePair with odd n.
std::vector<BlockList> enumerate(PartitionKind kind, int n);

std::vector<SetPartition> set_partitions(int n);
std::vector<SetPartition> noncrossing_partitions(int n);
std::vector<Block> interval_blocks(int n);
std::vector<OrderedPartition> ordered_partitions(int n);
std::vector<OrderedPartition> monotone_partitions(int n);
std::vector<OrderedPartition> monotone_pair_partitions(int n);

/// Every ordering of the blocks of a non-crossing `p` in which each block
/// comes after the blocks enclosing it.
std::vector<OrderedPartition> monotone_orderings(const SetPartition& p);

/// Number of monotone orderings, counted by dynamic programming over subsets
/// of blocks (independent of the enumeration above).
std::uint64_t count_linear_extensions(const SetPartition& p);

struct InterpolationBlocks {
  std::vector<std::vector<int>> blocks;  // p+1 intervals, possibly empty
};

/// Gaps of `subset` inside the sorted `ground`: the elements strictly between
/// consecutive members (with virtual ends before and after the ground set).
/// Throws std::domain_error if subset is not contained in ground.
InterpolationBlocks interpolation_blocks(const std::vector<int>& subset, const std::vector<int>& ground);

/// Block V_1 collects the positions holding the largest value, V_2 the next
/// largest, and so on. Throws std::domain_error for an empty sequence.
OrderedPartition ordered_from_sequence(std::span<const int> sequence);

/// Collapse an ordered partition, listed outermost block first, to the
/// non-crossing partition it factorizes through: block V_k is cut between
/// consecutive elements x < y exactly when some earlier block has an element
/// strictly between x and y.
SetPartition q_map(const OrderedPartition& p);

/// The non-crossing partition through which a product of monotone i.i.d.
/// copies labelled by `labels` factorizes: q_map applied to the
/// outermost-first (reversed) ordered_from_sequence.
SetPartition monotone_factorization(std::span<const int> labels);

/// Number of label sequences in {1..N}^n whose factorization is `p`.
/// Brute force over all N^n sequences. Throws std::domain_error if `p` crosses.
std::uint64_t a_pi_count(const SetPartition& p, int N);

/// For ground size n: every non-crossing partition together with
/// counts[j] = number of ordered partitions with j blocks that factorize
/// through it. Then a_pi(N) = sum_j counts[j] * C(N, j).
struct FactorizationTable {
  int n = 0;
  std::vector<SetPartition> partitions;
  std::vector<std::vector<std::uint64_t>> counts;

  /// a_pi(N) for partitions[idx].
  Rational a_pi(std::size_t idx, long N) const;
  /// Monomial coefficients of a_pi as a polynomial in N.
  std::vector<Rational> a_pi_polynomial(std::size_t idx) const;
  std::size_t index_of(const SetPartition& p) const;
};

/// Cached per n (thread safe).
const FactorizationTable& factorization_table(int n);

/// For ground size n: the non-crossing partitions with weight
/// (number of monotone orderings) / |pi|!, i.e. the grouped moment-cumulant
/// weights. If `pairs_only`, restricted to pair partitions.
struct MonotoneWeights {
  std::vector<SetPartition> partitions;
  std::vector<Rational> weights;
};
const MonotoneWeights& monotone_weights(int n, bool pairs_only = false);

/// "[[1,3,4],[5,7],[2,6]]"-style text.
std::string to_string(const BlockList& blocks);

}  // namespace opmono
