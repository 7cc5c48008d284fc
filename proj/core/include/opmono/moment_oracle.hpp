#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "opmono/bmatrix.hpp"
#include "opmono/moment_system.hpp"
#include "opmono/partitions.hpp"

namespace opmono {

/// One generator X_{label, component} followed by its right coefficient.
struct Letter {
  int label = 0;
  int component = 0;
  BMatrix trailing;
};

/// c_0 Z_1 c_1 Z_2 ... Z_n c_n where Z_j is a generator of the algebra
/// carrying letters[j].label.
struct FormalWord {
  BMatrix leading;
  std::vector<Letter> letters;
};

/// Builds b_1 X_{i_1} b_2 ... b_n X_{i_n} 1 with the given per-letter labels.
FormalWord make_word(std::span<const int> labels, std::span<const int> indices, std::span<const BMatrix> args);

using Marginals = std::map<int, MomentSystem>;

/// Mixed moment of a word whose letters come from monotone independent
/// algebras. `order` lists the labels from smallest to largest. A maximal run
/// of equal labels whose neighbours both carry smaller labels (a missing
/// neighbour counts as smaller) is replaced by its marginal moment; the value
/// multiplies the coefficient to the right of the run. The leftmost run of
/// largest label is reduced first. Throws std::invalid_argument for a label
/// without marginal or missing from `order`.
BMatrix mixed_moment(const FormalWord& word, const Marginals& marginals, std::span<const int> order);

/// Results of every admissible sequence of peak choices (one entry per
/// distinct reduction path).
std::vector<BMatrix> mixed_moment_all_paths(const FormalWord& word, const Marginals& marginals,
                                            std::span<const int> order);

enum class PeelOrder { Leftmost, Rightmost };

/// A_pi for a non-crossing block list: repeatedly remove an interval block of
/// the remaining positions, evaluate the family on it, and multiply the value
/// into the next remaining coefficient (or onto the result from the left,
/// when the block ends the word). Block order is ignored. Throws
/// std::domain_error if the blocks cross.
BMatrix functional_pi(const Evaluator& family, const BlockList& blocks, std::span<const int> indices,
                      std::span<const BMatrix> args, PeelOrder order = PeelOrder::Rightmost);

/// A_pi computed along every possible peeling order.
std::vector<BMatrix> functional_pi_all_orders(const Evaluator& family, const BlockList& blocks,
                                              std::span<const int> indices, std::span<const BMatrix> args);

enum class DotMethod { Reduction, QMap };

/// phi(b_1 (N.X)_{i_1} ... b_n (N.X)_{i_n}). Label sequences are grouped by
/// their order pattern: a pattern with p distinct values occurs for C(N, p)
/// sequences. Reduction evaluates each pattern with mixed_moment; QMap sums
/// a_pi(N) * phi_pi over non-crossing pi.
BMatrix dot_moment(const MomentSystem& x, long N, std::span<const int> indices, std::span<const BMatrix> args,
                   DotMethod method = DotMethod::QMap);

/// dot_moment for several N at once, sharing the per-pattern values.
std::vector<BMatrix> dot_moment_values(const MomentSystem& x, std::span<const long> Ns, std::span<const int> indices,
                                       std::span<const BMatrix> args, DotMethod method = DotMethod::QMap);

/// Literal sum over all N^n label sequences (test oracle).
BMatrix dot_moment_literal(const MomentSystem& x, long N, std::span<const int> indices,
                           std::span<const BMatrix> args, DotMethod method);

/// The moment system of N.X.
MomentSystem dot_system(const MomentSystem& x, long N, DotMethod method = DotMethod::QMap);

}  // namespace opmono
