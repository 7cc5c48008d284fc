#pragma once

#include <cstddef>
#include <functional>
#include <set>
#include <string>
#include <vector>

namespace opmono {

// Formal expansion of compositions of indeterminate functionals. A value is
// a set of monomials: words in the letters b1, b2, ... and applications
// such as F(b1,G(b2)b3)G(). Products concatenate; applications distribute
// over sums in every slot.
using SymbolicSum = std::vector<std::string>;

/// A symbolic series: given argument sums for positions i_1..i_n, the
/// expanded entry. The empty argument list gives the constant.
using SymbolicSeries = std::function<SymbolicSum(const std::vector<SymbolicSum>&)>;

/// The indeterminate functional named `name`; its constant is "name()".
SymbolicSeries symbolic_functional(const std::string& name);

SymbolicSeries symbolic_odot(SymbolicSeries f, SymbolicSeries g);

/// The expansion of entry (1..n) on the letters b1..bn.
SymbolicSum symbolic_entry(const SymbolicSeries& f, std::size_t n);

/// Number of distinct monomials of (F odot G)_{1..n}.
std::size_t odot_term_count(std::size_t n);

struct TripleExpansion {
  std::set<std::string> left;   // ((F odot G) odot H)
  std::set<std::string> right;  // (F odot (G odot H))
};
TripleExpansion triple_odot_terms(std::size_t n);

}  // namespace opmono
