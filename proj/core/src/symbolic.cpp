#include "opmono/symbolic.hpp"

#include <cstdint>

namespace opmono {

namespace {

SymbolicSum product(const SymbolicSum& a, const SymbolicSum& b) {
  SymbolicSum out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a) {
    for (const auto& y : b) out.push_back(x + y);
  }
  return out;
}

}  // namespace

SymbolicSeries symbolic_functional(const std::string& name) {
  return [name](const std::vector<SymbolicSum>& args) {
    SymbolicSum out{name + "("};
    for (std::size_t j = 0; j < args.size(); ++j) {
      SymbolicSum next;
      for (const auto& prefix : out) {
        for (const auto& a : args[j]) next.push_back(prefix + (j == 0 ? "" : ",") + a);
      }
      out = std::move(next);
    }
    for (auto& s : out) s += ")";
    return out;
  };
}

SymbolicSeries symbolic_odot(SymbolicSeries f, SymbolicSeries g) {
  return [f, g](const std::vector<SymbolicSum>& b) {
    const std::size_t n = b.size();
    auto g_on = [&](std::size_t a, std::size_t c) {
      return g(std::vector<SymbolicSum>(b.begin() + static_cast<std::ptrdiff_t>(a),
                                        b.begin() + static_cast<std::ptrdiff_t>(c)));
    };
    SymbolicSum total;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      std::vector<SymbolicSum> fargs;
      std::size_t gap_start = 0;
      for (std::size_t v = 0; v < n; ++v) {
        if (!(mask >> v & 1U)) continue;
        fargs.push_back(product(g_on(gap_start, v), b[v]));
        gap_start = v + 1;
      }
      for (auto& term : product(f(fargs), g_on(gap_start, n))) total.push_back(std::move(term));
    }
    return total;
  };
}

SymbolicSum symbolic_entry(const SymbolicSeries& f, std::size_t n) {
  std::vector<SymbolicSum> letters;
  for (std::size_t j = 1; j <= n; ++j) letters.push_back({"b" + std::to_string(j)});
  return f(letters);
}

std::size_t odot_term_count(std::size_t n) {
  const auto terms = symbolic_entry(symbolic_odot(symbolic_functional("F"), symbolic_functional("G")), n);
  return std::set<std::string>(terms.begin(), terms.end()).size();
}

TripleExpansion triple_odot_terms(std::size_t n) {
  const auto f = symbolic_functional("F");
  const auto g = symbolic_functional("G");
  const auto h = symbolic_functional("H");
  const auto left = symbolic_entry(symbolic_odot(symbolic_odot(f, g), h), n);
  const auto right = symbolic_entry(symbolic_odot(f, symbolic_odot(g, h)), n);
  return {std::set<std::string>(left.begin(), left.end()), std::set<std::string>(right.begin(), right.end())};
}

}  // namespace opmono
