#pragma once

#include <bit>
#include <cstdint>

#include "hyperlag/error.hpp"
#include "hyperlag/hypergraph.hpp"

namespace hyperlag {

/// Order of a largest clique of a 2-graph (at most 64 vertices), by
/// branch and bound over bitset candidate sets with a size bound.
inline int clique_number(const Hypergraph& g) {
  if (g.uniformity() != 2) throw OutOfRange("clique number is defined here for 2-graphs only");
  const int n = g.vertex_count();
  if (n > 64) throw OutOfRange("clique number supports at most 64 vertices");
  if (n == 0) return 0;
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
  for (const RTuple& e : g.edges()) {
    const int a = e[0] - 1, b = e[1] - 1;
    adj[static_cast<std::size_t>(a)] |= std::uint64_t{1} << b;
    adj[static_cast<std::size_t>(b)] |= std::uint64_t{1} << a;
  }
  int best = 1;
  auto expand = [&](auto&& self, int size, std::uint64_t candidates) -> void {
    if (candidates == 0) {
      best = std::max(best, size);
      return;
    }
    while (candidates != 0) {
      if (size + std::popcount(candidates) <= best) return;
      const int v = std::countr_zero(candidates);
      candidates &= candidates - 1;
      self(self, size + 1, candidates & adj[static_cast<std::size_t>(v)]);
    }
  };
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  expand(expand, 0, all);
  return best;
}

}  // namespace hyperlag
