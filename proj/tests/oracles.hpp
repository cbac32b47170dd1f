#pragma once

// Independent reference implementations used only by the tests.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "hyperlag/hypergraph.hpp"

namespace oracle {

using Set = std::vector<int>;

/// A < B in colex iff the largest element of the symmetric difference lies in B.
inline bool colex_less(const Set& a, const Set& b) {
  std::vector<int> diff;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(diff));
  if (diff.empty()) return false;
  return std::binary_search(b.begin(), b.end(), diff.back());
}

/// All r-subsets of [t] by bitmask, in no particular order.
inline std::vector<Set> subsets(int r, int t) {
  std::vector<Set> out;
  for (std::uint32_t mask = 0; mask < (1U << t); ++mask) {
    if (__builtin_popcount(mask) != r) continue;
    Set s;
    for (int v = 0; v < t; ++v) {
      if (mask >> v & 1U) s.push_back(v + 1);
    }
    out.push_back(s);
  }
  return out;
}

/// Left-compressed by definition: replacing any element j of an edge by an
/// absent smaller i stays inside the edge set.
inline bool left_compressed(const std::set<Set>& edges) {
  for (const Set& e : edges) {
    for (int j : e) {
      for (int i = 1; i < j; ++i) {
        if (std::binary_search(e.begin(), e.end(), i)) continue;
        Set f = e;
        std::replace(f.begin(), f.end(), j, i);
        std::sort(f.begin(), f.end());
        if (!edges.count(f)) return false;
      }
    }
  }
  return true;
}

/// Every left-compressed r-graph on [t] with m edges, by filtering all
/// m-subsets of [t]^(r). Only for tiny t.
inline std::set<std::set<Set>> left_compressed_graphs(int r, int t, int m) {
  const auto all = subsets(r, t);
  std::set<std::set<Set>> out;
  const auto n = static_cast<int>(all.size());
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    if (__builtin_popcount(mask) != m) continue;
    std::set<Set> edges;
    for (int k = 0; k < n; ++k) {
      if (mask >> k & 1U) edges.insert(all[static_cast<std::size_t>(k)]);
    }
    if (left_compressed(edges)) out.insert(edges);
  }
  return out;
}

inline std::set<Set> edge_sets(const hyperlag::Hypergraph& g) {
  std::set<Set> out;
  for (const auto& e : g.edges()) out.insert(Set(e.begin(), e.end()));
  return out;
}

/// Sum over edges of the product of weights, written out directly.
inline double lagrangian_at(const hyperlag::Hypergraph& g, const std::vector<double>& x) {
  double total = 0.0;
  for (const auto& e : g.edges()) {
    double prod = 1.0;
    for (int v : e) prod *= x[static_cast<std::size_t>(v - 1)];
    total += prod;
  }
  return total;
}

/// Random r-graph on n vertices, each r-set kept with probability p.
inline hyperlag::Hypergraph random_graph(int r, int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution keep(p);
  std::vector<hyperlag::RTuple> edges;
  for (const Set& s : subsets(r, n)) {
    if (keep(rng)) edges.emplace_back(std::vector<hyperlag::Vertex>(s.begin(), s.end()));
  }
  return hyperlag::Hypergraph(r, n, std::move(edges));
}

/// Random point of the simplex with some coordinates forced to zero.
inline std::vector<double> random_weighting(int n, std::mt19937_64& rng, double zero_prob = 0.2) {
  std::exponential_distribution<double> draw(1.0);
  std::bernoulli_distribution zero(zero_prob);
  std::vector<double> x(static_cast<std::size_t>(n));
  double total = 0.0;
  for (double& v : x) {
    v = zero(rng) ? 0.0 : draw(rng);
    total += v;
  }
  if (total == 0.0) {
    x[0] = 1.0;
    return x;
  }
  for (double& v : x) v /= total;
  return x;
}

}  // namespace oracle
