#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hyperlag/error.hpp"
#include "hyperlag/tuple_order.hpp"

namespace hyperlag {

/// A set of vertices of arbitrary size (neighborhood members, partitions).
using VertexSet = std::vector<Vertex>;

/// An r-uniform hypergraph on the labeled vertex set [n].
///
/// Edges are kept sorted in colex order, so two hypergraphs compare equal
/// exactly when r, n and the edge sets agree. Trailing isolated vertices are
/// allowed; no relabeling is ever applied.
class Hypergraph {
 public:
  Hypergraph(int r, int n, std::vector<RTuple> edges)
      : r_(r), n_(n), edges_(std::move(edges)) {
    if (r_ < 2) throw OutOfRange("uniformity must be at least 2");
    if (n_ < 0) throw OutOfRange("vertex count must be nonnegative");
    for (const RTuple& e : edges_) {
      if (e.size() != r_) {
        throw UniformityMismatch("edge {" + e.to_text() + "} is not an " +
                                 std::to_string(r_) + "-set");
      }
      if (e.back() > n_) {
        throw OutOfRange("edge {" + e.to_text() + "} uses a vertex above n = " +
                         std::to_string(n_));
      }
    }
    std::sort(edges_.begin(), edges_.end(), ColexLess{});
    const auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end()) throw OutOfRange("duplicate edge {" + dup->to_text() + "}");
  }

  int uniformity() const { return r_; }
  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const RTuple> edges() const { return edges_; }

  bool contains(const RTuple& e) const {
    return e.size() == r_ && std::binary_search(edges_.begin(), edges_.end(), e, ColexLess{});
  }

  bool contains(const VertexSet& vertices) const {
    if (static_cast<int>(vertices.size()) != r_) return false;
    VertexSet sorted = vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() || sorted.front() < 1) {
      return false;
    }
    return contains(RTuple(std::move(sorted)));
  }

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  int r_;
  int n_;
  std::vector<RTuple> edges_;
};

/// The first m r-sets in colex order; n is the largest vertex used.
inline Hypergraph colex_graph(int r, std::uint64_t m) {
  if (r < 2) throw OutOfRange("uniformity must be at least 2");
  if (m < 1) throw OutOfRange("colex graph needs m >= 1");
  std::vector<RTuple> edges;
  edges.reserve(m);
  for (std::uint64_t k = 1; k <= m; ++k) edges.push_back(colex_unrank(r, k));
  const int n = edges.back().back();
  return Hypergraph(r, n, std::move(edges));
}

/// [t]^(r): every r-subset of [t].
inline Hypergraph complete_graph(int r, int t) {
  if (r < 2) throw OutOfRange("uniformity must be at least 2");
  if (r > t) throw OutOfRange("complete graph needs r <= t");
  return Hypergraph(r, t, all_tuples(r, t));
}

namespace detail {
inline void require_vertex(const Hypergraph& g, Vertex v) {
  if (v < 1 || v > g.vertex_count()) {
    throw OutOfRange("vertex " + std::to_string(v) + " outside [1, " +
                     std::to_string(g.vertex_count()) + "]");
  }
}

inline void require_pair(const Hypergraph& g, Vertex i, Vertex j) {
  require_vertex(g, i);
  require_vertex(g, j);
  if (i == j) throw OutOfRange("pair operations need two distinct vertices");
}

inline VertexSet without(const RTuple& e, Vertex a, Vertex b = 0) {
  VertexSet out;
  out.reserve(e.elems().size());
  for (Vertex v : e) {
    if (v != a && v != b) out.push_back(v);
  }
  return out;
}

inline VertexSet with(const VertexSet& a, Vertex v) {
  VertexSet out = a;
  out.insert(std::lower_bound(out.begin(), out.end(), v), v);
  return out;
}
}  // namespace detail

/// E_i: the (r-1)-sets A with A + {i} an edge. Sorted lexicographically.
inline std::vector<VertexSet> neighborhood(const Hypergraph& g, Vertex i) {
  detail::require_vertex(g, i);
  std::vector<VertexSet> out;
  for (const RTuple& e : g.edges()) {
    if (e.contains(i)) out.push_back(detail::without(e, i));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// E_ij: the (r-2)-sets B with B + {i, j} an edge. Sorted lexicographically.
inline std::vector<VertexSet> pair_neighborhood(const Hypergraph& g, Vertex i, Vertex j) {
  detail::require_pair(g, i, j);
  std::vector<VertexSet> out;
  for (const RTuple& e : g.edges()) {
    if (e.contains(i) && e.contains(j)) out.push_back(detail::without(e, i, j));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// E_{i\j}: members A of E_i with j not in A and A + {j} not an edge.
inline std::vector<VertexSet> diff_neighborhood(const Hypergraph& g, Vertex i, Vertex j) {
  detail::require_pair(g, i, j);
  std::vector<VertexSet> out;
  for (const RTuple& e : g.edges()) {
    if (!e.contains(i) || e.contains(j)) continue;
    VertexSet rest = detail::without(e, i);
    if (!g.contains(detail::with(rest, j))) out.push_back(std::move(rest));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Left-compressed via neighborhoods: E_{j\i} is empty for all i < j.
inline bool is_left_compressed(const Hypergraph& g) {
  for (Vertex j = 2; j <= g.vertex_count(); ++j) {
    for (Vertex i = 1; i < j; ++i) {
      if (!diff_neighborhood(g, j, i).empty()) return false;
    }
  }
  return true;
}

/// Left-compressed via dominance: every descendant of an edge is an edge.
/// Checking direct descendants suffices since they generate the order.
inline bool is_descendant_closed(const Hypergraph& g) {
  for (const RTuple& e : g.edges()) {
    for (const RTuple& d : direct_descendants(e, g.vertex_count())) {
      if (!g.contains(d)) return false;
    }
  }
  return true;
}

/// Replaces edges that have a missing descendant until the edge set is
/// closed under descendants. Each step takes the colex-first violating edge
/// and swaps it for its colex-least missing descendant; the coordinate sum
/// strictly drops, so the loop terminates. Vertex set and m are unchanged.
inline Hypergraph compress(const Hypergraph& g) {
  std::vector<RTuple> edges(g.edges().begin(), g.edges().end());
  for (;;) {
    const Hypergraph current(g.uniformity(), g.vertex_count(), edges);
    bool replaced = false;
    for (std::size_t idx = 0; idx < edges.size() && !replaced; ++idx) {
      for (const RTuple& d : descendants(edges[idx])) {
        if (!current.contains(d)) {
          edges[idx] = d;
          replaced = true;
          break;
        }
      }
    }
    if (!replaced) return current;
  }
}

}  // namespace hyperlag
