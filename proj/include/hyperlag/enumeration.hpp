#pragma once

// Left-compressed r-graphs on [t] are exactly the down-sets of the dominance
// order on [t]^(r). They are enumerated through their complements: up-sets
// ("removal sets") of size k = C(t, r) - m.
//
// The search walks the tuples of [t]^(r) in descending colex order, which is
// a linear extension listing every ancestor before its descendants. An
// up-set is grown only by tuples later in that order whose direct ancestors
// are all present, so every prefix of the growth is itself an up-set and each
// up-set is reached along exactly one path.

#include <cstdint>
#include <optional>
#include <vector>

#include "hyperlag/error.hpp"
#include "hyperlag/hypergraph.hpp"
#include "hyperlag/tuple_order.hpp"

namespace hyperlag {

/// An up-set of removed tuples inside [t]^(r), listed in colex order.
struct RemovalSet {
  int r = 0;
  int t = 0;
  std::vector<RTuple> removed;

  friend bool operator==(const RemovalSet&, const RemovalSet&) = default;
};

namespace detail {

/// Dominance poset on [t]^(r), indexed in descending colex order.
struct DominancePoset {
  int r;
  int t;
  std::vector<RTuple> order;
  std::vector<std::vector<int>> parents;  // indices of direct ancestors

  DominancePoset(int r_, int t_) : r(r_), t(t_) {
    if (r < 2 || t < r) throw OutOfRange("need 2 <= r <= t");
    order = all_tuples(r, t);
    std::reverse(order.begin(), order.end());
    const auto count = order.size();
    parents.resize(count);
    // index of a tuple inside [t]^(r) is C(t,r) - colex_rank
    for (std::size_t idx = 0; idx < count; ++idx) {
      for (const RTuple& a : direct_ancestors(order[idx], t)) {
        parents[idx].push_back(static_cast<int>(count - colex_rank(a)));
      }
    }
  }

  std::size_t size() const { return order.size(); }
};

/// Depth-first up-set growth with explicit stack, resumable between results.
class UpSetWalker {
 public:
  UpSetWalker(int r, int t, std::uint64_t k) : poset_(r, t), k_(k) {
    if (k_ > poset_.size()) {
      throw OutOfRange("cannot remove " + std::to_string(k_) + " of " +
                       std::to_string(poset_.size()) + " tuples");
    }
    in_set_.assign(poset_.size(), 0);
  }

  /// Advances to the next up-set of size k; false once exhausted.
  bool advance() {
    if (done_) return false;
    if (k_ == 0) {
      done_ = started_;
      started_ = true;
      return !done_;
    }
    if (started_) pop_and_skip();
    started_ = true;
    const auto n = static_cast<int>(poset_.size());
    for (;;) {
      if (chosen_.size() == k_) return true;
      const int last_allowed = n - static_cast<int>(k_ - chosen_.size());
      int idx = next_try_;
      while (idx <= last_allowed && !addable(idx)) ++idx;
      if (idx <= last_allowed) {
        chosen_.push_back(idx);
        in_set_[static_cast<std::size_t>(idx)] = 1;
        next_try_ = idx + 1;
        continue;
      }
      if (chosen_.empty()) {
        done_ = true;
        return false;
      }
      pop_and_skip();
    }
  }

  const std::vector<int>& chosen() const { return chosen_; }
  const DominancePoset& poset() const { return poset_; }

 private:
  bool addable(int idx) const {
    for (int p : poset_.parents[static_cast<std::size_t>(idx)]) {
      if (!in_set_[static_cast<std::size_t>(p)]) return false;
    }
    return true;
  }

  void pop_and_skip() {
    const int last = chosen_.back();
    chosen_.pop_back();
    in_set_[static_cast<std::size_t>(last)] = 0;
    next_try_ = last + 1;
  }

  DominancePoset poset_;
  std::uint64_t k_;
  std::vector<char> in_set_;
  std::vector<int> chosen_;
  int next_try_ = 0;
  bool started_ = false;
  bool done_ = false;
};

}  // namespace detail

/// Lazy stream of all up-sets of size k in the dominance poset on [t]^(r).
///
/// Results come out ordered by their members read from colex-largest down,
/// compared lexicographically. Single consumer.
class RemovalSetStream {
 public:
  RemovalSetStream(int r, int t, std::uint64_t k) : walker_(r, t, k) {}

  std::optional<RemovalSet> next() {
    if (!walker_.advance()) return std::nullopt;
    const auto& poset = walker_.poset();
    RemovalSet out{poset.r, poset.t, {}};
    const auto& chosen = walker_.chosen();
    out.removed.reserve(chosen.size());
    for (auto it = chosen.rbegin(); it != chosen.rend(); ++it) {
      out.removed.push_back(poset.order[static_cast<std::size_t>(*it)]);
    }
    return out;
  }

 private:
  detail::UpSetWalker walker_;
};

inline RemovalSetStream enumerate_removals(int r, int t, std::uint64_t k) {
  return RemovalSetStream(r, t, k);
}

/// [t]^(r) minus the removal set, as a hypergraph on [t].
inline Hypergraph complement_graph(const RemovalSet& removal) {
  std::vector<RTuple> edges;
  const auto all = all_tuples(removal.r, removal.t);
  std::size_t cursor = 0;  // both lists are colex sorted
  for (const RTuple& e : all) {
    if (cursor < removal.removed.size() && removal.removed[cursor] == e) {
      ++cursor;
      continue;
    }
    edges.push_back(e);
  }
  return Hypergraph(removal.r, removal.t, std::move(edges));
}

/// Lazy stream of every left-compressed r-graph on [t] with m edges.
class LeftCompressedStream {
 public:
  LeftCompressedStream(int r, int t, std::uint64_t m)
      : removals_(r, t, removal_count(r, t, m)) {}

  std::optional<Hypergraph> next() {
    auto removal = removals_.next();
    if (!removal) return std::nullopt;
    return complement_graph(*removal);
  }

 private:
  static std::uint64_t removal_count(int r, int t, std::uint64_t m) {
    if (r < 2 || t < r) throw OutOfRange("need 2 <= r <= t");
    const std::uint64_t total = binomial(t, r);
    if (m > total) {
      throw OutOfRange("m = " + std::to_string(m) + " exceeds C(" + std::to_string(t) +
                       ", " + std::to_string(r) + ") = " + std::to_string(total));
    }
    return total - m;
  }

  RemovalSetStream removals_;
};

inline LeftCompressedStream enumerate_left_compressed(int r, int t, std::uint64_t m) {
  return LeftCompressedStream(r, t, m);
}

/// Number of left-compressed r-graphs on [t] with m edges, without building them.
inline std::uint64_t count_left_compressed(int r, int t, std::uint64_t m) {
  if (r < 2 || t < r) throw OutOfRange("need 2 <= r <= t");
  const std::uint64_t total = binomial(t, r);
  if (m > total) throw OutOfRange("m exceeds C(t, r)");
  detail::UpSetWalker walker(r, t, total - m);
  std::uint64_t count = 0;
  while (walker.advance()) ++count;
  return count;
}

}  // namespace hyperlag
