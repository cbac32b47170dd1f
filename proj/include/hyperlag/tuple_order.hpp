#pragma once

// Sorted r-tuples over 1-based vertex labels, the colex total order and the
// componentwise dominance order ("descendant"/"ancestor").

#include <algorithm>
#include <cstdint>
#include <deque>
#include <initializer_list>
#include <limits>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hyperlag/error.hpp"

namespace hyperlag {

using Vertex = int;

/// Binomial coefficient C(n, k); zero when k < 0, n < 0 or k > n.
inline std::uint64_t binomial(long long n, long long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (long long i = 1; i <= k; ++i) {
    // result * (n - k + i) / i is always integral at this point.
    const auto num = static_cast<std::uint64_t>(n - k + i);
    if (result > std::numeric_limits<std::uint64_t>::max() / num) {
      throw OutOfRange("binomial(" + std::to_string(n) + ", " +
                       std::to_string(k) + ") overflows 64 bits");
    }
    result = result * num / static_cast<std::uint64_t>(i);
  }
  return result;
}

/// A strictly increasing sequence of r >= 2 positive vertex labels.
class RTuple {
 public:
  RTuple() = default;

  explicit RTuple(std::vector<Vertex> elems) : elems_(std::move(elems)) {
    validate();
  }

  RTuple(std::initializer_list<Vertex> elems) : elems_(elems) { validate(); }

  /// Parses the text form "a b c" (space-separated ascending integers).
  static RTuple from_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::vector<Vertex> elems;
    long long v = 0;
    while (in >> v) {
      if (v < 1 || v > std::numeric_limits<Vertex>::max()) {
        throw ParseError("vertex label out of range: " + std::to_string(v));
      }
      elems.push_back(static_cast<Vertex>(v));
    }
    if (!in.eof()) throw ParseError("not an integer list: '" + std::string(text) + "'");
    try {
      return RTuple(std::move(elems));
    } catch (const OutOfRange& e) {
      throw ParseError(e.what());
    }
  }

  std::string to_text() const {
    std::string out;
    for (std::size_t s = 0; s < elems_.size(); ++s) {
      if (s) out += ' ';
      out += std::to_string(elems_[s]);
    }
    return out;
  }

  int size() const { return static_cast<int>(elems_.size()); }
  Vertex operator[](int s) const { return elems_[static_cast<std::size_t>(s)]; }
  Vertex front() const { return elems_.front(); }
  Vertex back() const { return elems_.back(); }
  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }
  const std::vector<Vertex>& elems() const { return elems_; }

  long long sum() const {
    long long s = 0;
    for (Vertex v : elems_) s += v;
    return s;
  }

  bool contains(Vertex v) const {
    return std::binary_search(elems_.begin(), elems_.end(), v);
  }

  friend bool operator==(const RTuple&, const RTuple&) = default;

 private:
  void validate() const {
    if (elems_.size() < 2) throw OutOfRange("an r-tuple needs r >= 2 entries");
    if (elems_.front() < 1) throw OutOfRange("vertex labels start at 1");
    for (std::size_t s = 1; s < elems_.size(); ++s) {
      if (elems_[s] <= elems_[s - 1]) {
        throw OutOfRange("r-tuple entries must be strictly increasing");
      }
    }
  }

  std::vector<Vertex> elems_;
};

namespace detail {
inline void require_same_uniformity(const RTuple& a, const RTuple& b) {
  if (a.size() != b.size()) {
    throw UniformityMismatch("r-tuples of different sizes: " +
                             std::to_string(a.size()) + " vs " +
                             std::to_string(b.size()));
  }
}

inline void require_within(const RTuple& a, int t) {
  if (a.back() > t) {
    throw OutOfRange("tuple {" + a.to_text() + "} is not inside [" +
                     std::to_string(t) + "]");
  }
}
}  // namespace detail

/// Colex order: compare the sorted tuples from the largest entry down.
inline bool colex_less(const RTuple& a, const RTuple& b) {
  detail::require_same_uniformity(a, b);
  for (int s = a.size() - 1; s >= 0; --s) {
    if (a[s] != b[s]) return a[s] < b[s];
  }
  return false;
}

struct ColexLess {
  bool operator()(const RTuple& a, const RTuple& b) const { return colex_less(a, b); }
};

/// 1-based position of `a` in the colex order of all r-subsets of N.
inline std::uint64_t colex_rank(const RTuple& a) {
  std::uint64_t rank = 1;
  for (int s = 0; s < a.size(); ++s) rank += binomial(a[s] - 1, s + 1);
  return rank;
}

/// Inverse of colex_rank: the k-th r-subset of N in colex order.
inline RTuple colex_unrank(int r, std::uint64_t k) {
  if (r < 2) throw OutOfRange("uniformity must be at least 2");
  if (k < 1) throw OutOfRange("colex ranks start at 1");
  std::uint64_t rest = k - 1;
  std::vector<Vertex> elems(static_cast<std::size_t>(r));
  // Combinatorial number system: rest = sum_s C(c_s, s) with c_1 < ... < c_r.
  for (int s = r; s >= 1; --s) {
    long long c = s - 1;
    while (binomial(c + 1, s) <= rest) ++c;
    rest -= binomial(c, s);
    elems[static_cast<std::size_t>(s - 1)] = static_cast<Vertex>(c + 1);
  }
  return RTuple(std::move(elems));
}

/// All r-subsets of [t] in colex order; these are exactly the first C(t, r) ranks.
inline std::vector<RTuple> all_tuples(int r, int t) {
  if (r < 2 || t < r) throw OutOfRange("need 2 <= r <= t");
  const std::uint64_t count = binomial(t, r);
  std::vector<RTuple> out;
  out.reserve(count);
  for (std::uint64_t k = 1; k <= count; ++k) out.push_back(colex_unrank(r, k));
  return out;
}

/// `a` is a descendant of `b`: a_s <= b_s everywhere and sum(a) < sum(b).
inline bool is_descendant(const RTuple& a, const RTuple& b) {
  detail::require_same_uniformity(a, b);
  for (int s = 0; s < a.size(); ++s) {
    if (a[s] > b[s]) return false;
  }
  return a.sum() < b.sum();
}

/// Tuples obtained by decrementing one entry of `a` while staying strictly
/// increasing and positive. Returned in colex order.
inline std::vector<RTuple> direct_descendants(const RTuple& a, int t) {
  detail::require_within(a, t);
  std::vector<RTuple> out;
  std::vector<Vertex> elems = a.elems();
  for (int s = 0; s < a.size(); ++s) {
    const Vertex lowered = a[s] - 1;
    if (lowered < 1 || (s > 0 && lowered <= a[s - 1])) continue;
    elems[static_cast<std::size_t>(s)] = lowered;
    out.emplace_back(elems);
    elems[static_cast<std::size_t>(s)] = a[s];
  }
  std::sort(out.begin(), out.end(), ColexLess{});
  return out;
}

/// Tuples inside [t] having `a` as a direct descendant. Returned in colex order.
inline std::vector<RTuple> direct_ancestors(const RTuple& a, int t) {
  detail::require_within(a, t);
  std::vector<RTuple> out;
  std::vector<Vertex> elems = a.elems();
  const int r = a.size();
  for (int s = 0; s < r; ++s) {
    const Vertex raised = a[s] + 1;
    if (raised > t || (s + 1 < r && raised >= a[s + 1])) continue;
    elems[static_cast<std::size_t>(s)] = raised;
    out.emplace_back(elems);
    elems[static_cast<std::size_t>(s)] = a[s];
  }
  std::sort(out.begin(), out.end(), ColexLess{});
  return out;
}

namespace detail {
template <typename Step>
std::vector<RTuple> closure(const RTuple& a, int t, Step step) {
  std::set<RTuple, ColexLess> seen;
  std::deque<RTuple> frontier{a};
  while (!frontier.empty()) {
    RTuple cur = std::move(frontier.front());
    frontier.pop_front();
    for (RTuple& next : step(cur, t)) {
      if (seen.insert(next).second) frontier.push_back(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}
}  // namespace detail

/// Every b inside [t] with `a` a descendant of b, in colex order.
inline std::vector<RTuple> ancestors_within(const RTuple& a, int t) {
  return detail::closure(a, t, direct_ancestors);
}

/// Every descendant of `a`, in colex order (all lie inside [a.back()]).
inline std::vector<RTuple> descendants(const RTuple& a) {
  return detail::closure(a, a.back(), direct_descendants);
}

}  // namespace hyperlag
