#pragma once

// Certified lower bound on lambda(G) from the rational lattice
// { k / d : k_i >= 0, sum k_i = d }. With integer numerators the value at a
// lattice point is (sum over edges of prod k_v) / d^r, so the maximum is
// found with integer arithmetic and returned as an exact rational.

#include <cstdint>
#include <limits>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hyperlag/error.hpp"
#include "hyperlag/hypergraph.hpp"
#include "hyperlag/tuple_order.hpp"

namespace hyperlag {

using Rational = boost::multiprecision::cpp_rational;

struct GridBound {
  Rational value;               // max of lambda(G, k/d) over the lattice
  std::vector<int> numerators;  // a maximizing k, one entry per vertex
  int denominator = 1;
  std::uint64_t points_visited = 0;

  double to_double() const { return value.convert_to<double>(); }
};

inline constexpr std::uint64_t kDefaultLatticeCap = 20'000'000;

inline GridBound grid_lower_bound(const Hypergraph& g, int denominator,
                                  std::uint64_t lattice_cap = kDefaultLatticeCap) {
  if (denominator < 1) throw OutOfRange("grid denominator must be at least 1");
  const int n = g.vertex_count();
  if (n < 1) throw OutOfRange("grid bound needs at least one vertex");
  const std::uint64_t points = binomial(denominator + n - 1, n - 1);
  if (points > lattice_cap) {
    throw OutOfRange("lattice has " + std::to_string(points) + " points, cap is " +
                     std::to_string(lattice_cap));
  }
  const int r = g.uniformity();
  std::vector<int> flat;
  for (const RTuple& e : g.edges()) {
    for (Vertex v : e) flat.push_back(v - 1);
  }

  std::vector<int> k(static_cast<std::size_t>(n), 0);
  std::vector<int> best_k;
  std::uint64_t best = 0;
  bool have_best = false;
  std::uint64_t visited = 0;

  auto score = [&]() {
    std::uint64_t total = 0;
    for (std::size_t e = 0; e < flat.size(); e += static_cast<std::size_t>(r)) {
      std::uint64_t prod = 1;
      for (int s = 0; s < r; ++s) {
        const auto factor = static_cast<std::uint64_t>(k[static_cast<std::size_t>(flat[e + static_cast<std::size_t>(s)])]);
        if (factor != 0 && prod > std::numeric_limits<std::uint64_t>::max() / factor) {
          throw OutOfRange("lattice value overflows 64 bits");
        }
        prod *= factor;
      }
      if (total > std::numeric_limits<std::uint64_t>::max() - prod) {
        throw OutOfRange("lattice value overflows 64 bits");
      }
      total += prod;
    }
    return total;
  };

  auto fill = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == n - 1) {
      k[static_cast<std::size_t>(pos)] = remaining;
      ++visited;
      const std::uint64_t v = score();
      if (!have_best || v > best) {
        best = v;
        best_k = k;
        have_best = true;
      }
      return;
    }
    for (int v = remaining; v >= 0; --v) {
      k[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  fill(fill, 0, denominator);

  boost::multiprecision::cpp_int scale = 1;
  for (int s = 0; s < r; ++s) scale *= denominator;
  GridBound out;
  out.value = Rational(boost::multiprecision::cpp_int(best), scale);
  out.numerators = std::move(best_k);
  out.denominator = denominator;
  out.points_visited = visited;
  return out;
}

}  // namespace hyperlag
