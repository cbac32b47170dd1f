#pragma once

// The Lagrangian lambda(G) = max over the simplex of
//   lambda(G, x) = sum over edges e of prod_{v in e} x_v,
// its partial evaluations, and a multi-start solver that returns a
// minimal-support optimal weighting.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hyperlag/error.hpp"
#include "hyperlag/hypergraph.hpp"
#include "hyperlag/simplex_ascent.hpp"

namespace hyperlag {

/// A legal weighting: n nonnegative reals summing to 1 (within 1e-12).
/// Index 0 holds the weight of vertex 1.
class Weighting {
 public:
  static constexpr double kSumTolerance = 1e-12;

  Weighting() = default;

  explicit Weighting(std::vector<double> values) : values_(std::move(values)) {
    double total = 0.0;
    for (double v : values_) {
      if (!(v >= 0.0) || !std::isfinite(v)) {
        throw OutOfRange("weights must be finite and nonnegative");
      }
      total += v;
    }
    if (std::abs(total - 1.0) > kSumTolerance) {
      throw OutOfRange("weights sum to " + std::to_string(total) + ", not 1");
    }
  }

  /// Uniform weighting on n vertices.
  static Weighting uniform(int n) {
    if (n < 1) throw OutOfRange("uniform weighting needs n >= 1");
    return Weighting(std::vector<double>(static_cast<std::size_t>(n), 1.0 / n));
  }

  int size() const { return static_cast<int>(values_.size()); }
  double operator[](Vertex v) const { return values_.at(static_cast<std::size_t>(v - 1)); }
  std::span<const double> values() const { return values_; }

  /// Vertices with positive weight, ascending.
  std::vector<Vertex> support() const {
    std::vector<Vertex> out;
    for (int i = 0; i < size(); ++i) {
      if (values_[static_cast<std::size_t>(i)] > 0) out.push_back(i + 1);
    }
    return out;
  }

  int support_size() const {
    return static_cast<int>(std::count_if(values_.begin(), values_.end(),
                                          [](double v) { return v > 0; }));
  }

 private:
  std::vector<double> values_;
};

struct LagrangianEstimate {
  double value = 0.0;
  Weighting witness;
  int support_size = 0;
  double residual = 0.0;
  std::string method;
  int restarts_used = 0;
};

struct SolverConfig {
  int restarts = 64;
  int max_iters = 5000;
  double stationarity_tol = 1e-9;
  double support_prune_tol = 1e-10;
  double value_tol = 1e-9;
  std::uint64_t seed = 42;

  void validate() const {
    if (restarts < 0) throw OutOfRange("restarts must be nonnegative");
    if (max_iters < 1) throw OutOfRange("max_iters must be positive");
    if (!(stationarity_tol > 0) || !(support_prune_tol > 0) || !(value_tol > 0)) {
      throw OutOfRange("solver tolerances must be positive");
    }
  }
};

/// The solver diverged or produced non-finite values.
class SolverFailure : public Error {
 public:
  SolverFailure(const std::string& what, LagrangianEstimate partial)
      : Error(what), partial_(std::move(partial)) {}
  const LagrangianEstimate& partial() const { return partial_; }

 private:
  LagrangianEstimate partial_;
};

/// lambda(G, x) as a polynomial on R^n with edges flattened to 0-based indices.
class GraphPolynomial {
 public:
  explicit GraphPolynomial(const Hypergraph& g)
      : r_(g.uniformity()), n_(g.vertex_count()) {
    flat_.reserve(g.edge_count() * static_cast<std::size_t>(r_));
    for (const RTuple& e : g.edges()) {
      for (Vertex v : e) flat_.push_back(v - 1);
    }
  }

  int dimension() const { return n_; }
  int degree() const { return r_; }
  std::size_t edge_count() const { return flat_.size() / static_cast<std::size_t>(r_); }

  double value(std::span<const double> x) const {
    double total = 0.0;
    for (std::size_t e = 0; e < flat_.size(); e += static_cast<std::size_t>(r_)) {
      double prod = 1.0;
      for (int s = 0; s < r_; ++s) prod *= x[static_cast<std::size_t>(flat_[e + static_cast<std::size_t>(s)])];
      total += prod;
    }
    return total;
  }

  void gradient(std::span<const double> x, std::span<double> g) const {
    std::fill(g.begin(), g.begin() + n_, 0.0);
    for (std::size_t e = 0; e < flat_.size(); e += static_cast<std::size_t>(r_)) {
      const int* edge = &flat_[e];
      for (int s = 0; s < r_; ++s) {
        double prod = 1.0;
        for (int u = 0; u < r_; ++u) {
          if (u != s) prod *= x[static_cast<std::size_t>(edge[u])];
        }
        g[static_cast<std::size_t>(edge[s])] += prod;
      }
    }
  }

  /// The polynomial is multilinear, so the diagonal is zero and
  /// H_uv = lambda(E_uv, x).
  void hessian(std::span<const double> x, Eigen::MatrixXd& h) const {
    h.setZero(n_, n_);
    for (std::size_t e = 0; e < flat_.size(); e += static_cast<std::size_t>(r_)) {
      const int* edge = &flat_[e];
      for (int s = 0; s < r_; ++s) {
        for (int u = s + 1; u < r_; ++u) {
          double prod = 1.0;
          for (int w = 0; w < r_; ++w) {
            if (w != s && w != u) prod *= x[static_cast<std::size_t>(edge[w])];
          }
          h(edge[s], edge[u]) += prod;
          h(edge[u], edge[s]) += prod;
        }
      }
    }
  }

 private:
  int r_;
  int n_;
  std::vector<int> flat_;
};

namespace detail {
inline void require_length(const Hypergraph& g, std::span<const double> x) {
  if (static_cast<int>(x.size()) < g.vertex_count()) {
    throw OutOfRange("weight vector has " + std::to_string(x.size()) +
                     " entries, graph has " + std::to_string(g.vertex_count()) + " vertices");
  }
}

inline double product_over(const VertexSet& set, std::span<const double> x) {
  double prod = 1.0;
  for (Vertex v : set) prod *= x[static_cast<std::size_t>(v - 1)];
  return prod;
}

inline double family_value(const std::vector<VertexSet>& family, std::span<const double> x) {
  double total = 0.0;
  for (const VertexSet& set : family) total += product_over(set, x);
  return total;
}
}  // namespace detail

/// lambda(G, x) for any vector x with at least n entries.
inline double evaluate(const Hypergraph& g, std::span<const double> x) {
  detail::require_length(g, x);
  return GraphPolynomial(g).value(x);
}

inline double evaluate(const Hypergraph& g, const Weighting& x) {
  return evaluate(g, x.values());
}

/// lambda(E_i, x), the partial derivative of lambda(G, x) in x_i.
inline double partial(const Hypergraph& g, std::span<const double> x, Vertex i) {
  detail::require_length(g, x);
  return detail::family_value(neighborhood(g, i), x);
}

inline double partial(const Hypergraph& g, const Weighting& x, Vertex i) {
  return partial(g, x.values(), i);
}

/// lambda(E_ij, x), the mixed second derivative in x_i, x_j.
inline double pair_partial(const Hypergraph& g, std::span<const double> x, Vertex i, Vertex j) {
  detail::require_length(g, x);
  return detail::family_value(pair_neighborhood(g, i, j), x);
}

inline double pair_partial(const Hypergraph& g, const Weighting& x, Vertex i, Vertex j) {
  return pair_partial(g, x.values(), i, j);
}

/// lambda(E_{i\j}, x).
inline double diff_partial(const Hypergraph& g, std::span<const double> x, Vertex i, Vertex j) {
  detail::require_length(g, x);
  return detail::family_value(diff_neighborhood(g, i, j), x);
}

inline double diff_partial(const Hypergraph& g, const Weighting& x, Vertex i, Vertex j) {
  return diff_partial(g, x.values(), i, j);
}

/// Moves `delta` of weight from vertex j to vertex i (delta may be negative).
/// For any G:
///   lambda(G, y) - lambda(G, x)
///     = delta (lambda(E_i, x) - lambda(E_j, x)) - delta^2 lambda(E_ij, x).
inline Weighting shift(const Weighting& x, Vertex i, Vertex j, double delta) {
  if (i == j) throw OutOfRange("shift needs two distinct vertices");
  if (i < 1 || j < 1 || i > x.size() || j > x.size()) throw OutOfRange("shift vertex out of range");
  std::vector<double> y(x.values().begin(), x.values().end());
  auto& yi = y[static_cast<std::size_t>(i - 1)];
  auto& yj = y[static_cast<std::size_t>(j - 1)];
  yi += delta;
  yj -= delta;
  // Absorb rounding on the exact-transfer boundary.
  constexpr double kSlack = 1e-15;
  if (yi < -kSlack || yj < -kSlack) throw OutOfRange("shift would create a negative weight");
  yi = std::max(yi, 0.0);
  yj = std::max(yj, 0.0);
  return Weighting(std::move(y));
}

/// max over the support of x of |lambda(E_i, x) - r lambda(G, x)|.
inline double stationarity_residual(const Hypergraph& g, std::span<const double> x) {
  detail::require_length(g, x);
  return support_residual(GraphPolynomial(g), x.first(static_cast<std::size_t>(g.vertex_count())));
}

inline double stationarity_residual(const Hypergraph& g, const Weighting& x) {
  return stationarity_residual(g, x.values());
}

/// Every pair of support vertices lies together in some edge of G.
inline bool support_pairs_covered(const Hypergraph& g, const Weighting& x) {
  const auto support = x.support();
  for (std::size_t a = 0; a < support.size(); ++a) {
    for (std::size_t b = a + 1; b < support.size(); ++b) {
      const bool covered = std::any_of(g.edges().begin(), g.edges().end(), [&](const RTuple& e) {
        return e.contains(support[a]) && e.contains(support[b]);
      });
      if (!covered) return false;
    }
  }
  return true;
}

/// Consecutive blocks of a left-compressed graph inside which vertices are
/// interchangeable: i and i+1 share a block iff E_{i\(i+1)} is empty.
inline std::vector<VertexSet> weight_classes(const Hypergraph& g) {
  if (!is_left_compressed(g)) throw OutOfRange("weight classes need a left-compressed graph");
  std::vector<VertexSet> classes;
  for (Vertex v = 1; v <= g.vertex_count(); ++v) {
    if (v == 1 || !diff_neighborhood(g, v - 1, v).empty()) classes.emplace_back();
    classes.back().push_back(v);
  }
  return classes;
}

/// lambda(G, x) restricted to weightings constant on each class, written in
/// the class masses w_c (so x_v = w_c / |c| for v in c). Still homogeneous of
/// degree r with nonnegative coefficients.
class ReducedPolynomial {
 public:
  ReducedPolynomial(const Hypergraph& g, std::vector<VertexSet> classes)
      : full_(g), classes_(std::move(classes)) {
    std::vector<int> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    for (const VertexSet& c : classes_) {
      if (c.empty()) throw OutOfRange("empty weight class");
      for (Vertex v : c) {
        if (v < 1 || v > g.vertex_count()) throw OutOfRange("weight class vertex out of range");
        ++seen[static_cast<std::size_t>(v - 1)];
      }
    }
    if (std::any_of(seen.begin(), seen.end(), [](int k) { return k != 1; })) {
      throw OutOfRange("weight classes must partition the vertex set");
    }
  }

  int dimension() const { return static_cast<int>(classes_.size()); }
  int degree() const { return full_.degree(); }

  std::vector<double> expand(std::span<const double> w) const {
    std::vector<double> x(static_cast<std::size_t>(full_.dimension()));
    for (std::size_t c = 0; c < classes_.size(); ++c) {
      const double each = w[c] / static_cast<double>(classes_[c].size());
      for (Vertex v : classes_[c]) x[static_cast<std::size_t>(v - 1)] = each;
    }
    return x;
  }

  double value(std::span<const double> w) const { return full_.value(expand(w)); }

  void gradient(std::span<const double> w, std::span<double> out) const {
    const auto x = expand(w);
    std::vector<double> g(x.size());
    full_.gradient(x, g);
    for (std::size_t c = 0; c < classes_.size(); ++c) {
      double total = 0.0;
      for (Vertex v : classes_[c]) total += g[static_cast<std::size_t>(v - 1)];
      out[c] = total / static_cast<double>(classes_[c].size());
    }
  }

  void hessian(std::span<const double> w, Eigen::MatrixXd& out) const {
    const auto x = expand(w);
    Eigen::MatrixXd h;
    full_.hessian(x, h);
    const auto q = static_cast<Eigen::Index>(classes_.size());
    out.setZero(q, q);
    for (Eigen::Index a = 0; a < q; ++a) {
      for (Eigen::Index b = 0; b < q; ++b) {
        double total = 0.0;
        for (Vertex u : classes_[static_cast<std::size_t>(a)]) {
          for (Vertex v : classes_[static_cast<std::size_t>(b)]) total += h(u - 1, v - 1);
        }
        out(a, b) = total / static_cast<double>(classes_[static_cast<std::size_t>(a)].size() *
                                                classes_[static_cast<std::size_t>(b)].size());
      }
    }
  }

 private:
  GraphPolynomial full_;
  std::vector<VertexSet> classes_;
};

namespace detail {

inline AscentSettings ascent_settings(const SolverConfig& cfg) {
  AscentSettings s;
  s.max_iters = cfg.max_iters;
  s.prune_tol = cfg.support_prune_tol;
  s.stationarity_tol = cfg.stationarity_tol;
  return s;
}

/// Lattice resolution per reduced dimension: 200 for up to 3 classes, 50 for
/// 4-5, and beyond that the largest resolution keeping the lattice small.
inline int reduced_grid_resolution(int classes) {
  if (classes <= 3) return 200;
  if (classes <= 5) return 50;
  constexpr std::uint64_t kMaxPoints = 400'000;
  int resolution = 1;
  while (binomial(resolution + 1 + classes - 1, classes - 1) <= kMaxPoints) ++resolution;
  return resolution;
}

/// Calls visit(k) for every composition k of `total` into `parts` parts.
template <typename Visit>
void for_each_composition(int total, int parts, Visit&& visit) {
  if (parts <= 0) return;
  std::vector<int> k(static_cast<std::size_t>(parts), 0);
  auto fill = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == parts - 1) {
      k[static_cast<std::size_t>(pos)] = remaining;
      visit(std::as_const(k));
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      k[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  fill(fill, 0, total);
}

/// Moves all weight between support pairs that no edge inside the support
/// covers. Along e_i - e_j the polynomial is then linear, so moving toward
/// the larger partial derivative does not lower the value.
inline bool merge_uncovered_pair(const Hypergraph& g, const GraphPolynomial& p,
                                 std::vector<double>& x) {
  const int n = g.vertex_count();
  Eigen::MatrixXd h;
  p.hessian(x, h);
  std::vector<double> grad(x.size());
  p.gradient(x, grad);
  for (int i = 0; i < n; ++i) {
    if (x[static_cast<std::size_t>(i)] <= 0) continue;
    for (int j = i + 1; j < n; ++j) {
      if (x[static_cast<std::size_t>(j)] <= 0 || h(i, j) != 0.0) continue;
      auto& xi = x[static_cast<std::size_t>(i)];
      auto& xj = x[static_cast<std::size_t>(j)];
      if (grad[static_cast<std::size_t>(j)] > grad[static_cast<std::size_t>(i)]) {
        xj += xi;
        xi = 0.0;
      } else {
        xi += xj;
        xj = 0.0;
      }
      return true;
    }
  }
  return false;
}

/// For a left-compressed graph, sorting weights into nonincreasing order
/// never lowers the value: swapping x_i < x_j (i < j) changes it by
/// (x_j - x_i) lambda(E_{i\j}, x) >= 0 because E_{j\i} is empty.
inline bool sort_if_compressed(bool compressed, std::vector<double>& x) {
  if (!compressed || std::is_sorted(x.begin(), x.end(), std::greater<>())) return false;
  std::sort(x.begin(), x.end(), std::greater<>());
  return true;
}

struct Candidate {
  double value;
  std::vector<double> x;
  int support;
};

/// Polishes one start into a locally optimal, support-reduced point.
inline Candidate refine(const Hypergraph& g, const GraphPolynomial& p, bool compressed,
                        std::vector<double> x, const AscentSettings& s) {
  polish(p, x, s);
  for (int guard = 0; guard < 4 * g.vertex_count() + 4; ++guard) {
    const bool merged = merge_uncovered_pair(g, p, x);
    const bool sorted = sort_if_compressed(compressed, x);
    if (!merged && !sorted) break;
    polish(p, x, s);
  }
  detail::renormalize(x);
  const int support = static_cast<int>(std::count_if(x.begin(), x.end(), [](double v) { return v > 0; }));
  return {p.value(x), std::move(x), support};
}

/// Largest value wins; within value_tol the smaller support wins; then the
/// lexicographically larger weight vector.
inline bool better(const Candidate& a, const Candidate& b, double value_tol) {
  if (a.value > b.value + value_tol) return true;
  if (b.value > a.value + value_tol) return false;
  if (a.support != b.support) return a.support < b.support;
  return std::lexicographical_compare(b.x.begin(), b.x.end(), a.x.begin(), a.x.end());
}

inline std::vector<double> dirichlet_start(int n, std::uint64_t seed, int restart) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(restart)};
  std::mt19937_64 rng(seq);
  std::exponential_distribution<double> exp1(1.0);
  std::vector<double> x(static_cast<std::size_t>(n));
  for (double& v : x) v = exp1(rng);
  renormalize(x);
  return x;
}

inline LagrangianEstimate make_estimate(const Hypergraph& g, std::vector<double> x,
                                        std::string method, int restarts_used) {
  renormalize(x);
  LagrangianEstimate est;
  est.witness = Weighting(std::move(x));
  est.value = evaluate(g, est.witness);
  est.support_size = est.witness.support_size();
  est.residual = stationarity_residual(g, est.witness);
  est.method = std::move(method);
  est.restarts_used = restarts_used;
  return est;
}

}  // namespace detail

/// Maximizes lambda(G, x) over weightings constant on `classes`.
///
/// The reduced simplex of class masses is scanned on a lattice, the best
/// lattice point is polished by growth-transform ascent and Newton steps,
/// and the result is expanded back to a full witness.
inline LagrangianEstimate solve_reduced(const Hypergraph& g, const std::vector<VertexSet>& classes,
                                        const SolverConfig& cfg = {}) {
  cfg.validate();
  if (g.edge_count() == 0) throw OutOfRange("the Lagrangian of an edgeless graph is undefined");
  const ReducedPolynomial reduced(g, classes);
  const int q = reduced.dimension();
  const int resolution = detail::reduced_grid_resolution(q);

  std::vector<double> best_w(static_cast<std::size_t>(q), 1.0 / q);
  double best_value = reduced.value(best_w);
  std::vector<double> w(static_cast<std::size_t>(q));
  detail::for_each_composition(resolution, q, [&](const std::vector<int>& k) {
    for (int c = 0; c < q; ++c) {
      w[static_cast<std::size_t>(c)] = static_cast<double>(k[static_cast<std::size_t>(c)]) / resolution;
    }
    const double v = reduced.value(w);
    if (v > best_value) {
      best_value = v;
      best_w = w;
    }
  });

  AscentSettings s = detail::ascent_settings(cfg);
  s.newton_iters = 100;
  polish(reduced, best_w, s);
  if (!detail::finite(best_w)) {
    throw SolverFailure("reduced solver produced non-finite weights", {});
  }
  return detail::make_estimate(g, reduced.expand(best_w), "reduced-grid+newton", 0);
}

/// lambda(G) with a minimal-support optimal weighting.
///
/// Starts from the uniform point and `cfg.restarts` Dirichlet(1) samples
/// (seeded per restart, so results do not depend on execution order). Each
/// start is polished, then support pairs not covered by an edge are merged
/// and, for left-compressed graphs, weights are sorted nonincreasing. The
/// best candidate is chosen by value, then support size, then
/// lexicographically largest weights.
inline LagrangianEstimate solve(const Hypergraph& g, const SolverConfig& cfg = {}) {
  cfg.validate();
  if (g.edge_count() == 0) throw OutOfRange("the Lagrangian of an edgeless graph is undefined");
  const int n = g.vertex_count();
  const GraphPolynomial p(g);
  const bool compressed = is_left_compressed(g);
  const AscentSettings s = detail::ascent_settings(cfg);

  std::vector<detail::Candidate> candidates;
  candidates.reserve(static_cast<std::size_t>(cfg.restarts) + 1);
  for (int restart = 0; restart <= cfg.restarts; ++restart) {
    auto start = restart == 0 ? std::vector<double>(static_cast<std::size_t>(n), 1.0 / n)
                              : detail::dirichlet_start(n, cfg.seed, restart);
    auto cand = detail::refine(g, p, compressed, std::move(start), s);
    if (!std::isfinite(cand.value) || !detail::finite(cand.x)) {
      LagrangianEstimate partial;
      if (!candidates.empty()) {
        const auto& prev = *std::max_element(candidates.begin(), candidates.end(),
                                             [](const auto& a, const auto& b) { return a.value < b.value; });
        partial = detail::make_estimate(g, prev.x, "growth-transform+newton", restart);
      }
      throw SolverFailure("solver produced non-finite values at restart " + std::to_string(restart),
                          std::move(partial));
    }
    candidates.push_back(std::move(cand));
  }

  const double top = std::max_element(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
                       return a.value < b.value;
                     })->value;
  const detail::Candidate* chosen = nullptr;
  for (const auto& c : candidates) {
    if (c.value < top - cfg.value_tol) continue;
    if (chosen == nullptr || detail::better(c, *chosen, cfg.value_tol)) chosen = &c;
  }
  return detail::make_estimate(g, chosen->x, "growth-transform+newton", cfg.restarts + 1);
}

}  // namespace hyperlag
