#pragma once

// Local maximization of a homogeneous polynomial with nonnegative
// coefficients over the standard simplex.
//
// Two stages are combined:
//   * the growth transform x_i <- x_i * g_i(x) / (d * p(x)), where g is the
//     gradient and d the degree. By Euler's identity sum_i x_i g_i = d p, so
//     the update stays on the simplex, and for such polynomials it never
//     decreases p (Baum-Eagon inequality);
//   * Newton's method on the KKT system restricted to the current support,
//     [H_SS  -1; 1^T 0] [dx; dmu] = -[g_S - mu; sum x_S - 1], with an
//     active-set rule that drops coordinates hitting zero and re-admits
//     coordinates whose partial derivative exceeds the multiplier.

#include <algorithm>
#include <cmath>
#include <concepts>
#include <functional>
#include <limits>
#include <numeric>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace hyperlag {

/// A homogeneous polynomial with nonnegative coefficients.
template <typename P>
concept SimplexPolynomial = requires(const P& p, std::span<const double> x,
                                     std::span<double> g, Eigen::MatrixXd& h) {
  { p.dimension() } -> std::convertible_to<int>;
  { p.degree() } -> std::convertible_to<int>;
  { p.value(x) } -> std::convertible_to<double>;
  p.gradient(x, g);
  p.hessian(x, h);
};

struct AscentSettings {
  int max_iters = 5000;         // growth-transform iterations per ascent phase
  double step_tol = 1e-13;      // ascent stops once max |dx| falls below this
  int newton_iters = 60;
  double prune_tol = 1e-10;     // coordinates below this are treated as zero
  double stationarity_tol = 1e-9;
  int max_rounds = 8;           // prune/Newton/re-admit cycles
};

namespace detail {
inline void renormalize(std::vector<double>& x) {
  const double total = std::accumulate(x.begin(), x.end(), 0.0);
  if (total > 0) {
    for (double& v : x) v /= total;
  }
}

inline void prune(std::vector<double>& x, double tol) {
  for (double& v : x) {
    if (v < tol) v = 0.0;
  }
  renormalize(x);
}

inline bool finite(std::span<const double> x) {
  return std::all_of(x.begin(), x.end(), [](double v) { return std::isfinite(v); });
}
}  // namespace detail

/// One growth-transform step in place. Returns max |x_new - x_old|.
/// A point with p(x) = 0 is a fixed point.
template <SimplexPolynomial P>
double growth_step(const P& p, std::vector<double>& x, std::vector<double>& scratch) {
  const double value = p.value(x);
  if (!(value > 0)) return 0.0;
  scratch.resize(x.size());
  p.gradient(x, scratch);
  const double scale = 1.0 / (p.degree() * value);
  double total = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    scratch[i] = x[i] * scratch[i] * scale;
    total += scratch[i];
  }
  double change = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double next = scratch[i] / total;  // total == 1 up to rounding
    change = std::max(change, std::abs(next - x[i]));
    x[i] = next;
  }
  return change;
}

/// Runs the growth transform until the step is below `step_tol` or
/// `max_iters` is reached. `observe` sees the value after every step.
template <SimplexPolynomial P>
int growth_ascent(const P& p, std::vector<double>& x, int max_iters, double step_tol,
                  const std::function<void(double)>& observe = {}) {
  std::vector<double> scratch;
  int it = 0;
  while (it < max_iters) {
    const double change = growth_step(p, x, scratch);
    ++it;
    if (observe) observe(p.value(x));
    if (change < step_tol) break;
  }
  return it;
}

/// max over the support of |g_i - d p|; the KKT residual restricted to x_i > 0.
template <SimplexPolynomial P>
double support_residual(const P& p, std::span<const double> x) {
  std::vector<double> g(x.size());
  p.gradient(x, g);
  const double target = p.degree() * p.value(x);
  double worst = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] > 0) worst = std::max(worst, std::abs(g[i] - target));
  }
  return worst;
}

/// Newton iteration on the KKT system over the support of x, dropping
/// coordinates that reach zero. Leaves x unchanged (and returns false) if the
/// result would lower p by more than a rounding margin.
template <SimplexPolynomial P>
bool newton_polish(const P& p, std::vector<double>& x, const AscentSettings& s) {
  const std::vector<double> start = x;
  const double start_value = p.value(x);
  const int n = p.dimension();
  std::vector<double> g(static_cast<std::size_t>(n));
  Eigen::MatrixXd h(n, n);

  for (int it = 0; it < s.newton_iters; ++it) {
    std::vector<int> support;
    for (int i = 0; i < n; ++i) {
      if (x[static_cast<std::size_t>(i)] > 0) support.push_back(i);
    }
    const int k = static_cast<int>(support.size());
    if (k <= 1) break;
    p.gradient(x, g);
    p.hessian(x, h);
    const double mu = p.degree() * p.value(x);

    Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(k + 1, k + 1);
    Eigen::VectorXd rhs(k + 1);
    double mass = 0.0;
    for (int a = 0; a < k; ++a) {
      const auto ia = static_cast<std::size_t>(support[static_cast<std::size_t>(a)]);
      for (int b = 0; b < k; ++b) {
        jac(a, b) = h(support[static_cast<std::size_t>(a)], support[static_cast<std::size_t>(b)]);
      }
      jac(a, k) = -1.0;
      jac(k, a) = 1.0;
      rhs(a) = -(g[ia] - mu);
      mass += x[ia];
    }
    rhs(k) = -(mass - 1.0);
    if (rhs.lpNorm<Eigen::Infinity>() < 1e-16) break;

    const Eigen::VectorXd step = jac.completeOrthogonalDecomposition().solve(rhs);
    if (!step.allFinite()) break;

    // Longest step in [0, 1] keeping the support nonnegative.
    double alpha = 1.0;
    int blocking = -1;
    for (int a = 0; a < k; ++a) {
      const double xa = x[static_cast<std::size_t>(support[static_cast<std::size_t>(a)])];
      if (step(a) < 0 && xa + step(a) < 0) {
        const double limit = xa / -step(a);
        if (limit < alpha) {
          alpha = limit;
          blocking = a;
        }
      }
    }
    double biggest = 0.0;
    for (int a = 0; a < k; ++a) {
      auto& xa = x[static_cast<std::size_t>(support[static_cast<std::size_t>(a)])];
      xa = std::max(0.0, xa + alpha * step(a));
      biggest = std::max(biggest, std::abs(alpha * step(a)));
    }
    if (blocking >= 0) x[static_cast<std::size_t>(support[static_cast<std::size_t>(blocking)])] = 0.0;
    detail::renormalize(x);
    if (biggest < 1e-17) break;
  }

  detail::prune(x, s.prune_tol);
  const double end_value = p.value(x);
  if (!detail::finite(x) || !(end_value >= start_value - 1e-13 * std::max(1.0, start_value))) {
    x = start;
    return false;
  }
  return true;
}

/// Full local maximization from `x`: growth ascent, then alternating
/// prune/Newton rounds, re-admitting any zero coordinate whose partial
/// derivative beats d p(x) by more than the stationarity tolerance.
template <SimplexPolynomial P>
void polish(const P& p, std::vector<double>& x, const AscentSettings& s) {
  growth_ascent(p, x, s.max_iters, s.step_tol);
  std::vector<double> g(x.size());
  for (int round = 0; round < s.max_rounds; ++round) {
    detail::prune(x, s.prune_tol);
    if (!newton_polish(p, x, s)) {
      // Newton was rejected; continue with the (monotone) growth transform.
      growth_ascent(p, x, s.max_iters, 0.0);
      detail::prune(x, s.prune_tol);
    }
    p.gradient(x, g);
    const double target = p.degree() * p.value(x);
    int best = -1;
    double excess = s.stationarity_tol;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] == 0.0 && g[i] - target > excess) {
        excess = g[i] - target;
        best = static_cast<int>(i);
      }
    }
    if (best < 0) return;
    // Moving a little mass onto `best` raises p to first order.
    constexpr double kMix = 1e-3;
    for (double& v : x) v *= 1.0 - kMix;
    x[static_cast<std::size_t>(best)] += kMix;
    growth_ascent(p, x, s.max_iters, s.step_tol);
  }
}

}  // namespace hyperlag
