#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ytensor {

struct QuadratureConfig {
  double abs_tol = 1e-9;
  double rel_tol = 1e-9;
  int max_subdivisions = 4000;  // interval budget for adaptive Gauss-Kronrod
  int max_levels = 12;          // halvings of the tanh-sinh step

  /// Throws std::invalid_argument on nonpositive tolerances.
  void validate() const {
    if (!(abs_tol > 0) || !(rel_tol > 0)) throw std::invalid_argument("quadrature tolerances must be positive");
    if (max_subdivisions < 1 || max_levels < 1) throw std::invalid_argument("quadrature budgets must be positive");
  }
};

class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  int evaluations = 0;
};

/// Double-exponential (tanh-sinh) rule on [a, b].
///
/// Nodes crowd the endpoints doubly exponentially, so integrable endpoint
/// singularities (logarithmic, inverse square root) converge at the same rate
/// as smooth integrands. Endpoints themselves are never evaluated.
template <class F>
QuadratureResult tanh_sinh(F&& f, double a, double b, const QuadratureConfig& cfg = {}) {
  cfg.validate();
  QuadratureResult out;
  if (a == b) return out;
  const double sgn = b > a ? 1.0 : -1.0;
  if (b < a) std::swap(a, b);
  const double half = 0.5 * (b - a);
  constexpr double kHalfPi = std::numbers::pi / 2;

  // Contribution of the node pair +-t with weight already folded in.
  auto pair_sum = [&](double t) -> double {
    const double u = kHalfPi * std::sinh(t);
    const double cu = std::cosh(u);
    const double w = kHalfPi * std::cosh(t) / (cu * cu);
    const double d = half / (std::exp(u) * cu);  // distance of node to the endpoint
    double s = 0.0;
    const double xr = b - d;
    const double xl = a + d;
    if (xr < b && xr > a) s += f(xr);
    if (t != 0.0 && xl > a && xl < b) s += f(xl);
    ++out.evaluations;
    return w * s;
  };

  // The node falls onto the endpoint in double precision at t ~ 6.1.
  constexpr double kTmax = 6.5;
  double step = 1.0;
  double sum = pair_sum(0.0);
  for (double t = 1.0; t <= kTmax; t += 1.0) sum += pair_sum(t);
  double estimate = half * step * sum;
  for (int level = 1; level <= cfg.max_levels; ++level) {
    step *= 0.5;
    double added = 0.0;
    for (double t = step; t <= kTmax; t += 2 * step) added += pair_sum(t);
    sum += added;
    const double next = half * step * sum;
    const double diff = std::abs(next - estimate);
    estimate = next;
    if (level >= 3 && diff <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(next))) {
      out.value = sgn * next;
      out.error = diff;
      return out;
    }
  }
  throw QuadratureError("tanh-sinh did not converge on [" + std::to_string(a) + ", " + std::to_string(b) + "]");
}

namespace detail {

inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b, value, error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

template <class F>
Panel kronrod_panel(F& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double kronrod = fc * kKronrodWeights[7];
  double gauss = fc * kGaussWeights[3];
  for (int k = 0; k < 7; ++k) {
    const double dx = h * kKronrodNodes[static_cast<std::size_t>(k)];
    const double pair = f(c - dx) + f(c + dx);
    kronrod += kKronrodWeights[static_cast<std::size_t>(k)] * pair;
    if (k % 2 == 1) gauss += kGaussWeights[static_cast<std::size_t>(k / 2)] * pair;
  }
  return {a, b, kronrod * h, std::abs((kronrod - gauss) * h)};
}

}  // namespace detail

/// Globally adaptive 7/15-point Gauss-Kronrod with bisection of the worst panel.
template <class F>
QuadratureResult gauss_kronrod(F&& f, double a, double b, const QuadratureConfig& cfg = {}) {
  cfg.validate();
  QuadratureResult out;
  if (a == b) return out;
  std::priority_queue<detail::Panel> panels;
  auto first = detail::kronrod_panel(f, a, b);
  double total = first.value;
  double error = first.error;
  panels.push(first);
  int count = 1;
  while (error > std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total))) {
    if (count >= cfg.max_subdivisions)
      throw QuadratureError("Gauss-Kronrod exceeded " + std::to_string(cfg.max_subdivisions) + " subdivisions");
    auto worst = panels.top();
    panels.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    auto left = detail::kronrod_panel(f, worst.a, mid);
    auto right = detail::kronrod_panel(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
    ++count;
  }
  // Re-sum to shed the drift of the running updates.
  total = 0.0;
  error = 0.0;
  while (!panels.empty()) {
    total += panels.top().value;
    error += panels.top().error;
    panels.pop();
  }
  out.value = total;
  out.error = error;
  out.evaluations = 15 * (2 * count - 1);
  return out;
}

/// Fixed 15-point Kronrod rule; exact for polynomials of degree 22.
template <class F>
double kronrod15(F&& f, double a, double b) {
  return detail::kronrod_panel(f, a, b).value;
}

/// Sorted, deduplicated breakpoints clipped to [lo, hi] with both ends included.
inline std::vector<double> breakpoints_within(double lo, double hi, std::span<const double> interior) {
  std::vector<double> pts{lo, hi};
  for (double p : interior)
    if (p > lo && p < hi) pts.push_back(p);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

/// Sum of tanh-sinh integrals over consecutive breakpoints. The breakpoints
/// must include every point where f is singular or not smooth.
template <class F>
double integrate_pieces(F&& f, std::span<const double> points, const QuadratureConfig& cfg = {}) {
  double total = 0.0;
  for (std::size_t k = 0; k + 1 < points.size(); ++k)
    if (points[k + 1] > points[k]) total += tanh_sinh(f, points[k], points[k + 1], cfg).value;
  return total;
}

}  // namespace ytensor
