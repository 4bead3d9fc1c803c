#include "ytensor/functionals.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "ytensor/exact.hpp"

namespace ytensor {
namespace {

constexpr double kPi = std::numbers::pi;

double phi1(double x) { return phi(1, x); }
double phi2(double x) { return phi(2, x); }

/// Integral of ln|2(s - t)| over s in [s0, s1], t in [t0, t1].
double corner4(double s0, double s1, double t0, double t1) {
  return phi2(s1 - t1) - phi2(s1 - t0) - phi2(s0 - t1) + phi2(s0 - t0);
}

QuadratureConfig tighter(const QuadratureConfig& quad, double factor) {
  QuadratureConfig inner = quad;
  inner.abs_tol = std::max(quad.abs_tol * factor, 1e-14);
  inner.rel_tol = std::max(quad.rel_tol * factor, 1e-14);
  return inner;
}

template <class F>
double integrate_over(F&& f, double lo, double hi, std::vector<double> interior, const QuadratureConfig& quad) {
  if (!(hi > lo)) return 0.0;
  const auto pts = breakpoints_within(lo, hi, interior);
  return integrate_pieces(f, pts, quad);
}

/// Curved part [c/2 - 1, c/2 + 1] clipped to the window.
std::pair<double, double> curved_range(const DerivativeModel& g) {
  return {std::max(g.a, 0.5 * g.c - 1.0), std::min(g.b, 0.5 * g.c + 1.0)};
}

/// int over the curved range of weight * Omega_c'(t) * k(t).
template <class K>
double smooth_pairing(const DerivativeModel& g, K&& kernel, std::vector<double> interior, const QuadratureConfig& quad) {
  if (g.smooth_weight == 0) return 0.0;
  const ShapeParam p(g.c);
  const auto [lo, hi] = curved_range(g);
  auto f = [&](double t) { return omega_c_prime(p, t) * kernel(t); };
  return g.smooth_weight * integrate_over(f, lo, hi, std::move(interior), quad);
}

std::vector<double> step_ends(const DerivativeModel& g) {
  std::vector<double> out;
  out.reserve(2 * g.steps.size());
  for (const auto& piece : g.steps) {
    out.push_back(piece.begin);
    out.push_back(piece.end);
  }
  return out;
}

double rho_antiderivative_log(double c, double s) {
  const double x = 2 * c * s;
  const double xlog = x == -1 ? 0.0 : (1 + x) * std::log1p(x);
  return (xlog - x) / (2 * c);
}

/// int s ln(1 + 2cs) ds up to a constant, arranged to avoid the O(1)
/// cancellation for small 2cs.
double rho_antiderivative_slog(double c, double s) {
  const double x = 2 * c * s;
  const double xlog = x == -1 ? 0.0 : (x * x - 1) * std::log1p(x);
  return (0.5 * xlog + 0.5 * x - 0.25 * x * x) / (4 * c * c);
}

void require_window(const ShapeParam& p, Window w) {
  const double c = p.c();
  const double left = c > 0 ? std::min(p.curved_left(), -0.5 / c) : p.curved_left();
  if (!(w.a < left) || !(w.b > p.curved_right()))
    throw std::invalid_argument("window must satisfy a < min(c/2 - 1, -1/(2c)) and b > c/2 + 1");
}

std::vector<double> shape_breakpoints(const ShapeParam& p) {
  std::vector<double> pts{p.curved_left(), p.curved_right()};
  if (p.c() > 0) pts.push_back(-0.5 / p.c());
  return pts;
}

double check_n(std::int64_t n, std::int64_t N) {
  if (n < 1 || N < 1) throw std::invalid_argument("n and N must be positive");
  return std::sqrt(static_cast<double>(n)) / static_cast<double>(N);
}

}  // namespace

QuadratureConfig tight_quadrature() {
  QuadratureConfig q;
  q.abs_tol = 1e-12;
  q.rel_tol = 1e-12;
  return q;
}

Window default_window(double c) {
  const ShapeParam p(c);
  double left = p.curved_left();
  if (c > 0) left = std::min(left, -0.5 / c);
  return {left - 0.5, p.curved_right() + 0.5};
}

Window default_window(double c, const Profile& profile) {
  Window w = default_window(c);
  w.a = std::min(w.a, profile.support_left() - 0.5);
  w.b = std::max(w.b, profile.support_right() + 0.5);
  return w;
}

DerivativeModel derivative_of(const Profile& profile, Window w) {
  if (w.a > profile.support_left() || w.b < profile.support_right())
    throw std::invalid_argument("window does not contain the profile support");
  DerivativeModel g;
  g.a = w.a;
  g.b = w.b;
  g.steps.push_back({w.a, profile.support_left(), -1.0});
  for (const auto& seg : profile.segments())
    g.steps.push_back({seg.begin * profile.step(), seg.end * profile.step(), static_cast<double>(seg.slope)});
  g.steps.push_back({profile.support_right(), w.b, 1.0});
  return g;
}

DerivativeModel derivative_of_shape(const ShapeParam& p, Window w) {
  const double c = p.c();
  if (w.a > p.support_left() || w.b < p.support_right())
    throw std::invalid_argument("window does not contain the support of Omega_c");
  DerivativeModel g;
  g.a = w.a;
  g.b = w.b;
  g.c = c;
  g.smooth_weight = 1.0;
  g.steps.push_back({w.a, p.support_left(), -1.0});
  if (c > 1) g.steps.push_back({-0.5 / c, p.curved_left(), 1.0});
  g.steps.push_back({p.curved_right(), w.b, 1.0});
  return g;
}

DerivativeModel difference(const DerivativeModel& first, const DerivativeModel& second) {
  if (first.a != second.a || first.b != second.b) throw std::invalid_argument("derivative models use different windows");
  const bool first_smooth = first.smooth_weight != 0;
  const bool second_smooth = second.smooth_weight != 0;
  if (first_smooth && second_smooth && first.c != second.c)
    throw std::invalid_argument("derivative models use different c");
  DerivativeModel out = first;
  if (!first_smooth) out.c = second.c;
  for (const auto& piece : second.steps) out.steps.push_back({piece.begin, piece.end, -piece.value});
  out.smooth_weight = first.smooth_weight - second.smooth_weight;
  return out;
}

DerivativeModel scaled(const DerivativeModel& g, double factor) {
  DerivativeModel out = g;
  for (auto& piece : out.steps) piece.value *= factor;
  out.smooth_weight *= factor;
  return out;
}

double log_energy(const DerivativeModel& g, const QuadratureConfig& quad) {
  double steps = 0.0;
  for (const auto& p : g.steps)
    for (const auto& q : g.steps) steps += p.value * q.value * corner4(p.begin, p.end, q.begin, q.end);
  if (g.smooth_weight == 0) return steps;

  // Step x smooth: int Omega'(t) sum_i v_i int_{piece i} ln|2(s - t)| ds dt.
  auto psi = [&](double t) {
    double total = 0.0;
    for (const auto& p : g.steps) total += p.value * (phi1(p.begin - t) - phi1(p.end - t));
    return total;
  };
  const double cross = smooth_pairing(g, psi, step_ends(g), quad);

  // Smooth x smooth by nested quadrature, the inner one split at the log singularity.
  const ShapeParam shape(g.c);
  const auto [lo, hi] = curved_range(g);
  const QuadratureConfig inner = tighter(quad, 1e-2);
  auto kernel = [&](double s) {
    auto f = [&](double t) { return std::log(2 * std::abs(s - t)) * omega_c_prime(shape, t); };
    return tanh_sinh(f, lo, s, inner).value + tanh_sinh(f, s, hi, inner).value;
  };
  const double self = g.smooth_weight * smooth_pairing(g, kernel, {}, quad);
  return steps + 2 * cross + self;
}

double theta_segments(std::span<const StepPiece> pieces) {
  double total = 0.0;
  for (std::size_t j = 0; j < pieces.size(); ++j) {
    if (pieces[j].value <= 0) continue;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      if (pieces[i].value >= 0 || pieces[i].begin < pieces[j].end) continue;
      total += corner4(pieces[i].begin, pieces[i].end, pieces[j].begin, pieces[j].end);
    }
  }
  return 1.0 + 8.0 * total;
}

double theta_profile(const Profile& profile) {
  std::vector<StepPiece> pieces;
  for (const auto& seg : profile.segments())
    pieces.push_back({seg.begin * profile.step(), seg.end * profile.step(), static_cast<double>(seg.slope)});
  return theta_segments(pieces);
}

double theta_window(const DerivativeModel& g, const QuadratureConfig& quad) {
  const double a = g.a;
  const double b = g.b;
  // int g(t) (phi_1(t - a) - phi_1(b - t)) dt, steps in closed form.
  double linear = 0.0;
  for (const auto& p : g.steps)
    linear += p.value * (phi2(p.end - a) - phi2(p.begin - a) - phi2(b - p.begin) + phi2(b - p.end));
  linear += smooth_pairing(g, [&](double t) { return phi1(t - a) - phi1(b - t); }, {}, quad);
  return 1.0 - 2.0 * phi2(b - a) + 2.0 * linear - log_energy(g, quad);
}

double theta_shape(const ShapeParam& c, const QuadratureConfig& quad) {
  const Window w = default_window(c.c());
  return theta_window(derivative_of_shape(c, w), quad);
}

double rho_profile(const Profile& profile, double c) {
  if (!(c >= 0)) throw std::invalid_argument("c must be nonnegative");
  if (c == 0) return 0.0;
  if (1 + 2 * c * profile.support_left() < -1e-12)
    throw std::domain_error("profile leaves |s| left of -1/(2c)");
  const double h = profile.step();
  double total = 0.0;
  auto piece = [&](double s0, double s1, double L0, double slope) {
    const double sg = s0 + s1 >= 0 ? 1.0 : -1.0;
    const double alpha = L0 - slope * s0;
    const double beta = slope - sg;
    total += alpha * (rho_antiderivative_log(c, s1) - rho_antiderivative_log(c, s0)) +
             beta * (rho_antiderivative_slog(c, s1) - rho_antiderivative_slog(c, s0));
  };
  for (const auto& seg : profile.segments()) {
    const double slope = seg.slope;
    const double L0 = static_cast<double>(profile.grid_height(seg.begin)) * h;
    const double s0 = seg.begin * h;
    const double s1 = seg.end * h;
    if (seg.begin < 0 && seg.end > 0) {
      piece(s0, 0.0, L0, slope);
      piece(0.0, s1, L0 - slope * s0, slope);
    } else {
      piece(s0, s1, L0, slope);
    }
  }
  return 2 * total;
}

double rho_quadrature(const std::function<double(double)>& L, std::span<const double> breakpoints, double c,
                      const QuadratureConfig& quad) {
  if (c == 0 || breakpoints.empty()) return 0.0;
  const auto [lo_it, hi_it] = std::minmax_element(breakpoints.begin(), breakpoints.end());
  std::vector<double> interior(breakpoints.begin(), breakpoints.end());
  interior.push_back(0.0);
  interior.push_back(-0.5 / c);
  auto f = [&](double s) {
    const double diff = L(s) - std::abs(s);
    return diff == 0 ? 0.0 : diff * std::log1p(2 * c * s);
  };
  return 2 * integrate_over(f, *lo_it, *hi_it, std::move(interior), quad);
}

double rho_shape(const ShapeParam& c, const QuadratureConfig& quad) {
  if (c.c() == 0) return 0.0;
  auto pts = shape_breakpoints(c);
  pts.push_back(c.support_left());
  return rho_quadrature([&](double s) { return omega_c(c, s); }, pts, c.c(), quad);
}

double m_series(double x, double tol) {
  if (!(std::abs(x) >= 1)) throw std::domain_error("m(x) needs |x| >= 1");
  if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
  const double inv = 1 / (x * x);
  double power = inv;
  double sum = 0.0;
  double carry = 0.0;  // Kahan compensation: x = 1 needs ~10^6 terms
  for (double k = 1;; k += 1) {
    const double term = power / (k * (k + 1) * (2 * k + 1));
    const double y = term - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
    power *= inv;
    const double next = power / ((k + 1) * (k + 2) * (2 * k + 3));
    if (next < tol * sum) break;
  }
  return sum;
}

double m_integer(std::int64_t k) {
  if (k < 1) throw std::domain_error("m_integer needs k >= 1");
  constexpr std::int64_t kCached = 4096;
  static const std::vector<double> cache = [] {
    std::vector<double> v(kCached + 1, 0.0);
    for (std::int64_t j = 1; j <= kCached; ++j) v[static_cast<std::size_t>(j)] = m_series(static_cast<double>(j));
    return v;
  }();
  if (k <= kCached) return cache[static_cast<std::size_t>(k)];
  return m_series(static_cast<double>(k));
}

double theta_hat(const Partition& lambda) {
  if (lambda.empty()) return 0.0;
  double total = 0.0;
  for (const auto& cell : lambda.cells()) total += m_integer(hook_length(lambda, cell));
  return total / std::sqrt(static_cast<double>(lambda.size()));
}

double rho_hat(const Partition& lambda, std::int64_t N) {
  if (lambda.empty()) return 0.0;
  if (lambda.height() > N) throw std::domain_error("rho_hat needs at most N rows");
  double total = 0.0;
  for (const auto& cell : lambda.cells()) total += m_integer(shifted_content(lambda, N, cell));
  return total / (2 * std::sqrt(static_cast<double>(lambda.size())));
}

double sobolev_sq_log_kernel(const DerivativeModel& f_prime, const QuadratureConfig& quad) {
  return -2.0 * log_energy(f_prime, quad);
}

double sobolev_sq_difference_quotient(const std::function<double(double)>& f,
                                      const std::function<double(double)>& f_prime, Window w,
                                      std::span<const double> breakpoints, const QuadratureConfig& quad) {
  if (!(w.b > w.a)) throw std::invalid_argument("empty window");
  const auto pts = breakpoints_within(w.a, w.b, breakpoints);
  const QuadratureConfig inner = tighter(quad, 1e-2);
  // Close to the diagonal the quotient is the mean of f' over [t, s]; a
  // 5-point Gauss-Legendre mean avoids the cancellation in f(s) - f(t).
  constexpr double kNear = 1e-6;
  constexpr std::array<double, 5> kNodes = {-0.906179845938664, -0.538469310105683, 0.0, 0.538469310105683,
                                            0.906179845938664};
  constexpr std::array<double, 5> kWeights = {0.236926885056189, 0.478628670499366, 0.568888888888889,
                                              0.478628670499366, 0.236926885056189};
  // `same_piece` allows the fallback only where f' is smooth on [t, s].
  auto quotient_sq = [&](double s, double t, bool same_piece) {
    const double d = s - t;
    double q = 0.0;
    if (same_piece && std::abs(d) < kNear) {
      for (std::size_t k = 0; k < kNodes.size(); ++k) q += kWeights[k] * f_prime(0.5 * (s + t) + 0.5 * d * kNodes[k]);
      q *= 0.5;
    } else {
      q = (f(s) - f(t)) / d;
    }
    return q * q;
  };
  double inside = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    for (std::size_t j = i; j + 1 < pts.size(); ++j) {
      auto outer = [&](double s) {
        auto g = [&](double t) { return quotient_sq(s, t, i == j); };
        if (i != j) return tanh_sinh(g, pts[j], pts[j + 1], inner).value;
        return tanh_sinh(g, pts[j], s, inner).value + tanh_sinh(g, s, pts[j + 1], inner).value;
      };
      const double block = tanh_sinh(outer, pts[i], pts[i + 1], quad).value;
      inside += i == j ? block : 2 * block;
    }
  }
  auto tail = [&](double s) {
    const double v = f(s);
    return v == 0 ? 0.0 : v * v * (1 / (s - w.a) + 1 / (w.b - s));
  };
  return inside + 2 * integrate_pieces(tail, pts, quad);
}

SobolevRoutes sobolev_routes(const Profile& profile, const ShapeParam& c, const QuadratureConfig& quad) {
  const Window w = default_window(c.c(), profile);
  SobolevRoutes out;
  out.log_kernel =
      sobolev_sq_log_kernel(difference(derivative_of(profile, w), derivative_of_shape(c, w)), quad);
  const auto& slopes = profile.slopes();
  auto profile_slope = [&](double X) {
    const double k = std::floor(X / profile.step());
    if (k < profile.left_index()) return -1.0;
    if (k >= profile.right_index()) return 1.0;
    return static_cast<double>(slopes[static_cast<std::size_t>(static_cast<int>(k) - profile.left_index())]);
  };
  auto f = [&](double s) { return profile(s) - omega_c(c, s); };
  auto f_prime = [&](double s) { return profile_slope(s) - omega_c_prime(c, s); };
  std::vector<double> pts = shape_breakpoints(c);
  pts.push_back(c.support_left());
  for (int k : profile.corner_indices()) pts.push_back(k * profile.step());
  // The squared difference quotient cancels to about 1e-11 near the
  // diagonal, so the nested rule is not asked for more than that.
  QuadratureConfig nested = quad;
  nested.abs_tol = std::max(nested.abs_tol, 1e-10);
  nested.rel_tol = std::max(nested.rel_tol, 1e-10);
  nested.max_levels = std::max(nested.max_levels, 14);
  out.difference_quotient = sobolev_sq_difference_quotient(f, f_prime, w, pts, nested);
  return out;
}

double h_term(const Profile& profile, const ShapeParam& p, const QuadratureConfig& quad, double h_prime_offset) {
  const double c = p.c();
  if (!(c > 0)) throw std::domain_error("the H-term needs c > 0");
  const double edge = -0.5 / c;
  if (profile.support_left() < edge * (1 + 1e-12)) throw std::domain_error("profile leaves |s| left of -1/(2c)");
  // Integrate in z = s - c/2 so that nodes stay strictly outside |z| <= 1.
  std::vector<double> corners;
  for (int k : profile.corner_indices()) corners.push_back(p.shift(k * profile.step()));
  corners.push_back(p.shift(edge));
  auto f = [&](double z) {
    const double s = p.unshift(z);
    const double diff = profile(s) - omega_c(p, s);
    if (diff == 0) return 0.0;
    return (H_tilde_prime(p, z) + h_prime_offset) * diff;
  };
  const double left_lo = p.shift(c > 1 ? edge : profile.support_left());
  const double left = integrate_over(f, left_lo, -1.0, corners, quad);
  const double right = integrate_over(f, 1.0, p.shift(profile.support_right()), corners, quad);
  return 2 * (left + right);
}

FunctionalReport prop31_decompose(const Partition& lambda, std::int64_t N, const QuadratureConfig& quad) {
  FunctionalReport r;
  r.n = lambda.size();
  r.N = N;
  r.c = check_n(r.n, N);
  if (lambda.height() > N) throw std::domain_error("diagram has more than N rows");
  const Profile profile(lambda);
  const ShapeParam p(r.c);
  r.theta = theta_profile(profile);
  r.rho = rho_profile(profile, r.c);
  r.theta_hat = theta_hat(lambda);
  r.rho_hat = rho_hat(lambda, N);
  const Window w = default_window(r.c, profile);
  r.sobolev_sq = sobolev_sq_log_kernel(difference(derivative_of(profile, w), derivative_of_shape(p, w)), quad);
  r.h_term = h_term(profile, p, quad);
  r.lhs = neg_log_measure_scaled(lambda, N, 40).to_double();
  const double root = std::sqrt(static_cast<double>(r.n));
  r.residual = root * (r.theta - r.rho) + r.theta_hat - r.rho_hat - r.lhs;
  return r;
}

IdentityCheck prop41_identity(const Profile& profile, std::int64_t N, const QuadratureConfig& quad,
                              double h_prime_offset) {
  const double c = check_n(profile.cells(), N);
  const std::int64_t rows = -profile.left_index();
  if (rows > N) throw ConditionViolation("L(X) = |X| fails for X <= -1/(2c): more than N rows");
  if (rows == N) throw ConditionViolation("L(X) < X + 1/c fails: the diagram has exactly N rows");
  const ShapeParam p(c);
  const Window w = default_window(c, profile);
  IdentityCheck out;
  out.lhs = theta_profile(profile) - rho_profile(profile, c);
  const auto f_prime = difference(derivative_of(profile, w), derivative_of_shape(p, w));
  out.sobolev_half = 0.5 * sobolev_sq_log_kernel(f_prime, quad);
  out.h_term = h_term(profile, p, quad, h_prime_offset);
  out.rhs = out.sobolev_half + out.h_term;
  return out;
}

IdentityCheck prop41_identity_shape(const ShapeParam& c, const QuadratureConfig& quad) {
  const Window w = default_window(c.c());
  const auto g = derivative_of_shape(c, w);
  IdentityCheck out;
  out.lhs = theta_window(g, quad) - rho_shape(c, quad);
  out.sobolev_half = 0.5 * sobolev_sq_log_kernel(difference(g, g), quad);
  out.h_term = 0.0;  // f vanishes identically
  out.rhs = out.sobolev_half + out.h_term;
  return out;
}

double alpha_constant(const ShapeParam& c, const QuadratureConfig& quad) {
  auto f = [&](double z) {
    const double d = sign(z) - 2 / kPi * std::atan2(z + c.c(), std::sqrt((1 - z) * (1 + z)));
    return d * d;
  };
  return 0.25 * integrate_over(f, -1.0, 1.0, {0.0}, quad);
}

double beta_constant() { return 2 * kPi / std::sqrt(6.0); }

double lemma_A_closed_form(double c) {
  double value = -c * c / 8;
  if (c > 1) value += 0.5 - 5 / (8 * c * c) + c * c / 8 - (1 + 1 / (2 * c * c)) * std::log(c);
  return value;
}

LemmaCheck lemma_A(const ShapeParam& c, const QuadratureConfig& quad) {
  if (!(c.c() > 0)) throw std::domain_error("A(c) is checked for c > 0");
  auto f = [&](double s) {
    const double diff = std::abs(s) - omega_c(c, s);
    return diff == 0 ? 0.0 : std::log1p(2 * c.c() * s) * diff;
  };
  auto interior = shape_breakpoints(c);
  interior.push_back(0.0);
  LemmaCheck out;
  out.quadrature = integrate_over(f, c.support_left(), c.support_right(), interior, quad);
  out.closed_form = lemma_A_closed_form(c.c());
  return out;
}

double I_closed_form(const ShapeParam& c, double s, Window w) {
  return phi1(w.a - s) + phi1(w.b - s) + G(c, s) - H_tilde(c, c.shift(s));
}

double I_quadrature(const ShapeParam& c, double s, Window w, const QuadratureConfig& quad) {
  auto f = [&](double t) { return phi(0, s - t) * omega_c_prime(c, t); };
  auto interior = shape_breakpoints(c);
  interior.push_back(s);
  return integrate_over(f, w.a, w.b, interior, quad);
}

LemmaCheck lemma_I(const ShapeParam& c, double s, Window w, const QuadratureConfig& quad) {
  if (!(c.c() > 0)) throw std::domain_error("I_c is checked for c > 0");
  require_window(c, w);
  if (!(s > w.a && s < w.b)) throw std::invalid_argument("s must lie inside the window");
  constexpr double kGap = 1e-6;
  auto pts = shape_breakpoints(c);
  pts.push_back(w.a);
  pts.push_back(w.b);
  for (double p : pts)
    if (std::abs(s - p) < kGap) s = s >= p ? p + kGap : p - kGap;
  LemmaCheck out;
  out.point = s;
  out.quadrature = I_quadrature(c, s, w, quad);
  out.closed_form = I_closed_form(c, s, w);
  return out;
}

double F3_closed_form(const ShapeParam& p, double x) {
  const double c = p.c();
  double value = sign(1 - c) / (c * c) * phi2(0.5 * (1 + c * c + 2 * c * x)) - (1 - c * c) / (2 * c) * x -
                 J_tilde(p, x) + (-3 + 4 * c * c + 3 * c * c * c * c) / (16 * c * c);
  if (c > 1) {
    const double shifted = x + p.alpha();
    value -= shifted * shifted * std::log(c);
  }
  return value;
}

LemmaCheck lemma_F3(const ShapeParam& c, double x, const QuadratureConfig& quad) {
  if (!(c.c() > 0)) throw std::domain_error("F3 is checked for c > 0");
  auto f = [&](double psi) {
    const double z = std::sin(psi);
    return phi2(x - z) * omega_c_second_weight(c, z);
  };
  std::vector<double> interior;
  if (std::abs(x) < 1) interior.push_back(std::asin(x));
  LemmaCheck out;
  out.point = x;
  out.quadrature = integrate_over(f, -kPi / 2, kPi / 2, interior, quad);
  out.closed_form = F3_closed_form(c, x);
  return out;
}

LemmaCheck lemma_intIOmega(const ShapeParam& c, Window w, const QuadratureConfig& quad) {
  if (!(c.c() > 0)) throw std::domain_error("the I_c pairing is checked for c > 0");
  require_window(c, w);
  const double cc = c.c();
  const auto interior = shape_breakpoints(c);
  const QuadratureConfig inner = tighter(quad, 1e-2);
  auto nested = [&](double s) { return I_quadrature(c, s, w, inner) * omega_c_prime(c, s); };
  auto g_part = [&](double s) { return G(c, s) * omega_c_prime(c, s); };
  auto h_part = [&](double s) { return H_tilde(c, c.shift(s)) * omega_c_prime(c, s); };
  LemmaCheck out;
  out.quadrature = integrate_over(nested, w.a, w.b, interior, quad);
  double rhs = 1 - cc * cc / 4 - 2 * phi2(w.b - w.a) + 2 * integrate_over(g_part, w.a, w.b, interior, inner) -
               2 * integrate_over(h_part, w.a, w.b, interior, inner);
  if (cc > 1) rhs += 1 - 5 / (4 * cc * cc) + cc * cc / 4 - (2 + 1 / (cc * cc)) * std::log(cc);
  out.closed_form = rhs;
  return out;
}

}  // namespace ytensor
