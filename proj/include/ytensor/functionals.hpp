#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "ytensor/partition.hpp"
#include "ytensor/profile.hpp"
#include "ytensor/quadrature.hpp"
#include "ytensor/shape.hpp"

namespace ytensor {

/// Accuracy used internally by the identity checks; far below every
/// tolerance the checks are judged against.
QuadratureConfig tight_quadrature();

/// Constant value on [begin, end), real coordinates.
struct StepPiece {
  double begin = 0;
  double end = 0;
  double value = 0;
};

/// A derivative g on the window [a, b]: a sum of constant pieces plus
/// `smooth_weight` times Omega_c' restricted to the curved part
/// [c/2 - 1, c/2 + 1]. Covers L', Omega_c' and their differences.
struct DerivativeModel {
  double a = 0;
  double b = 0;
  std::vector<StepPiece> steps;
  double smooth_weight = 0;
  double c = 0;
};

/// Window [a, b] with a < min(c/2 - 1, -1/(2c)) and b > c/2 + 1, widened so
/// it also contains the support of `profile` when given.
struct Window {
  double a;
  double b;
};
Window default_window(double c);
Window default_window(double c, const Profile& profile);

DerivativeModel derivative_of(const Profile& profile, Window w);
DerivativeModel derivative_of_shape(const ShapeParam& c, Window w);
/// first - second; both must share the window and c.
DerivativeModel difference(const DerivativeModel& first, const DerivativeModel& second);
DerivativeModel scaled(const DerivativeModel& g, double factor);

/// Double integral of ln|2(s - t)| g(s) g(t) over the window.
double log_energy(const DerivativeModel& g, const QuadratureConfig& quad);

/// Hook integral of a lattice profile: sum over ascending segments (t) and
/// descending segments (s) to their right of the exact rectangle integral of
/// 4 ln(2(s - t)), written with the second antiderivative phi_2.
double theta_profile(const Profile& profile);

/// Same hook integral for an arbitrary chunking of a lattice slope sequence
/// (pieces in real coordinates, value +1 or -1).
double theta_segments(std::span<const StepPiece> pieces);

/// Hook integral of a general boundary from its derivative on a window:
/// 1 - 2 phi_2(b-a) - 2 int g phi_1(b-t) + 2 int g phi_1(t-a) - log_energy(g).
double theta_window(const DerivativeModel& g, const QuadratureConfig& quad);

double theta_shape(const ShapeParam& c, const QuadratureConfig& quad);

/// rho = 2 int ln(1 + 2 c s) (L(s) - |s|) ds in closed form per segment.
/// Throws std::domain_error if L differs from |s| left of -1/(2c).
double rho_profile(const Profile& profile, double c);

/// rho for a boundary given as a callable, by quadrature over the breakpoints.
double rho_quadrature(const std::function<double(double)>& L, std::span<const double> breakpoints, double c,
                      const QuadratureConfig& quad);

double rho_shape(const ShapeParam& c, const QuadratureConfig& quad);

/// sum_{k>=1} x^{-2k} / (k (k+1) (2k+1)), stopped once the next term falls
/// below tol times the running sum. Accepts |x| >= 1.
double m_series(double x, double tol = 1e-17);

/// m at a positive integer, memoized for small arguments.
double m_integer(std::int64_t k);

double theta_hat(const Partition& lambda);
double rho_hat(const Partition& lambda, std::int64_t N);

/// ||f||^2 in the 1/2-Sobolev seminorm via -2 * log_energy(f').
double sobolev_sq_log_kernel(const DerivativeModel& f_prime, const QuadratureConfig& quad);

/// ||f||^2 by the difference-quotient double integral. f must vanish outside
/// (a, b); `breakpoints` must contain every kink of f. The tails outside the
/// window are integrated analytically.
double sobolev_sq_difference_quotient(const std::function<double(double)>& f,
                                      const std::function<double(double)>& f_prime, Window w,
                                      std::span<const double> breakpoints, const QuadratureConfig& quad);

struct SobolevRoutes {
  double log_kernel = 0;
  double difference_quotient = 0;
};

/// ||L - Omega_c||^2 by both routes. The difference-quotient route is
/// quadratic in the number of corners and meant for small diagrams; its
/// tolerances are floored at 1e-10.
SobolevRoutes sobolev_routes(const Profile& profile, const ShapeParam& c, const QuadratureConfig& quad);

/// 2 int_{|s - c/2| > 1} H~_c'(s - c/2) f(s) ds with f = L - Omega_c.
/// `h_prime_offset` is added to H~_c' and exists for fault-injection tests.
double h_term(const Profile& profile, const ShapeParam& c, const QuadratureConfig& quad,
              double h_prime_offset = 0.0);

class ConditionViolation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct FunctionalReport {
  std::int64_t n = 0;
  std::int64_t N = 0;
  double c = 0;
  double theta = 0;
  double rho = 0;
  double theta_hat = 0;
  double rho_hat = 0;
  double sobolev_sq = 0;  // ||f||^2, not halved
  double h_term = 0;
  double lhs = 0;       // -ln P_N^n(lambda) / sqrt(n)
  double residual = 0;  // sqrt(n)(theta - rho) + theta_hat - rho_hat - lhs
};

/// Terms of the exact decomposition of -ln P_N^n(lambda)/sqrt(n).
FunctionalReport prop31_decompose(const Partition& lambda, std::int64_t N, const QuadratureConfig& quad);

struct IdentityCheck {
  double lhs = 0;
  double rhs = 0;
  double sobolev_half = 0;  // (1/2)||f||^2
  double h_term = 0;
  double abs_err() const { return lhs > rhs ? lhs - rhs : rhs - lhs; }
};

/// theta - rho against (1/2)||L - Omega_c||^2 + h_term at c = sqrt(n)/N.
/// Throws ConditionViolation when the profile touches the line X + 1/c or
/// leaves |X| left of -1/(2c).
IdentityCheck prop41_identity(const Profile& profile, std::int64_t N, const QuadratureConfig& quad,
                              double h_prime_offset = 0.0);
IdentityCheck prop41_identity_shape(const ShapeParam& c, const QuadratureConfig& quad);

/// (1/4) int_{-1}^{1} (sign z - Omega~_c'(z))^2 dz.
double alpha_constant(const ShapeParam& c, const QuadratureConfig& quad);

/// 2 pi / sqrt 6.
double beta_constant();

/// Pair of independently computed values for one closed-form identity.
struct LemmaCheck {
  double quadrature = 0;
  double closed_form = 0;
  double point = 0;  // evaluation point actually used, where applicable
  double abs_err() const { return quadrature > closed_form ? quadrature - closed_form : closed_form - quadrature; }
};

/// A(c) = int_a^b ln(1 + 2cs)(|s| - Omega_c(s)) ds.
LemmaCheck lemma_A(const ShapeParam& c, const QuadratureConfig& quad);
double lemma_A_closed_form(double c);

/// I_c(s) = int_a^b phi_0(s - t) Omega_c'(t) dt against
/// phi_1(a - s) + phi_1(b - s) + G_c(s) - H_c(s). An s within 1e-6 of a
/// breakpoint of the integrand is moved 1e-6 away from it.
LemmaCheck lemma_I(const ShapeParam& c, double s, Window w, const QuadratureConfig& quad);
double I_closed_form(const ShapeParam& c, double s, Window w);
double I_quadrature(const ShapeParam& c, double s, Window w, const QuadratureConfig& quad);

/// int_{-1}^{1} phi_2(x - z) Omega~_c''(z) dz against its closed form.
LemmaCheck lemma_F3(const ShapeParam& c, double x, const QuadratureConfig& quad);
double F3_closed_form(const ShapeParam& c, double x);

/// int_a^b I_c(s) Omega_c'(s) ds, nested quadrature against the closed form.
LemmaCheck lemma_intIOmega(const ShapeParam& c, Window w, const QuadratureConfig& quad);

}  // namespace ytensor
