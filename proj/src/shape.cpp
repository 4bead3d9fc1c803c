#include "ytensor/shape.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace ytensor {
namespace {

constexpr double kPi = std::numbers::pi;

void require_positive(const ShapeParam& c, const char* what) {
  if (!(c.c() > 0)) throw std::domain_error(std::string(what) + " is only defined for c > 0");
}

/// Distances of s to both ends of the curved part [c/2 - 1, c/2 + 1]. Every
/// curved-part formula is written through them so that the region test and
/// the formula agree to the last bit near the ends.
struct CurvedOffsets {
  double e;  // s - (c/2 - 1)
  double f;  // (c/2 + 1) - s
  bool inside() const { return e >= 0 && f >= 0; }
  /// sqrt(4 - (2s - c)^2)
  double width() const { return 2 * std::sqrt(e * f); }
};

CurvedOffsets offsets(double c, double s) { return {s - (0.5 * c - 1.0), (0.5 * c + 1.0) - s}; }

/// 2s + c, exact zero at the left end when c = 1.
double slope_numerator(double c, const CurvedOffsets& o) { return 2 * o.e + 2 * (c - 1); }

/// arccosh|(1 + alpha z)/(z + alpha)| for |z| > 1, written so that neither the
/// argument nor its distance to 1 suffers cancellation.
double ratio_arccosh(double alpha, double z) {
  const double num = std::abs(1 + alpha * z);
  const double den = std::abs(z + alpha);
  const double root = std::sqrt(std::max(0.0, (alpha - 1) * (alpha + 1) * (z - 1) * (z + 1)));
  // arccosh(y) = ln(y + sqrt(y^2 - 1)) with y = num/den.
  return std::log1p((num - den + root) / den);
}

}  // namespace

ShapeParam::ShapeParam(double c) : c_(c) {
  if (!(c >= 0) || !std::isfinite(c)) throw std::invalid_argument("shape parameter c must be finite and >= 0");
}

double ShapeParam::alpha() const {
  if (!(c_ > 0)) throw std::domain_error("alpha is undefined at c = 0");
  return (1 + c_ * c_) / (2 * c_);
}

double ShapeParam::support_left() const {
  if (c_ > 1) return -0.5 / c_;
  return 0.5 * c_ - 1.0;
}

double arccosh_abs(double x) {
  const double t = std::abs(x) - 1;
  if (t < 0) throw std::domain_error("arccosh needs |x| >= 1");
  return std::log1p(t + std::sqrt(t * (t + 2)));
}

double omega(double X) {
  if (std::abs(X) > 1) return std::abs(X);
  return 2 / kPi * (std::sqrt((1 - X) * (1 + X)) + X * std::asin(X));
}

double omega_c(const ShapeParam& p, double s) {
  const double c = p.c();
  const CurvedOffsets o = offsets(c, s);
  if (o.inside()) {
    // h(c, s) with arcsin/arccos rewritten through atan2; the arccos term
    // divided by 2c then tends to W/4 as c -> 0, recovering h(0, s).
    const double W = o.width();
    const double first = s * std::atan2(slope_numerator(c, o), W);
    // At c = 1 both atan2 arguments vanish together at the left end; dividing
    // out 2 sqrt(e) leaves atan2(sqrt f, sqrt e), which tends to pi/2 there.
    double middle = 0.25 * W;
    if (c == 1) middle = 0.5 * std::atan2(std::sqrt(o.f), std::sqrt(o.e));
    else if (c != 0) middle = std::atan2(c * W, 2 * (1 - c + c * o.e)) / (2 * c);
    return 2 / kPi * (first + middle + 0.25 * W);
  }
  if (c > 1 && 2 * s >= -1 / c && o.e < 0) return s + 1 / c;
  return std::abs(s);
}

double omega_c_prime(const ShapeParam& p, double s) {
  const double c = p.c();
  const CurvedOffsets o = offsets(c, s);
  if (o.e > 0 && o.f > 0) return 2 / kPi * std::atan2(slope_numerator(c, o), o.width());
  if (c > 1 && 2 * s >= -1 / c && o.e <= 0) return 1.0;
  if (o.f == 0) return 1.0;
  if (o.e == 0) return c > 1 ? 1.0 : (c == 1 ? 0.0 : -1.0);
  return s > 0 ? 1.0 : -1.0;
}

double omega_c_second_weight(const ShapeParam& p, double z) {
  const double c = p.c();
  if (c == 1) return 1 / kPi;  // (1+z)/(2+2z) cancels identically
  return 2 * (1 + c * z) / (kPi * (1 + c * c + 2 * c * z));
}

double omega_c_second(const ShapeParam& p, double z) {
  if (std::abs(z) > 1) return 0.0;
  if (std::abs(z) == 1) throw std::domain_error("Omega_c'' is not integrable pointwise at |z| = 1");
  return omega_c_second_weight(p, z) / std::sqrt((1 - z) * (1 + z));
}

double phi(int k, double x) {
  switch (k) {
    case 0:
      if (x == 0) throw std::domain_error("phi_0 is singular at 0");
      return -std::log(std::abs(2 * x));
    case 1:
      return x == 0 ? 0.0 : x - x * std::log(std::abs(2 * x));
    case 2:
      return x == 0 ? 0.0 : 0.75 * x * x - 0.5 * x * x * std::log(2 * std::abs(x));
    default:
      throw std::invalid_argument("phi is defined for k = 0, 1, 2");
  }
}

double H_tilde(const ShapeParam& p, double z) {
  require_positive(p, "H~_c");
  if (std::abs(z) <= 1) return 0.0;
  const double c = p.c();
  const double alpha = p.alpha();
  double value = (z - (1 - c * c) / (2 * c)) * arccosh_abs(z) - sign(z) * std::sqrt((z - 1) * (z + 1));
  const double s = sign(1 - c);
  if (s != 0 && z + alpha != 0) value += s * (z + alpha) * ratio_arccosh(alpha, z);
  return value;
}

double H_tilde_prime(const ShapeParam& p, double z) {
  require_positive(p, "H~_c'");
  if (std::abs(z) <= 1) throw std::domain_error("H~_c' is evaluated only for |z| > 1");
  const double alpha = p.alpha();
  const double s = sign(1 - p.c());
  if (s != 0 && z + alpha == 0) throw std::domain_error("H~_c' is singular at z = -(1+c^2)/(2c)");
  double value = arccosh_abs(z);
  if (s != 0) value += s * ratio_arccosh(alpha, z);
  return value;
}

double H_tilde_second(const ShapeParam& p, double z) {
  require_positive(p, "H~_c''");
  if (std::abs(z) <= 1) throw std::domain_error("H~_c'' is evaluated only for |z| > 1");
  const double alpha = p.alpha();
  if (z + alpha == 0) throw std::domain_error("H~_c'' is singular at z = -(1+c^2)/(2c)");
  return sign(z) * (z + 1 / p.c()) / ((alpha + z) * std::sqrt((z - 1) * (z + 1)));
}

double G(const ShapeParam& p, double s) {
  require_positive(p, "G_c");
  const double c = p.c();
  return phi(1, 0.5 * (1 + 2 * c * s)) / c - (1 - c * c) / (2 * c);
}

double J_tilde(const ShapeParam& p, double z) {
  require_positive(p, "J~_c");
  if (std::abs(z) <= 1) return 0.0;
  const double c = p.c();
  const double alpha = p.alpha();
  const double shifted = z + (c * c - 1) / (2 * c);
  double value = 0.5 * (1 - 1 / (2 * c * c) + shifted * shifted) * arccosh_abs(z) +
                 sign(z) * (1 - c * c - 3 * c * z) / (4 * c) * std::sqrt((z - 1) * (z + 1));
  const double s = sign(1 - c);
  if (s != 0 && z + alpha != 0) value += s * 0.5 * (z + alpha) * (z + alpha) * ratio_arccosh(alpha, z);
  return value;
}

}  // namespace ytensor
