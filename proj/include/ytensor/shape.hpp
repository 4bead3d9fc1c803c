#pragma once

#include <stdexcept>

namespace ytensor {

/// Deformation parameter c >= 0, the limit of sqrt(n)/N.
///
/// Formulas are written both in s and in the shifted coordinate z = s - c/2
/// in which the curved part of the limit shape occupies |z| <= 1.
class ShapeParam {
 public:
  explicit ShapeParam(double c);
  double c() const { return c_; }
  double shift(double s) const { return s - 0.5 * c_; }
  double unshift(double z) const { return z + 0.5 * c_; }
  /// (1 + c^2) / (2c): the pole of the shifted H functions sits at -alpha.
  double alpha() const;
  /// Left end of the region where Omega_c differs from |s|.
  double support_left() const;
  double support_right() const { return 0.5 * c_ + 1.0; }
  double curved_left() const { return 0.5 * c_ - 1.0; }
  double curved_right() const { return 0.5 * c_ + 1.0; }

 private:
  double c_;
};

/// -1, 0 or +1.
inline double sign(double x) { return static_cast<double>((x > 0) - (x < 0)); }

/// arccosh|x| for |x| >= 1, accurate near |x| = 1.
double arccosh_abs(double x);

/// Logan-Shepp / Vershik-Kerov curve.
double omega(double X);

/// Biane's curve Omega_c(s).
double omega_c(const ShapeParam& c, double s);

/// Omega_c'(s). On kinks (the left end for c >= 1) the right derivative.
double omega_c_prime(const ShapeParam& c, double s);

/// Omega~_c''(z); 0 for |z| > 1. Throws std::domain_error at |z| = 1.
double omega_c_second(const ShapeParam& c, double z);

/// Omega~_c''(z) * sqrt(1 - z^2): the smooth weight left after z = sin(psi).
double omega_c_second_weight(const ShapeParam& c, double z);

/// phi_0 = -ln|2x|, phi_1 = x - x ln|2x|, phi_2 = 3/4 x^2 - 1/2 x^2 ln(2|x|).
/// k = 0 at x = 0 throws std::domain_error.
double phi(int k, double x);

/// H~_c(z); zero on |z| <= 1. Requires c > 0.
double H_tilde(const ShapeParam& c, double z);

/// H~_c'(z) for |z| > 1, excluding z = -(1+c^2)/(2c).
double H_tilde_prime(const ShapeParam& c, double z);

/// H~_c''(z) for |z| > 1, excluding z = -(1+c^2)/(2c).
double H_tilde_second(const ShapeParam& c, double z);

/// G_c(s) = phi_1((1+2cs)/2)/c - (1-c^2)/(2c). Requires c > 0.
double G(const ShapeParam& c, double s);

/// J~_c(z), an antiderivative of H~_c vanishing on |z| <= 1. Requires c > 0.
double J_tilde(const ShapeParam& c, double z);

}  // namespace ytensor
