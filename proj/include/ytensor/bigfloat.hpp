#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace ytensor {

/// Owning MPFR value with a fixed precision chosen at construction.
class BigFloat {
 public:
  explicit BigFloat(unsigned digits10 = 50);
  BigFloat(const mpz_class& value, unsigned digits10);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(BigFloat other) noexcept;
  ~BigFloat();

  unsigned digits10() const { return digits10_; }
  double to_double() const;
  /// Scientific notation with `digits` significant digits.
  std::string to_string(unsigned digits) const;

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }

  friend BigFloat log(const BigFloat& x);
  friend BigFloat exp(const BigFloat& x);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, double b);
  friend BigFloat operator-(const BigFloat& a);
  friend BigFloat abs(const BigFloat& x);
  friend BigFloat sqrt_of(unsigned long n, unsigned digits10);

 private:
  unsigned digits10_;
  mpfr_t value_;
};

/// sqrt(n) at the given precision.
BigFloat sqrt_of(unsigned long n, unsigned digits10);

/// Exact rational to high precision.
BigFloat to_bigfloat(const mpq_class& value, unsigned digits10);

}  // namespace ytensor
