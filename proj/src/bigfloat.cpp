#include "ytensor/bigfloat.hpp"

#include <cmath>
#include <utility>

namespace ytensor {
namespace {

mpfr_prec_t bits_for(unsigned digits10) {
  return static_cast<mpfr_prec_t>(std::ceil(digits10 * 3.3219280948873623)) + 16;
}

}  // namespace

BigFloat::BigFloat(unsigned digits10) : digits10_(digits10) {
  mpfr_init2(value_, bits_for(digits10));
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(const mpz_class& value, unsigned digits10) : BigFloat(digits10) {
  mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other) : digits10_(other.digits10_) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept : BigFloat(other.digits10_) {
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(BigFloat other) noexcept {
  mpfr_swap(value_, other.value_);
  std::swap(digits10_, other.digits10_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

double BigFloat::to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

std::string BigFloat::to_string(unsigned digits) const {
  const std::string fmt = "%." + std::to_string(digits > 0 ? digits - 1 : 0) + "Re";
  char* raw = nullptr;
  mpfr_asprintf(&raw, fmt.c_str(), value_);
  std::string out(raw);
  mpfr_free_str(raw);
  return out;
}

BigFloat log(const BigFloat& x) {
  BigFloat r(x.digits10_);
  mpfr_log(r.value_, x.value_, MPFR_RNDN);
  return r;
}

BigFloat exp(const BigFloat& x) {
  BigFloat r(x.digits10_);
  mpfr_exp(r.value_, x.value_, MPFR_RNDN);
  return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat r(std::max(a.digits10_, b.digits10_));
  mpfr_sub(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat r(std::max(a.digits10_, b.digits10_));
  mpfr_mul(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

BigFloat operator/(const BigFloat& a, double b) {
  BigFloat r(a.digits10_);
  mpfr_div_d(r.value_, a.value_, b, MPFR_RNDN);
  return r;
}

BigFloat operator-(const BigFloat& a) {
  BigFloat r(a.digits10_);
  mpfr_neg(r.value_, a.value_, MPFR_RNDN);
  return r;
}

BigFloat abs(const BigFloat& x) {
  BigFloat r(x.digits10_);
  mpfr_abs(r.value_, x.value_, MPFR_RNDN);
  return r;
}

BigFloat sqrt_of(unsigned long n, unsigned digits10) {
  BigFloat r(digits10);
  mpfr_sqrt_ui(r.value_, n, MPFR_RNDN);
  return r;
}

BigFloat to_bigfloat(const mpq_class& value, unsigned digits10) {
  BigFloat r(digits10);
  mpfr_set_q(r.get(), value.get_mpq_t(), MPFR_RNDN);
  return r;
}

}  // namespace ytensor
