#ifndef DIMERS_BIGFLOAT_HPP
#define DIMERS_BIGFLOAT_HPP

#include <mpfr.h>

#include <cmath>
#include <cstdio>
#include <string>
#include <utility>

#include "dimers/exact.hpp"

namespace dimers {

// Working precision, tracked in bits. Conversions from decimal digits carry
// 64 guard bits so that long accumulations stay below the last digit.
struct Precision {
  long bits = 117;  // digits(15) + guard

  static Precision from_bits(long b) { return Precision{b < MPFR_PREC_MIN ? long(MPFR_PREC_MIN) : b}; }
  static Precision digits(int d) {
    double b = static_cast<double>(d) * 3.3219280948873623;
    return from_bits(static_cast<long>(b) + 64);
  }
};

// Value-semantic arbitrary precision real on top of mpfr_t. Every value
// carries its own precision; binary operations use the wider operand's.
class BigFloat {
 public:
  BigFloat() { mpfr_init2(v_, MPFR_PREC_MIN); mpfr_set_nan(v_); }
  explicit BigFloat(Precision p) { mpfr_init2(v_, p.bits); mpfr_set_nan(v_); }
  BigFloat(long value, Precision p) { mpfr_init2(v_, p.bits); mpfr_set_si(v_, value, MPFR_RNDN); }
  BigFloat(double value, Precision p) { mpfr_init2(v_, p.bits); mpfr_set_d(v_, value, MPFR_RNDN); }
  BigFloat(const Rational& value, Precision p) {
    mpfr_init2(v_, p.bits);
    mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
  }
  BigFloat(const Int& value, Precision p) {
    mpfr_init2(v_, p.bits);
    mpfr_set_z(v_, value.get_mpz_t(), MPFR_RNDN);
  }

  BigFloat(const BigFloat& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  BigFloat(BigFloat&& o) noexcept { mpfr_init2(v_, MPFR_PREC_MIN); mpfr_swap(v_, o.v_); }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  long prec_bits() const { return mpfr_get_prec(v_); }
  Precision prec() const { return Precision::from_bits(prec_bits()); }

  static BigFloat pi(Precision p) {
    BigFloat r(p);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  std::string str(int significant_digits) const {
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Re", significant_digits - 1, v_);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
  }

  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    BigFloat r(wider(a, b));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    BigFloat r(wider(a, b));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat r(wider(a, b));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    BigFloat r(wider(a, b));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  BigFloat operator-() const {
    BigFloat r(prec());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }

  BigFloat& operator+=(const BigFloat& b) { mpfr_add(v_, v_, b.v_, MPFR_RNDN); return *this; }
  BigFloat& operator-=(const BigFloat& b) { mpfr_sub(v_, v_, b.v_, MPFR_RNDN); return *this; }
  BigFloat& operator*=(const BigFloat& b) { mpfr_mul(v_, v_, b.v_, MPFR_RNDN); return *this; }
  BigFloat& operator/=(const BigFloat& b) { mpfr_div(v_, v_, b.v_, MPFR_RNDN); return *this; }

  friend BigFloat operator*(const BigFloat& a, long b) {
    BigFloat r(a.prec());
    mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator*(long a, const BigFloat& b) { return b * a; }
  friend BigFloat operator/(const BigFloat& a, long b) {
    BigFloat r(a.prec());
    mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
  }

  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend bool operator!=(const BigFloat& a, const BigFloat& b) { return !(a == b); }
  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }

  friend BigFloat sqrt(const BigFloat& a) { return unary(a, mpfr_sqrt); }
  friend BigFloat sin(const BigFloat& a) { return unary(a, mpfr_sin); }
  friend BigFloat cos(const BigFloat& a) { return unary(a, mpfr_cos); }
  friend BigFloat tanh(const BigFloat& a) { return unary(a, mpfr_tanh); }
  friend BigFloat sinh(const BigFloat& a) { return unary(a, mpfr_sinh); }
  friend BigFloat cosh(const BigFloat& a) { return unary(a, mpfr_cosh); }
  friend BigFloat exp(const BigFloat& a) { return unary(a, mpfr_exp); }
  friend BigFloat log(const BigFloat& a) { return unary(a, mpfr_log); }
  friend BigFloat asinh(const BigFloat& a) { return unary(a, mpfr_asinh); }
  friend BigFloat abs(const BigFloat& a) { return unary(a, mpfr_abs); }

  friend BigFloat pow_int(const BigFloat& a, long e) {
    BigFloat r(a.prec());
    mpfr_pow_si(r.v_, a.v_, e, MPFR_RNDN);
    return r;
  }

  // 2^e at the given precision, exact.
  static BigFloat exp2i(long e, Precision p) {
    BigFloat r(1L, p);
    mpfr_mul_2si(r.v_, r.v_, e, MPFR_RNDN);
    return r;
  }

  mpfr_srcptr raw() const { return v_; }

 private:
  using UnaryFn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);
  static BigFloat unary(const BigFloat& a, UnaryFn fn) {
    BigFloat r(a.prec());
    fn(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  static Precision wider(const BigFloat& a, const BigFloat& b) {
    return Precision::from_bits(std::max(mpfr_get_prec(a.v_), mpfr_get_prec(b.v_)));
  }

  mpfr_t v_;
};

}  // namespace dimers

#endif
