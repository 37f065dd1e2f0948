#pragma once

// Thin RAII layer over MPFR.  Binary operations produce a result at the
// smaller of the two operand precisions, so precision only ever degrades.

#include <mpfr.h>
#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace wj {

using BigInt = mpz_class;
using BigRational = mpq_class;

using prec_t = mpfr_prec_t;

class BigFloat {
 public:
  explicit BigFloat(prec_t prec = 64);
  BigFloat(long value, prec_t prec);
  BigFloat(const BigInt& value, prec_t prec);
  BigFloat(const BigRational& value, prec_t prec);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  static BigFloat pi(prec_t prec);

  prec_t prec() const { return mpfr_get_prec(v_); }
  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  // Same value rounded to a new precision.
  BigFloat with_prec(prec_t prec) const;

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  // Exponent e with 2^(e-1) <= |x| < 2^e; very negative for zero.
  long exponent() const;
  BigInt round_to_integer() const;
  std::string to_string(int digits = 0) const;

  BigFloat operator-() const;
  BigFloat& operator+=(const BigFloat& o);
  BigFloat& operator-=(const BigFloat& o);
  BigFloat& operator*=(const BigFloat& o);
  BigFloat& operator/=(const BigFloat& o);

  friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
  friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
  friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
  friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

 private:
  mpfr_t v_;
};

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat cbrt(const BigFloat& x);
BigFloat root(const BigFloat& x, unsigned long k);
BigFloat exp(const BigFloat& x);
BigFloat cos(const BigFloat& x);
BigFloat sin(const BigFloat& x);
BigFloat floor(const BigFloat& x);
BigFloat ldexp(const BigFloat& x, long e);

class PrecComplex {
 public:
  explicit PrecComplex(prec_t prec = 64) : re_(prec), im_(prec) {}
  PrecComplex(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {}
  PrecComplex(long re, prec_t prec) : re_(re, prec), im_(prec) {}

  const BigFloat& re() const { return re_; }
  const BigFloat& im() const { return im_; }
  prec_t prec() const { return re_.prec() < im_.prec() ? re_.prec() : im_.prec(); }

  PrecComplex with_prec(prec_t prec) const { return {re_.with_prec(prec), im_.with_prec(prec)}; }

  PrecComplex conj() const { return {re_, -im_}; }
  BigFloat norm() const { return re_ * re_ + im_ * im_; }
  BigFloat abs() const;
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

  PrecComplex operator-() const { return {-re_, -im_}; }
  PrecComplex& operator+=(const PrecComplex& o);
  PrecComplex& operator-=(const PrecComplex& o);
  PrecComplex& operator*=(const PrecComplex& o);
  PrecComplex& operator/=(const PrecComplex& o);
  PrecComplex& operator*=(const BigFloat& s);

  friend PrecComplex operator+(PrecComplex a, const PrecComplex& b) { return a += b; }
  friend PrecComplex operator-(PrecComplex a, const PrecComplex& b) { return a -= b; }
  friend PrecComplex operator*(PrecComplex a, const PrecComplex& b) { return a *= b; }
  friend PrecComplex operator/(PrecComplex a, const PrecComplex& b) { return a /= b; }
  friend PrecComplex operator*(PrecComplex a, const BigFloat& s) { return a *= s; }

  // Bitwise equality of both components (used to check that parallel and
  // serial evaluation agree exactly).
  friend bool operator==(const PrecComplex& a, const PrecComplex& b) {
    return a.prec() == b.prec() && a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  BigFloat re_;
  BigFloat im_;
};

PrecComplex pow(const PrecComplex& z, unsigned long k);
// exp(2*pi*i*z)
PrecComplex exp_2pi_i(const PrecComplex& z);

// |a - b| / |b| as a binary exponent bound: returns the largest e such
// that the relative error is below 2^e (roughly log2 of the error).
double log2_relative_error(const PrecComplex& a, const PrecComplex& b);
double log2_abs(const PrecComplex& z);

}  // namespace wj
