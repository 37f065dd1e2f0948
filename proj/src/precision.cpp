#include "wj/precision.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>
#include <vector>

namespace wj {

namespace {

prec_t min_prec(const BigFloat& a, const BigFloat& b) { return std::min(a.prec(), b.prec()); }

}  // namespace

BigFloat::BigFloat(prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(long value, prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_si(v_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const BigInt& value, prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_z(v_, value.get_mpz_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigRational& value, prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(v_, other.prec());
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(v_, other.prec());
  mpfr_swap(v_, other.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(v_, other.prec());
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::pi(prec_t prec) {
  BigFloat r(prec);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::with_prec(prec_t prec) const {
  BigFloat r(prec);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

long BigFloat::exponent() const {
  if (mpfr_zero_p(v_)) return std::numeric_limits<long>::min() / 2;
  return mpfr_get_exp(v_);
}

BigInt BigFloat::round_to_integer() const {
  BigInt r;
  mpfr_get_z(r.get_mpz_t(), v_, MPFR_RNDN);
  return r;
}

std::string BigFloat::to_string(int digits) const {
  char* buf = nullptr;
  if (digits <= 0) digits = static_cast<int>(static_cast<double>(prec()) * 0.30103) + 1;
  mpfr_asprintf(&buf, "%.*Rg", digits, v_);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

BigFloat BigFloat::operator-() const {
  BigFloat r(prec());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat& BigFloat::operator+=(const BigFloat& o) {
  BigFloat r(min_prec(*this, o));
  mpfr_add(r.v_, v_, o.v_, MPFR_RNDN);
  return *this = std::move(r);
}

BigFloat& BigFloat::operator-=(const BigFloat& o) {
  BigFloat r(min_prec(*this, o));
  mpfr_sub(r.v_, v_, o.v_, MPFR_RNDN);
  return *this = std::move(r);
}

BigFloat& BigFloat::operator*=(const BigFloat& o) {
  BigFloat r(min_prec(*this, o));
  mpfr_mul(r.v_, v_, o.v_, MPFR_RNDN);
  return *this = std::move(r);
}

BigFloat& BigFloat::operator/=(const BigFloat& o) {
  BigFloat r(min_prec(*this, o));
  mpfr_div(r.v_, v_, o.v_, MPFR_RNDN);
  return *this = std::move(r);
}

BigFloat abs(const BigFloat& x) {
  BigFloat r(x.prec());
  mpfr_abs(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigFloat sqrt(const BigFloat& x) {
  BigFloat r(x.prec());
  mpfr_sqrt(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigFloat cbrt(const BigFloat& x) {
  BigFloat r(x.prec());
  mpfr_cbrt(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigFloat root(const BigFloat& x, unsigned long k) {
  BigFloat r(x.prec());
  mpfr_rootn_ui(r.raw(), x.raw(), k, MPFR_RNDN);
  return r;
}

BigFloat exp(const BigFloat& x) {
  BigFloat r(x.prec());
  mpfr_exp(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigFloat cos(const BigFloat& x) {
  BigFloat r(x.prec());
  mpfr_cos(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigFloat sin(const BigFloat& x) {
  BigFloat r(x.prec());
  mpfr_sin(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigFloat floor(const BigFloat& x) {
  BigFloat r(x.prec());
  mpfr_floor(r.raw(), x.raw());
  return r;
}

BigFloat ldexp(const BigFloat& x, long e) {
  BigFloat r(x.prec());
  mpfr_mul_2si(r.raw(), x.raw(), e, MPFR_RNDN);
  return r;
}

BigFloat PrecComplex::abs() const { return sqrt(norm()); }

PrecComplex& PrecComplex::operator+=(const PrecComplex& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

PrecComplex& PrecComplex::operator-=(const PrecComplex& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

PrecComplex& PrecComplex::operator*=(const PrecComplex& o) {
  BigFloat re = re_ * o.re_ - im_ * o.im_;
  BigFloat im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

PrecComplex& PrecComplex::operator/=(const PrecComplex& o) {
  BigFloat n = o.norm();
  BigFloat re = (re_ * o.re_ + im_ * o.im_) / n;
  BigFloat im = (im_ * o.re_ - re_ * o.im_) / n;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

PrecComplex& PrecComplex::operator*=(const BigFloat& s) {
  re_ *= s;
  im_ *= s;
  return *this;
}

PrecComplex pow(const PrecComplex& z, unsigned long k) {
  PrecComplex result(1, z.prec());
  PrecComplex base = z;
  while (k > 0) {
    if (k & 1UL) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

PrecComplex exp_2pi_i(const PrecComplex& z) {
  const prec_t p = z.prec();
  BigFloat two_pi = ldexp(BigFloat::pi(p), 1);
  BigFloat modulus = exp(-(two_pi * z.im()));
  BigFloat angle = two_pi * z.re();
  return {modulus * cos(angle), modulus * sin(angle)};
}

double log2_abs(const PrecComplex& z) {
  if (z.is_zero()) return -std::numeric_limits<double>::infinity();
  BigFloat a = z.abs();
  long e = 0;
  double m = mpfr_get_d_2exp(&e, a.raw(), MPFR_RNDN);
  return std::log2(m) + static_cast<double>(e);
}

double log2_relative_error(const PrecComplex& a, const PrecComplex& b) {
  return log2_abs(a - b) - log2_abs(b);
}

}  // namespace wj
