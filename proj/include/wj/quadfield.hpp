#pragma once

// Exact arithmetic in imaginary quadratic fields Q(sqrt(d)).

#include <cstdint>
#include <string>
#include <string_view>

#include "wj/error.hpp"
#include "wj/precision.hpp"

namespace wj {

BigRational make_rational(const BigInt& num, const BigInt& den);
std::string to_string(const BigRational& q);
BigRational parse_rational(std::string_view text);

// Q(sqrt(d)) with d < 0 squarefree; dK is the fundamental discriminant.
struct FieldTag {
  std::int64_t d = -1;
  std::int64_t dK = -4;

  static FieldTag from_d(std::int64_t d);

  friend bool operator==(const FieldTag&, const FieldTag&) = default;
};

// Splits a negative discriminant D = f^2 * dK.  Throws InvalidDiscriminant
// unless D < 0 and D = 0, 1 mod 4.
struct DiscriminantSplit {
  FieldTag field;
  BigInt conductor;
};
DiscriminantSplit split_discriminant(const BigInt& D);

struct IntTriple {
  BigInt a, b, c;
  friend bool operator==(const IntTriple&, const IntTriple&) = default;
};

// x + y*sqrt(d)
class QuadElem {
 public:
  explicit QuadElem(FieldTag field) : field_(field) {}
  QuadElem(FieldTag field, BigRational x, BigRational y = 0);

  const FieldTag& field() const { return field_; }
  const BigRational& x() const { return x_; }
  const BigRational& y() const { return y_; }

  bool is_zero() const { return sgn(x_) == 0 && sgn(y_) == 0; }
  bool is_rational() const { return sgn(y_) == 0; }

  QuadElem conj() const { return {field_, x_, -y_}; }
  BigRational norm() const { return x_ * x_ - BigRational(field_.d) * y_ * y_; }
  BigRational trace() const { return 2 * x_; }

  QuadElem operator-() const { return {field_, -x_, -y_}; }
  QuadElem& operator+=(const QuadElem& o);
  QuadElem& operator-=(const QuadElem& o);
  QuadElem& operator*=(const QuadElem& o);
  QuadElem& operator/=(const QuadElem& o);

  friend QuadElem operator+(QuadElem a, const QuadElem& b) { return a += b; }
  friend QuadElem operator-(QuadElem a, const QuadElem& b) { return a -= b; }
  friend QuadElem operator*(QuadElem a, const QuadElem& b) { return a *= b; }
  friend QuadElem operator/(QuadElem a, const QuadElem& b) { return a /= b; }

  friend bool operator==(const QuadElem& a, const QuadElem& b) {
    return a.field_ == b.field_ && a.x_ == b.x_ && a.y_ == b.y_;
  }

 private:
  FieldTag field_;
  BigRational x_{0};
  BigRational y_{0};
};

enum class ArithOp { add, sub, mul, div };
QuadElem arith(ArithOp op, const QuadElem& a, const QuadElem& b);

inline QuadElem sqrt_d(FieldTag field) { return QuadElem(field, 0, 1); }

// Primitive (a, b, c) with a > 0 and a*t^2 + b*t + c = 0.
IntTriple minimal_polynomial(const QuadElem& t);

// Complex embedding with sqrt(d) = i*sqrt(|d|).
PrecComplex embed(const QuadElem& a, prec_t prec);

// "x+y*sqrt(d)" with x, y written as p/q (or p when q = 1).
std::string to_string(const QuadElem& a);

// Accepts the serialized form above, and inside a known field also the
// shorthand expressions used on the command line: rationals combined with
// + - * / and parentheses, where `s` (or `sqrt(d)`, or `i` when d = -1)
// denotes the generator.
QuadElem parse_quad_elem(std::string_view text);
QuadElem parse_quad_elem(std::string_view text, FieldTag field);

}  // namespace wj
