#include "wj/quadfield.hpp"

#include <cctype>
#include <optional>

namespace wj {

namespace {

bool is_squarefree(std::int64_t n) {
  std::uint64_t m = n < 0 ? static_cast<std::uint64_t>(-n) : static_cast<std::uint64_t>(n);
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % (p * p) == 0) return false;
    if (m % p == 0) m /= p;
  }
  return true;
}

void check_same_field(const QuadElem& a, const QuadElem& b) {
  if (!(a.field() == b.field())) {
    fail(Errc::FieldMismatch, "elements of Q(sqrt(" + std::to_string(a.field().d) + ")) and Q(sqrt(" +
                                  std::to_string(b.field().d) + ")) cannot be combined");
  }
}

}  // namespace

BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) fail(Errc::DivisionByZero, "zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const BigRational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

BigRational parse_rational(std::string_view text) {
  std::string s(text);
  BigRational q;
  try {
    auto slash = s.find('/');
    BigInt num(s.substr(0, slash));
    BigInt den = slash == std::string::npos ? BigInt(1) : BigInt(s.substr(slash + 1));
    q = make_rational(num, den);
  } catch (const std::invalid_argument&) {
    fail(Errc::ParseError, "not a rational number: '" + s + "'");
  }
  return q;
}

FieldTag FieldTag::from_d(std::int64_t d) {
  if (d >= 0) fail(Errc::InvalidArgument, "field generator d must be negative, got " + std::to_string(d));
  if (!is_squarefree(d)) fail(Errc::InvalidArgument, "d = " + std::to_string(d) + " is not squarefree");
  std::int64_t r = ((d % 4) + 4) % 4;
  return FieldTag{d, r == 1 ? d : 4 * d};
}

DiscriminantSplit split_discriminant(const BigInt& D) {
  if (D >= 0) fail(Errc::InvalidDiscriminant, "discriminant must be negative, got " + D.get_str());
  BigInt r = D % 4;
  if (r < 0) r += 4;
  if (r != 0 && r != 1) fail(Errc::InvalidDiscriminant, "discriminant must be 0 or 1 mod 4, got " + D.get_str());

  // D = s^2 * d with d squarefree, by trial division.
  BigInt m = -D;
  BigInt s = 1;
  BigInt core = 1;
  for (BigInt p = 2; p * p <= m; ++p) {
    while (m % (p * p) == 0) {
      m /= p * p;
      s *= p;
    }
    if (m % p == 0) {
      m /= p;
      core *= p;
    }
  }
  core *= m;
  if (!core.fits_slong_p()) fail(Errc::InvalidDiscriminant, "field discriminant out of range for " + D.get_str());
  FieldTag field = FieldTag::from_d(-core.get_si());
  BigInt f2 = D / BigInt(field.dK);
  BigInt f = sqrt(f2);
  if (f * f != f2 || f2 * field.dK != D) {
    fail(Errc::InvalidDiscriminant, D.get_str() + " is not of the form f^2 * dK");
  }
  return {field, f};
}

QuadElem::QuadElem(FieldTag field, BigRational x, BigRational y) : field_(field), x_(std::move(x)), y_(std::move(y)) {
  x_.canonicalize();
  y_.canonicalize();
}

QuadElem& QuadElem::operator+=(const QuadElem& o) {
  check_same_field(*this, o);
  x_ += o.x_;
  y_ += o.y_;
  return *this;
}

QuadElem& QuadElem::operator-=(const QuadElem& o) {
  check_same_field(*this, o);
  x_ -= o.x_;
  y_ -= o.y_;
  return *this;
}

QuadElem& QuadElem::operator*=(const QuadElem& o) {
  check_same_field(*this, o);
  BigRational x = x_ * o.x_ + BigRational(field_.d) * y_ * o.y_;
  BigRational y = x_ * o.y_ + y_ * o.x_;
  x_ = std::move(x);
  y_ = std::move(y);
  return *this;
}

QuadElem& QuadElem::operator/=(const QuadElem& o) {
  check_same_field(*this, o);
  if (o.is_zero()) fail(Errc::DivisionByZero, "division by zero in Q(sqrt(" + std::to_string(field_.d) + "))");
  BigRational n = o.norm();
  *this *= o.conj();
  x_ /= n;
  y_ /= n;
  return *this;
}

QuadElem arith(ArithOp op, const QuadElem& a, const QuadElem& b) {
  switch (op) {
    case ArithOp::add:
      return a + b;
    case ArithOp::sub:
      return a - b;
    case ArithOp::mul:
      return a * b;
    case ArithOp::div:
      return a / b;
  }
  fail(Errc::InvalidArgument, "unknown arithmetic operation");
}

IntTriple minimal_polynomial(const QuadElem& t) {
  if (t.is_rational()) fail(Errc::RationalInput, "minimal polynomial of a rational number is linear: " + to_string(t));
  // t^2 - trace*t + norm = 0, scaled to a primitive integer triple.
  BigRational tr = t.trace();
  BigRational nm = t.norm();
  BigInt den;
  mpz_lcm(den.get_mpz_t(), tr.get_den().get_mpz_t(), nm.get_den().get_mpz_t());
  BigInt a = den;
  BigInt b = -(tr.get_num() * (den / tr.get_den()));
  BigInt c = nm.get_num() * (den / nm.get_den());
  BigInt g = gcd(gcd(a, b), c);
  return {a / g, b / g, c / g};
}

PrecComplex embed(const QuadElem& a, prec_t prec) {
  // a few guard bits so both parts are correctly rounded at `prec`
  const prec_t wp = prec + 32;
  BigFloat re(a.x(), prec);
  BigFloat im = BigFloat(a.y(), wp) * sqrt(BigFloat(-a.field().d, wp));
  return {std::move(re), im.with_prec(prec)};
}

std::string to_string(const QuadElem& a) {
  std::string s = to_string(a.x());
  std::string y = to_string(a.y());
  if (y.front() == '-') {
    s += y;
  } else {
    s += "+" + y;
  }
  s += "*sqrt(" + std::to_string(a.field().d) + ")";
  return s;
}

namespace {

class ElemParser {
 public:
  ElemParser(std::string_view text, FieldTag field) : s_(text), field_(field) {}

  QuadElem parse() {
    QuadElem v = expr();
    skip();
    if (pos_ != s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void error(const std::string& msg) const {
    fail(Errc::ParseError, "bad field element '" + std::string(s_) + "': " + msg);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool starts_primary() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || c == 's' || c == 'i';
  }

  QuadElem expr() {
    QuadElem v = term();
    for (;;) {
      if (peek('+')) {
        ++pos_;
        v += term();
      } else if (peek('-')) {
        ++pos_;
        v -= term();
      } else {
        return v;
      }
    }
  }

  QuadElem term() {
    QuadElem v = unary();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        v *= unary();
      } else if (peek('/')) {
        ++pos_;
        v /= unary();
      } else if (starts_primary()) {
        v *= primary();
      } else {
        return v;
      }
    }
  }

  QuadElem unary() {
    if (peek('-')) {
      ++pos_;
      return -unary();
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    return primary();
  }

  BigInt integer() {
    skip();
    std::size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::string digits(s_.substr(start, pos_ - start));
    if (digits.empty() || digits == "-" || digits == "+") error("expected an integer");
    if (digits.front() == '+') digits.erase(0, 1);
    return BigInt(digits);
  }

  QuadElem sqrt_of(const BigInt& k) {
    // sqrt(k) = t*sqrt(d) when k/d is a rational square, t when k is.
    if (k == 0) return QuadElem(field_);
    if (k < 0) {
      BigRational ratio = make_rational(k, BigInt(field_.d));
      BigInt n = ratio.get_num(), m = ratio.get_den();
      BigInt rn = sqrt(n), rm = sqrt(m);
      if (rn * rn == n && rm * rm == m) return QuadElem(field_, 0, make_rational(rn, rm));
      error("sqrt(" + k.get_str() + ") is not in Q(sqrt(" + std::to_string(field_.d) + "))");
    }
    BigInt r = sqrt(k);
    if (r * r != k) error("sqrt(" + k.get_str() + ") is irrational and real");
    return QuadElem(field_, r);
  }

  QuadElem primary() {
    skip();
    if (pos_ >= s_.size()) error("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      QuadElem v = expr();
      if (!peek(')')) error("missing ')'");
      ++pos_;
      return v;
    }
    if (s_.substr(pos_, 5) == "sqrt(") {
      pos_ += 5;
      BigInt k = integer();
      if (!peek(')')) error("missing ')' after sqrt argument");
      ++pos_;
      return sqrt_of(k);
    }
    if (c == 's') {
      ++pos_;
      return sqrt_d(field_);
    }
    if (c == 'i') {
      if (field_.d != -1) error("'i' is only available in Q(sqrt(-1))");
      ++pos_;
      return sqrt_d(field_);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return QuadElem(field_, integer());
    error("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  FieldTag field_;
  std::size_t pos_ = 0;
};

}  // namespace

QuadElem parse_quad_elem(std::string_view text, FieldTag field) { return ElemParser(text, field).parse(); }

QuadElem parse_quad_elem(std::string_view text) {
  auto at = text.find("sqrt(");
  if (at == std::string_view::npos) {
    fail(Errc::ParseError, "cannot infer the field of '" + std::string(text) + "' (expected x+y*sqrt(d))");
  }
  auto close = text.find(')', at);
  if (close == std::string_view::npos) fail(Errc::ParseError, "missing ')' in '" + std::string(text) + "'");
  std::string d_text(text.substr(at + 5, close - at - 5));
  std::int64_t d = 0;
  try {
    d = std::stoll(d_text);
  } catch (const std::exception&) {
    fail(Errc::ParseError, "bad field generator in '" + std::string(text) + "'");
  }
  return parse_quad_elem(text, FieldTag::from_d(d));
}

}  // namespace wj
