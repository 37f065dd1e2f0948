#include "wj/analytic.hpp"

#include <cctype>
#include <cmath>
#include <functional>

namespace wj {

namespace {

constexpr prec_t kGuard = 64;
constexpr prec_t kMaxPrec = 65536;

// Horner evaluation of sum_{n=1}^{N} c[n] q^n.
PrecComplex series(const std::vector<long>& c, const PrecComplex& q) {
  const prec_t p = q.prec();
  PrecComplex s(c.back(), p);
  for (std::size_t n = c.size() - 1; n-- > 1;) {
    s = s * q + PrecComplex(c[n], p);
  }
  return s * q;
}

}  // namespace

PrecComplex j_invariant(const PrecComplex& tau_in, prec_t prec) {
  if (tau_in.im().sign() <= 0) fail(Errc::LowerHalfPlane, "j is defined on the upper half-plane only");
  const prec_t wp = prec + kGuard;
  PrecComplex tau = tau_in.with_prec(wp);

  // Fundamental domain: |Re tau| <= 1/2, |tau| >= 1.
  for (int iter = 0; iter < 10000; ++iter) {
    BigFloat shift(tau.re().round_to_integer(), wp);
    tau = PrecComplex(tau.re() - shift, tau.im());
    BigFloat n = tau.norm();
    if (!(n < BigFloat(1, wp) - ldexp(BigFloat(1, wp), -static_cast<long>(wp) / 2))) break;
    tau = PrecComplex(-tau.re() / n, tau.im() / n);
  }

  const PrecComplex q = exp_2pi_i(tau);
  // |q|^N < 2^-(wp+16) with |q| = exp(-2 pi Im tau)
  const double im = tau.im().to_double();
  const long N = static_cast<long>(std::ceil((static_cast<double>(wp) + 16) * std::log(2.0) / (2 * M_PI * im))) + 1;

  std::vector<long> sigma3(static_cast<std::size_t>(N) + 1, 0);
  for (long d = 1; d <= N; ++d) {
    for (long k = d; k <= N; k += d) sigma3[k] += d * d * d;
  }
  // prod (1 - q^n) = sum_k (-1)^k q^{k(3k-1)/2}, k over all integers
  std::vector<long> eta(static_cast<std::size_t>(N) + 1, 0);
  for (long k = 1;; ++k) {
    long e1 = k * (3 * k - 1) / 2, e2 = k * (3 * k + 1) / 2;
    if (e1 > N) break;
    long sgn = (k % 2) ? -1 : 1;
    eta[e1] += sgn;
    if (e2 <= N) eta[e2] += sgn;
  }

  PrecComplex e4 = PrecComplex(1, wp) + series(sigma3, q) * BigFloat(240, wp);
  PrecComplex eta_prod = PrecComplex(1, wp) + series(eta, q);
  PrecComplex delta = q * pow(eta_prod, 24);
  PrecComplex e4cube = e4 * e4 * e4;
  return (e4cube / delta).with_prec(prec);
}

PrecComplex j_of_form(const Form& f, prec_t prec) {
  const Form r = reduce(f);
  DiscriminantSplit s = split_discriminant(r.discriminant());
  BigInt root_coeff = s.conductor * (s.field.dK == s.field.d ? 1 : 2);
  QuadElem tau(s.field, make_rational(-r.b(), 2 * r.a()), make_rational(root_coeff, 2 * r.a()));
  return j_invariant(embed(tau, prec + kGuard), prec);
}

PrecComplex j_of_lattice(const CMLattice& L, prec_t prec) { return j_of_form(ideal_class(L).form, prec); }

ClassPolynomial hilbert_class_polynomial(const BigInt& D, prec_t prec, Exec exec) {
  const std::vector<Form> forms = enumerate_reduced(D);
  // |j(tau)| is about exp(pi sqrt|D| / a); the coefficients are bounded by
  // 2^h times the product of max(1, |j|).
  const double sqrtD = std::sqrt(std::fabs(D.get_d()));
  double bound_bits = static_cast<double>(forms.size()) + 16;
  for (const auto& f : forms) bound_bits += std::max(0.0, M_PI * sqrtD / f.a().get_d() / std::log(2.0) + 1);
  prec_t wp = std::max<prec_t>(prec, static_cast<prec_t>(bound_bits) + kGuard);

  for (; wp <= kMaxPrec; wp *= 2) {
    std::vector<PrecComplex> roots = class_roots(forms, wp, exec);
    // Fixed multiplication order, so serial and parallel runs agree bitwise.
    std::vector<PrecComplex> poly{PrecComplex(1, wp)};
    for (const auto& r : roots) {
      std::vector<PrecComplex> next(poly.size() + 1, PrecComplex(wp));
      for (std::size_t k = 0; k < poly.size(); ++k) {
        next[k + 1] += poly[k];
        next[k] -= r * poly[k];
      }
      poly = std::move(next);
    }
    ClassPolynomial out{D, {}, wp};
    bool ok = true;
    const BigFloat quarter = ldexp(BigFloat(1, wp), -2);
    for (const auto& c : poly) {
      BigInt n = c.re().round_to_integer();
      if (!(abs(c.re() - BigFloat(n, wp)) < quarter) || !(abs(c.im()) < quarter)) {
        ok = false;
        break;
      }
      out.coefficients.push_back(n);
    }
    if (ok) return out;
  }
  fail(Errc::PrecisionExhausted, "class polynomial of D = " + D.get_str() + " did not round cleanly below " +
                                     std::to_string(kMaxPrec) + " bits");
}

namespace {

class ExprParser {
 public:
  ExprParser(std::string_view s, prec_t wp) : s_(s), wp_(wp) {}

  PrecComplex parse() {
    PrecComplex v = expr();
    skip();
    if (pos_ != s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void error(const std::string& msg) const {
    fail(Errc::ParseError, "bad expression '" + std::string(s_) + "': " + msg);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool accept_word(std::string_view w) {
    skip();
    if (s_.substr(pos_, w.size()) != w) return false;
    std::size_t end = pos_ + w.size();
    if (end < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[end])) || s_[end] == '_')) return false;
    pos_ = end;
    return true;
  }

  PrecComplex expr() {
    PrecComplex v = term();
    for (;;) {
      if (accept('+')) {
        v += term();
      } else if (accept('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  PrecComplex term() {
    PrecComplex v = unary();
    for (;;) {
      if (accept('*')) {
        v *= unary();
      } else if (accept('/')) {
        PrecComplex d = unary();
        if (d.is_zero()) error("division by zero");
        v /= d;
      } else {
        return v;
      }
    }
  }

  PrecComplex unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  PrecComplex power() {
    PrecComplex base = primary();
    if (!accept('^')) return base;
    bool neg = accept('-');
    bool paren = !neg && accept('(');
    if (paren) neg = accept('-');
    long k = static_cast<long>(integer().get_si());
    if (paren && !accept(')')) error("missing ')' in exponent");
    PrecComplex r = pow(base, static_cast<unsigned long>(k));
    if (!neg) return r;
    if (r.is_zero()) error("zero to a negative power");
    return PrecComplex(1, wp_) / r;
  }

  BigInt integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) error("expected an integer");
    return BigInt(std::string(s_.substr(start, pos_ - start)));
  }

  BigFloat real_arg(const char* fn) {
    if (!accept('(')) error(std::string("expected '(' after ") + fn);
    PrecComplex v = expr();
    if (!accept(')')) error(std::string("missing ')' after ") + fn + " argument");
    if (!v.im().is_zero()) error(std::string(fn) + " takes a real argument");
    return v.re();
  }

  PrecComplex primary() {
    skip();
    if (pos_ >= s_.size()) error("unexpected end of input");
    if (accept('(')) {
      PrecComplex v = expr();
      if (!accept(')')) error("missing ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) return PrecComplex(BigFloat(integer(), wp_), BigFloat(wp_));
    if (accept_word("sqrt")) {
      BigFloat x = real_arg("sqrt");
      if (x.sign() < 0) return PrecComplex(BigFloat(wp_), sqrt(-x));
      return PrecComplex(sqrt(x), BigFloat(wp_));
    }
    if (accept_word("cbrt")) return PrecComplex(cbrt(real_arg("cbrt")), BigFloat(wp_));
    if (accept_word("root4")) {
      BigFloat x = real_arg("root4");
      if (x.sign() < 0) error("root4 of a negative number");
      return PrecComplex(root(x, 4), BigFloat(wp_));
    }
    if (accept_word("zeta3")) {
      BigFloat half = ldexp(BigFloat(1, wp_), -1);
      return PrecComplex(-half, sqrt(BigFloat(3, wp_)) * half);
    }
    if (accept_word("i")) return PrecComplex(BigFloat(wp_), BigFloat(1, wp_));
    error("unexpected '" + std::string(1, s_[pos_]) + "'");
  }

  std::string_view s_;
  prec_t wp_;
  std::size_t pos_ = 0;
};

bool below(const BigFloat& x, const BigFloat& scale, prec_t prec) {
  return x < ldexp(scale, 16 - static_cast<long>(prec));
}

}  // namespace

PrecComplex eval_expression(std::string_view expr, prec_t prec) {
  return ExprParser(expr, prec + kGuard).parse().with_prec(prec);
}

bool verify_exact(const CMLattice& L, std::string_view expr, prec_t prec) {
  const prec_t wp = prec + kGuard;
  PrecComplex j = j_of_lattice(L, prec).with_prec(wp);
  PrecComplex e = ExprParser(expr, wp).parse();
  return below((j - e).abs(), e.abs(), prec);
}

bool j_is_real(const PrecComplex& j, prec_t prec) {
  return below(abs(j.im()), BigFloat(1, j.prec()) + j.abs(), prec);
}

bool j_is_real(const CMLattice& L, prec_t prec) { return j_is_real(j_of_lattice(L, prec), prec); }

const std::vector<AppendixFixture>& appendix_fixtures() {
  static const std::string a2_real = "3167093925247392*root4(12)-914261265145368*root4(12)^3";
  static const std::vector<AppendixFixture> fixtures = {
      {"<1,3i>", -36, "<1;3i>@-1", "76771008+44330496*sqrt(3)"},
      {"<3,1+i>", -36, "<3;1+i>@-1", "76771008-44330496*sqrt(3)"},
      {"<1,6i>", -144, "<1;6i>@-1",
       "5894625992142600+3403263903336192*sqrt(3)+3167093925247392*root4(12)+914261265145368*root4(12)^3"},
      {"<3,1-2i>", -144, "<3;1-2i>@-1", "5894625992142600-3403263903336192*sqrt(3)-i*(" + a2_real + ")"},
      {"<3,1+2i>", -144, "<3;1+2i>@-1", "5894625992142600-3403263903336192*sqrt(3)+i*(" + a2_real + ")"},
      {"<3,2i>", -144, "<3;2i>@-1",
       "5894625992142600+3403263903336192*sqrt(3)-3167093925247392*root4(12)-914261265145368*root4(12)^3"},
      {"<1,3sqrt(-3)>", -108, "<1;3s>@-3", "31710790944000*cbrt(2)^2+39953093016000*cbrt(2)+50337742902000"},
      {"<3,2+sqrt(-3)>", -108, "<3;2+s>@-3",
       "31710790944000*(zeta3^2*cbrt(2))^2+39953093016000*zeta3^2*cbrt(2)+50337742902000"},
      {"<3,1+sqrt(-3)>", -108, "<3;1+s>@-3",
       "31710790944000*(zeta3*cbrt(2))^2+39953093016000*zeta3*cbrt(2)+50337742902000"},
      {"<1,4sqrt(-3)>", -192, "<1;4s>@-3",
       "820762881440077125*sqrt(6)+1160733998424384000*sqrt(3)+1421603011620136125*sqrt(2)+2010450259344609000"},
      {"<4,2+sqrt(-3)>", -192, "<4;2+s>@-3",
       "-820762881440077125*sqrt(6)-1160733998424384000*sqrt(3)+1421603011620136125*sqrt(2)+2010450259344609000"},
      {"<2,1+2sqrt(-3)>", -192, "<2;1+2s>@-3",
       "-820762881440077125*sqrt(6)+1160733998424384000*sqrt(3)-1421603011620136125*sqrt(2)+2010450259344609000"},
      {"<4,sqrt(-3)>", -192, "<4;s>@-3",
       "820762881440077125*sqrt(6)-1160733998424384000*sqrt(3)-1421603011620136125*sqrt(2)+2010450259344609000"},
  };
  return fixtures;
}

}  // namespace wj
