#include "wj/binforms.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace wj {

namespace {

BigInt floor_div(const BigInt& n, const BigInt& d) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

BigInt mod_pos(const BigInt& n, const BigInt& m) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), m.get_mpz_t());
  return r;
}

// g = s*a + t*b
void gcdext(BigInt& g, BigInt& s, BigInt& t, const BigInt& a, const BigInt& b) {
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

}  // namespace

Form::Form(BigInt a, BigInt b, BigInt c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  if (a_ <= 0) fail(Errc::InvalidForm, "form " + to_string(*this) + " is not positive definite (a <= 0)");
  if (discriminant() >= 0) fail(Errc::InvalidForm, "form " + to_string(*this) + " has non-negative discriminant");
  if (gcd(gcd(a_, b_), c_) != 1) fail(Errc::InvalidForm, "form " + to_string(*this) + " is not primitive");
}

bool operator<(const Form& x, const Form& y) {
  if (x.a_ != y.a_) return x.a_ < y.a_;
  if (x.b_ != y.b_) return x.b_ < y.b_;
  return x.c_ < y.c_;
}

void check_discriminant(const BigInt& D) {
  if (D >= 0) fail(Errc::InvalidDiscriminant, "discriminant must be negative, got " + D.get_str());
  BigInt r = mod_pos(D, 4);
  if (r != 0 && r != 1) fail(Errc::InvalidDiscriminant, "discriminant must be 0 or 1 mod 4, got " + D.get_str());
}

Form principal_form(const BigInt& D) {
  check_discriminant(D);
  BigInt b = mod_pos(D, 2);
  return Form(1, b, (b * b - D) / 4, Form::unchecked{});
}

bool is_principal(const Form& f) { return reduce(f).a() == 1; }

bool is_reduced(const Form& f) {
  const BigInt& a = f.a();
  const BigInt& b = f.b();
  const BigInt& c = f.c();
  if (!(-a < b && b <= a && a <= c)) return false;
  if (a == c && b < 0) return false;
  return true;
}

Form reduce(const Form& f) {
  const BigInt D = f.discriminant();
  BigInt a = f.a(), b = f.b(), c = f.c();
  auto normalize = [&] {
    // x -> x + t*y moves b into (-a, a]
    BigInt t = floor_div(a - b, 2 * a);
    b += 2 * a * t;
    c = (b * b - D) / (4 * a);
  };
  normalize();
  while (a > c) {
    std::swap(a, c);
    b = -b;
    normalize();
  }
  if (a == c && b < 0) b = -b;
  return Form(std::move(a), std::move(b), std::move(c), Form::unchecked{});
}

Form compose(const Form& f, const Form& g) {
  const BigInt D = f.discriminant();
  if (g.discriminant() != D) {
    fail(Errc::DiscriminantMismatch, "cannot compose forms of discriminants " + D.get_str() + " and " +
                                         g.discriminant().get_str());
  }
  const BigInt &a1 = f.a(), &b1 = f.b();
  const BigInt &a2 = g.a(), &b2 = g.b();
  const BigInt h = (b1 + b2) / 2;

  // e = gcd(a1, a2, h) = u*a1 + v*a2 + w*h
  BigInt g1, u1, v1, e, u2, w;
  gcdext(g1, u1, v1, a1, a2);
  gcdext(e, u2, w, g1, h);
  BigInt u = u2 * u1, v = u2 * v1;

  BigInt A = a1 * a2 / (e * e);
  BigInt B = (u * a1 * b2 + v * a2 * b1 + w * (b1 * b2 + D) / 2) / e;
  B = mod_pos(B, 2 * A);
  BigInt C = (B * B - D) / (4 * A);
  return reduce(Form(std::move(A), std::move(B), std::move(C), Form::unchecked{}));
}

Form power(const Form& f, long k) {
  Form base = reduce(k < 0 ? f.conj() : f);
  unsigned long e = k < 0 ? -static_cast<unsigned long>(k) : static_cast<unsigned long>(k);
  Form result = principal_form(f.discriminant());
  while (e > 0) {
    if (e & 1UL) result = compose(result, base);
    e >>= 1;
    if (e > 0) base = compose(base, base);
  }
  return result;
}

long element_order(const Form& f) {
  const Form r = reduce(f);
  Form x = r;
  long k = 1;
  while (x.a() != 1) {
    x = compose(x, r);
    ++k;
  }
  return k;
}

std::vector<Form> enumerate_reduced(const BigInt& D) {
  check_discriminant(D);
  std::vector<Form> out;
  const BigInt parity = mod_pos(D, 2);
  for (BigInt a = 1; 3 * a * a <= -D; ++a) {
    BigInt b = -a + 1;
    if (mod_pos(b, 2) != parity) ++b;
    for (; b <= a; b += 2) {
      BigInt num = b * b - D;
      if (mod_pos(num, 4 * a) != 0) continue;
      BigInt c = num / (4 * a);
      if (c < a) continue;
      if (c == a && b < 0) continue;
      if (gcd(gcd(a, b), c) != 1) continue;
      out.emplace_back(a, b, c);
    }
  }
  return out;
}

ClassGroup::ClassGroup(const BigInt& D) : D_(D), elements_(enumerate_reduced(D)) {
  const std::size_t n = elements_.size();
  table_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      std::size_t k = index_of(compose(elements_[i], elements_[j]));
      table_[i * n + j] = k;
      table_[j * n + i] = k;
    }
  }

  orders_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t x = i;
    long k = 1;
    while (x != identity_index()) {
      x = compose_index(x, i);
      ++k;
    }
    orders_[i] = k;
  }

  // p-primary exponents from the counts #{x : x^(p^k) = 1} = p^(sum_j min(k, e_j)).
  std::vector<std::vector<long>> prime_parts;  // each: p^e_j, descending
  long hh = static_cast<long>(n);
  for (long p = 2; hh > 1; ++p) {
    if (hh % p != 0) continue;
    while (hh % p == 0) hh /= p;
    std::vector<long> at_least;  // at_least[k-1] = #{j : e_j >= k}
    long prev_log = 0;
    for (long pk = p;; pk *= p) {
      long count = 0;
      for (long ord : orders_) count += (pk % ord == 0);
      long lg = 0;
      while (count > 1) {
        count /= p;
        ++lg;
      }
      if (lg == prev_log) break;
      at_least.push_back(lg - prev_log);
      prev_log = lg;
    }
    std::vector<long> part;
    for (long j = 1; !at_least.empty() && j <= at_least.front(); ++j) {
      long q = 1;
      for (long t : at_least) {
        if (t >= j) q *= p;
      }
      part.push_back(q);
    }
    prime_parts.push_back(std::move(part));
  }
  std::size_t rank = 0;
  for (const auto& part : prime_parts) rank = std::max(rank, part.size());
  structure_.assign(rank, 1);
  for (const auto& part : prime_parts) {
    for (std::size_t j = 0; j < part.size(); ++j) structure_[rank - 1 - j] *= part[j];
  }
  if (structure_.empty()) structure_.push_back(1);
}

std::size_t ClassGroup::index_of(const Form& f) const {
  if (f.discriminant() != D_) {
    fail(Errc::DiscriminantMismatch, "form " + to_string(f) + " is not of discriminant " + D_.get_str());
  }
  Form r = reduce(f);
  auto it = std::lower_bound(elements_.begin(), elements_.end(), r);
  if (it == elements_.end() || !(*it == r)) fail(Errc::InvalidForm, "form " + to_string(f) + " not in class group");
  return static_cast<std::size_t>(it - elements_.begin());
}

std::string to_string(const Form& f) { return f.a().get_str() + "," + f.b().get_str() + "," + f.c().get_str(); }

Form parse_form(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (ch != ' ' && ch != '(' && ch != ')' && ch != '[' && ch != ']') s += ch;
  }
  auto p1 = s.find(',');
  auto p2 = p1 == std::string::npos ? p1 : s.find(',', p1 + 1);
  if (p2 == std::string::npos || s.find(',', p2 + 1) != std::string::npos) {
    fail(Errc::ParseError, "expected a form literal a,b,c, got '" + std::string(text) + "'");
  }
  BigInt a, b, c;
  if (a.set_str(s.substr(0, p1), 10) != 0 || b.set_str(s.substr(p1 + 1, p2 - p1 - 1), 10) != 0 ||
      c.set_str(s.substr(p2 + 1), 10) != 0) {
    fail(Errc::ParseError, "expected a form literal a,b,c, got '" + std::string(text) + "'");
  }
  return Form(a, b, c);
}

}  // namespace wj
