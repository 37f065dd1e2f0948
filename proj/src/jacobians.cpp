#include "wj/jacobians.hpp"

#include <algorithm>

namespace wj {

namespace {

BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

bool divides(const BigInt& a, const BigInt& b) { return mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()) != 0; }

void check_same_field(const FieldTag& x, const FieldTag& y) {
  if (!(x == y)) {
    fail(Errc::FieldMismatch, "curves with CM by Q(sqrt(" + std::to_string(x.d) + ")) and Q(sqrt(" +
                                  std::to_string(y.d) + ")) are not isogenous");
  }
}

long binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> s(k);
  for (int i = 0; i < k; ++i) s[i] = i;
  for (;;) {
    out.push_back(s);
    int i = k - 1;
    while (i >= 0 && s[i] == n - k + i) --i;
    if (i < 0) break;
    ++s[i];
    for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
  }
  return out;
}

// prod phi_{c, f_i}([E_i]) over the given classes, all with c | f_i.
CurveClass class_product(const std::vector<const CurveClass*>& classes, const BigInt& c) {
  Form acc = principal_form(Order::from_conductor(classes.front()->order.field, c).D);
  for (const CurveClass* e : classes) acc = compose(acc, phi(*e, c).form);
  return CurveClass::from_form(acc);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

CurveClass CurveClass::from_form(const Form& f) {
  Form r = reduce(f);
  return {Order::from_discriminant(r.discriminant()), r};
}

CurveClass CurveClass::from_lattice(const CMLattice& L) {
  IdealClass c = ideal_class(L);
  return {c.order, c.form};
}

CurveClass CurveClass::principal(const Order& o) { return {o, principal_form(o.D)}; }

ProductAV::ProductAV(std::vector<CurveClass> f) : factors(std::move(f)) {
  if (factors.empty()) fail(Errc::InvalidArgument, "a product of elliptic curves needs at least one factor");
  for (const auto& e : factors) check_same_field(factors.front().order.field, e.order.field);
}

std::vector<BigInt> ProductAV::conductors() const {
  std::vector<BigInt> out;
  for (const auto& e : factors) out.push_back(e.order.f);
  return out;
}

CurveClass phi(const CurveClass& cls, const BigInt& c) {
  if (c <= 0 || !divides(c, cls.order.f)) {
    fail(Errc::NotADivisor, c.get_str() + " does not divide the conductor " + cls.order.f.get_str());
  }
  if (c == cls.order.f) return cls;
  Order target = Order::from_conductor(cls.order.field, c);
  return CurveClass::from_lattice(lattice_product(target.lattice(), cls.lattice()));
}

CurveClass brauer_jacobian_pair(const CurveClass& e1, const CurveClass& e2) {
  check_same_field(e1.order.field, e2.order.field);
  BigInt c = gcd(e1.order.f, e2.order.f);
  return CurveClass::from_form(compose(phi(e1, c).form, phi(e2, c).form));
}

ProductAV m_jacobian(const ProductAV& X, int m, JacobianRoute route) {
  const int n = static_cast<int>(X.n());
  if (m < 2 || m > n) {
    fail(Errc::BadWeight, "weight m = " + std::to_string(m) + " outside 2..n = " + std::to_string(n));
  }
  std::vector<CurveClass> out;
  if (route == JacobianRoute::lattices) {
    std::vector<CMLattice> comps;
    for (const auto& e : X.factors) comps.push_back(e.lattice());
    for (const auto& L : image_lattice_L(LatticeTuple(std::move(comps)), m)) out.push_back(CurveClass::from_lattice(L));
    return ProductAV(std::move(out));
  }
  for (const auto& S : subsets(n, m)) {
    if (route == JacobianRoute::iterated_pairs) {
      CurveClass acc = X.factors[S[0]];
      for (std::size_t k = 1; k < S.size(); ++k) acc = brauer_jacobian_pair(acc, X.factors[S[k]]);
      out.push_back(acc);
    } else {
      BigInt d = 0;
      std::vector<const CurveClass*> sel;
      for (int i : S) {
        d = gcd(d, X.factors[i].order.f);
        sel.push_back(&X.factors[i]);
      }
      out.push_back(class_product(sel, d));
    }
  }
  return ProductAV(std::move(out));
}

TwoMaximality is_two_maximal(const LatticeTuple& T) {
  TwoMaximality r;
  const long n = static_cast<long>(T.n());
  if (n < 2) {
    r.reason = "dim X > 1 required (got a single elliptic curve)";
    return r;
  }
  long rank = static_cast<long>(wedge_image_rank(T, 2));
  r.rank_L2 = rank;
  r.ns_rank = binomial(2 * n, 2) - rank;
  r.two_maximal = r.ns_rank == n * n;
  r.reason = r.two_maximal ? "pairwise isogenous CM elliptic curves" : "Picard number below n^2";
  return r;
}

TwoMaximality is_two_maximal(const std::vector<std::pair<QuadElem, QuadElem>>& bases) {
  TwoMaximality r;
  if (bases.size() < 2) {
    r.reason = "dim X > 1 required (got a single elliptic curve)";
    return r;
  }
  std::vector<CMLattice> comps;
  for (const auto& [g1, g2] : bases) {
    if (!(g1.field() == g2.field())) {
      r.reason = "basis mixes two fields";
      return r;
    }
    try {
      comps.push_back(canonicalize(g1, g2));
    } catch (const Error& e) {
      if (e.code() != Errc::DegenerateBasis) throw;
      r.reason = "degenerate basis";
      return r;
    }
    if (!(comps.front().field() == comps.back().field())) {
      r.reason = "not isogenous: CM by Q(sqrt(" + std::to_string(comps.front().field().d) + ")) and Q(sqrt(" +
                 std::to_string(comps.back().field().d) + "))";
      return r;
    }
  }
  return is_two_maximal(LatticeTuple(std::move(comps)));
}

SurfaceReport surface_decompose(const CurveClass& e1, const CurveClass& e2) {
  check_same_field(e1.order.field, e2.order.field);
  BigInt l = lcm(e1.order.f, e2.order.f);
  BigInt g = gcd(e1.order.f, e2.order.f);
  return {Order::from_conductor(e1.order.field, l), brauer_jacobian_pair(e1, e2), l / g};
}

Decomposition n_decompose(const ProductAV& X) {
  struct Item {
    BigInt f;
    CurveClass cls;
  };
  std::vector<Item> items;
  for (const auto& e : X.factors) items.push_back({e.order.f, e});

  // {(f, e1), (g, e2)} -> {(gcd, [e1][e2]), (lcm, principal)} on the first
  // incomparable pair, until the conductors form a divisibility chain.
  for (;;) {
    bool changed = false;
    for (std::size_t i = 0; i < items.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < items.size() && !changed; ++j) {
        const BigInt &f = items[i].f, &g = items[j].f;
        if (divides(f, g) || divides(g, f)) continue;
        CurveClass composed = brauer_jacobian_pair(items[i].cls, items[j].cls);
        BigInt l = lcm(f, g);
        items[j] = {l, CurveClass::principal(Order::from_conductor(X.field(), l))};
        items[i] = {composed.order.f, composed};
        changed = true;
      }
    }
    if (!changed) break;
  }

  Decomposition out{{}, CurveClass::principal(Order{}), std::nullopt};
  for (const auto& it : items) out.conductors.push_back(it.f);
  std::sort(out.conductors.begin(), out.conductors.end());
  std::vector<const CurveClass*> sel;
  for (const auto& it : items) sel.push_back(&it.cls);
  out.terminal = class_product(sel, out.conductors.front());
  if (X.n() == 2) out.primitivity_degree = out.conductors.back() / out.conductors.front();
  return out;
}

bool is_isomorphic(const ProductAV& X, const ProductAV& Y) {
  check_same_field(X.field(), Y.field());
  if (X.n() != Y.n()) {
    fail(Errc::DimensionMismatch,
         "products of " + std::to_string(X.n()) + " and " + std::to_string(Y.n()) + " curves have different dimension");
  }
  return n_decompose(X) == n_decompose(Y);
}

namespace {

void require_three(const ProductAV& X) {
  if (X.n() < 3) fail(Errc::DimensionTooSmall, "needs n >= 3 factors, got " + std::to_string(X.n()));
}

}  // namespace

bool is_fixed_point(const ProductAV& X) {
  require_three(X);
  Decomposition d = n_decompose(X);
  if (d.conductors.front() != d.conductors.back()) return false;
  return static_cast<long>(X.n() - 2) % element_order(d.terminal.form) == 0;
}

bool is_fixed_point_direct(const ProductAV& X) {
  require_three(X);
  return is_isomorphic(X, m_jacobian(X, static_cast<int>(X.n()) - 1));
}

Orbit jacobian_orbit(const ProductAV& X) {
  require_three(X);
  const int m = static_cast<int>(X.n()) - 1;
  // The chain settles after two steps and the terminal class then runs
  // through powers inside a finite group, so this cap is never reached.
  const std::size_t cap = 1u << 20;
  Orbit orbit;
  ProductAV cur = X;
  for (;;) {
    Decomposition d = n_decompose(cur);
    auto hit = std::find(orbit.steps.begin(), orbit.steps.end(), d);
    if (hit != orbit.steps.end()) {
      orbit.cycle_start = static_cast<std::size_t>(hit - orbit.steps.begin());
      return orbit;
    }
    orbit.steps.push_back(std::move(d));
    if (orbit.steps.size() > cap) fail(Errc::InvalidArgument, "Jacobian orbit did not close");
    cur = m_jacobian(cur, m);
  }
}

bool same_field_of_definition(const CurveClass& e1, const CurveClass& e2) {
  if (!(e1.order == e2.order)) {
    fail(Errc::OrderMismatch, "curves have CM by different orders (D = " + e1.order.D.get_str() + ", " +
                                  e2.order.D.get_str() + "); use field_contains");
  }
  return power(e1.form, 2) == power(e2.form, 2);
}

bool field_contains(const CurveClass& e_small, const CurveClass& e_big) {
  check_same_field(e_small.order.field, e_big.order.field);
  CurveClass image = phi(e_big, e_small.order.f);
  return power(e_small.form, 2) == power(image.form, 2);
}

bool product_definable_over_jacobian_field(const CurveClass& e1, const CurveClass& e2) {
  check_same_field(e1.order.field, e2.order.field);
  if (!(e1.order == e2.order)) {
    fail(Errc::PrimitivityViolation, "surface is not primitive: conductors " + e1.order.f.get_str() + " and " +
                                         e2.order.f.get_str() + " differ");
  }
  return element_order(brauer_jacobian_pair(e1, e2).form) <= 2;
}

KummerReport kummer_jacobian(const ProductAV& X, int m) {
  KummerReport r{m_jacobian(X, m), {"Kummer variety"}};
  if (X.n() == 2) r.labels.push_back("singular K3 surface");
  return r;
}

std::string to_string(const CurveClass& e) { return "(" + e.order.D.get_str() + ":" + to_string(e.form) + ")"; }

CurveClass parse_curve_class(std::string_view text) {
  std::string_view s = trim(text);
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') {
    fail(Errc::ParseError, "curve class must look like (D:a,b,c), got '" + std::string(text) + "'");
  }
  s = s.substr(1, s.size() - 2);
  auto colon = s.find(':');
  if (colon == std::string_view::npos) {
    fail(Errc::ParseError, "curve class must look like (D:a,b,c), got '" + std::string(text) + "'");
  }
  BigInt D;
  if (D.set_str(std::string(trim(s.substr(0, colon))), 10) != 0) {
    fail(Errc::ParseError, "bad discriminant in '" + std::string(text) + "'");
  }
  check_discriminant(D);
  Form f = parse_form(s.substr(colon + 1));
  if (f.discriminant() != D) {
    fail(Errc::DiscriminantMismatch,
         "form " + to_string(f) + " has discriminant " + f.discriminant().get_str() + ", not " + D.get_str());
  }
  return CurveClass::from_form(f);
}

ProductAV parse_product(std::string_view text) {
  std::vector<CurveClass> classes;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size()) {
      if (text[i] == '(') ++depth;
      if (text[i] == ')') --depth;
    }
    if (i == text.size() || (depth == 0 && text[i] == ',')) {
      std::string_view item = trim(text.substr(start, i - start));
      if (!item.empty()) classes.push_back(parse_curve_class(item));
      start = i + 1;
    }
  }
  return ProductAV(std::move(classes));
}

}  // namespace wj
