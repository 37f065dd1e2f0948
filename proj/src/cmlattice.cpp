#include "wj/cmlattice.hpp"

#include <algorithm>
#include <optional>

namespace wj {

namespace {

void check_same_field(const FieldTag& x, const FieldTag& y) {
  if (!(x == y)) {
    fail(Errc::FieldMismatch, "lattices in Q(sqrt(" + std::to_string(x.d) + ")) and Q(sqrt(" + std::to_string(y.d) +
                                  ")) are not isogenous");
  }
}

BigInt mod_pos(const BigInt& n, const BigInt& m) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), m.get_mpz_t());
  return r;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> s(k);
  for (int i = 0; i < k; ++i) s[i] = i;
  if (k > n) return out;
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

QuadElem determinant(std::vector<std::vector<QuadElem>> M) {
  const FieldTag field = M.front().front().field();
  const std::size_t n = M.size();
  QuadElem det(field, 1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && M[piv][col].is_zero()) ++piv;
    if (piv == n) return QuadElem(field);
    if (piv != col) {
      std::swap(M[piv], M[col]);
      det = -det;
    }
    det *= M[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (M[r][col].is_zero()) continue;
      QuadElem factor = M[r][col] / M[col][col];
      for (std::size_t c = col; c < n; ++c) M[r][c] -= factor * M[col][c];
    }
  }
  return det;
}

std::size_t rational_rank(std::vector<std::vector<BigRational>> M) {
  if (M.empty()) return 0;
  const std::size_t cols = M.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < M.size(); ++c) {
    std::size_t piv = rank;
    while (piv < M.size() && sgn(M[piv][c]) == 0) ++piv;
    if (piv == M.size()) continue;
    std::swap(M[piv], M[rank]);
    for (std::size_t r = rank + 1; r < M.size(); ++r) {
      if (sgn(M[r][c]) == 0) continue;
      BigRational factor = M[r][c] / M[rank][c];
      for (std::size_t k = c; k < cols; ++k) M[r][k] -= factor * M[rank][k];
    }
    ++rank;
  }
  return rank;
}

// The n x 2n matrix whose row i carries (-eps_i*tau_i, eps_i) in columns
// 2i, 2i+1, eps_i = 1/(conj(tau_i) - tau_i).
std::vector<std::vector<QuadElem>> period_matrix(const LatticeTuple& T) {
  const FieldTag field = T.field();
  const std::size_t n = T.n();
  std::vector<std::vector<QuadElem>> A(n, std::vector<QuadElem>(2 * n, QuadElem(field)));
  for (std::size_t i = 0; i < n; ++i) {
    QuadElem tau = T.components[i].tau();
    QuadElem eps = QuadElem(field, 1) / (tau.conj() - tau);
    A[i][2 * i] = -(eps * tau);
    A[i][2 * i + 1] = eps;
  }
  return A;
}

struct WedgeImage {
  std::vector<std::vector<int>> row_sets;
  std::vector<std::vector<QuadElem>> generators;  // per row set
  std::vector<std::vector<QuadElem>> vectors;     // per column set, indexed by row set
};

WedgeImage wedge_image(const LatticeTuple& T, int m) {
  const int n = static_cast<int>(T.n());
  if (m < 2 || m > n) {
    fail(Errc::BadWeight, "weight m = " + std::to_string(m) + " outside 2..n = " + std::to_string(n));
  }
  const auto A = period_matrix(T);
  WedgeImage w;
  w.row_sets = subsets(n, m);
  w.generators.resize(w.row_sets.size());
  for (const auto& J : subsets(2 * n, m)) {
    std::vector<QuadElem> v;
    std::optional<std::size_t> support;
    for (std::size_t s = 0; s < w.row_sets.size(); ++s) {
      std::vector<std::vector<QuadElem>> minor;
      for (int r : w.row_sets[s]) {
        std::vector<QuadElem> row;
        for (int c : J) row.push_back(A[r][c]);
        minor.push_back(std::move(row));
      }
      QuadElem det = determinant(std::move(minor));
      if (!det.is_zero()) {
        if (support) fail(Errc::InvalidArgument, "wedge vector supported on two components");
        support = s;
        w.generators[s].push_back(det);
      }
      v.push_back(std::move(det));
    }
    w.vectors.push_back(std::move(v));
  }
  return w;
}

}  // namespace

Order Order::from_conductor(FieldTag field, const BigInt& f) {
  if (f <= 0) fail(Errc::InvalidArgument, "conductor must be positive, got " + f.get_str());
  return Order{field, f, f * f * BigInt(field.dK)};
}

Order Order::from_discriminant(const BigInt& D) {
  DiscriminantSplit s = split_discriminant(D);
  return from_conductor(s.field, s.conductor);
}

CMLattice Order::lattice() const {
  QuadElem omega = field.dK == field.d ? QuadElem(field, make_rational(field.d, 2), make_rational(1, 2))
                                       : QuadElem(field, 2 * BigInt(field.d), 1);
  return canonicalize(QuadElem(field, 1), QuadElem(field, f) * omega);
}

CMLattice lattice_from_generators(const std::vector<QuadElem>& gens) {
  if (gens.empty()) fail(Errc::DegenerateBasis, "no generators");
  const FieldTag field = gens.front().field();
  BigInt L = 1;
  for (const auto& g : gens) {
    check_same_field(field, g.field());
    L = lcm(L, lcm(g.x().get_den(), g.y().get_den()));
  }

  // Row-style HNF of the integer vectors (L*x, L*y): an extended-gcd pivot in
  // the first column, and the gcd h22 of everything the pivot eliminates.
  BigInt p0 = 0, p1 = 0, h22 = 0;
  for (const auto& g : gens) {
    BigRational xs = g.x() * L, ys = g.y() * L;
    BigInt v0 = xs.get_num(), v1 = ys.get_num();
    if (v0 == 0) {
      h22 = gcd(h22, v1);
      continue;
    }
    if (p0 == 0) {
      p0 = v0;
      p1 = v1;
      continue;
    }
    BigInt d, s, t;
    mpz_gcdext(d.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), p0.get_mpz_t(), v0.get_mpz_t());
    BigInt k1 = (v0 / d) * p1 - (p0 / d) * v1;
    h22 = gcd(h22, k1);
    BigInt n0 = s * p0 + t * v0;
    BigInt n1 = s * p1 + t * v1;
    p0 = n0;
    p1 = n1;
  }
  if (p0 == 0 || h22 == 0) fail(Errc::DegenerateBasis, "generators span a module of rank < 2");
  if (p0 < 0) {
    p0 = -p0;
    p1 = -p1;
  }
  BigInt h12 = mod_pos(p1, h22);
  QuadElem g1(field, make_rational(p0, L), make_rational(h12, L));
  QuadElem g2(field, 0, make_rational(h22, L));
  return CMLattice(std::move(g1), std::move(g2));
}

Order endomorphism_order(const CMLattice& L) {
  IntTriple mp = minimal_polynomial(L.tau());
  BigInt D = mp.b * mp.b - 4 * mp.a * mp.c;
  Order o = Order::from_discriminant(D);
  if (!(o.field == L.field())) fail(Errc::NotCM, "endomorphism order lies outside the lattice's field");
  return o;
}

CMLattice lattice_product(const CMLattice& x, const CMLattice& y) {
  check_same_field(x.field(), y.field());
  return lattice_from_generators({x.g1() * y.g1(), x.g1() * y.g2(), x.g2() * y.g1(), x.g2() * y.g2()});
}

CMLattice scale(const CMLattice& L, const QuadElem& s) {
  if (s.is_zero()) fail(Errc::DegenerateBasis, "scaling a lattice by zero");
  return canonicalize(L.g1() * s, L.g2() * s);
}

IdealClass ideal_class(const CMLattice& L) {
  IntTriple mp = minimal_polynomial(L.tau());
  Form f = reduce(Form(mp.a, mp.b, mp.c));
  Order o = Order::from_discriminant(f.discriminant());
  return {o, f};
}

CMLattice form_to_lattice(const Form& f) {
  const BigInt D = f.discriminant();
  DiscriminantSplit s = split_discriminant(D);
  // sqrt(D) = r*sqrt(d)
  BigInt r = s.conductor * (s.field.dK == s.field.d ? 1 : 2);
  QuadElem g2(s.field, make_rational(-f.b(), 2), make_rational(r, 2));
  return canonicalize(QuadElem(s.field, f.a()), g2);
}

bool is_homothetic(const CMLattice& x, const CMLattice& y) {
  check_same_field(x.field(), y.field());
  return ideal_class(x) == ideal_class(y);
}

CMLattice conjugate_lattice(const CMLattice& L) { return canonicalize(L.g1().conj(), L.g2().conj()); }

CMLattice inverse_class(const CMLattice& L) {
  // <1,tau><1,conj tau> = (1/a) End for tau a root of the primitive (a,b,c).
  IntTriple mp = minimal_polynomial(L.tau());
  QuadElem s(L.field(), mp.a / L.g1().norm());
  return scale(conjugate_lattice(L), s);
}

LatticeTuple::LatticeTuple(std::vector<CMLattice> comps) : components(std::move(comps)) {
  if (components.empty()) fail(Errc::InvalidArgument, "empty lattice tuple");
  for (const auto& c : components) check_same_field(components.front().field(), c.field());
}

std::vector<CMLattice> image_lattice_L(const LatticeTuple& T, int m) {
  WedgeImage w = wedge_image(T, m);
  std::vector<CMLattice> out;
  out.reserve(w.generators.size());
  for (const auto& gens : w.generators) out.push_back(lattice_from_generators(gens));
  return out;
}

std::size_t wedge_image_rank(const LatticeTuple& T, int m) {
  WedgeImage w = wedge_image(T, m);
  std::vector<std::vector<BigRational>> M;
  for (const auto& v : w.vectors) {
    std::vector<BigRational> row;
    for (const auto& e : v) {
      row.push_back(e.x());
      row.push_back(e.y());
    }
    M.push_back(std::move(row));
  }
  return rational_rank(std::move(M));
}

std::string to_string(const CMLattice& L) { return "<" + to_string(L.g1()) + ", " + to_string(L.g2()) + ">"; }

namespace {

constexpr std::string_view kOpen = "\xE2\x9F\xA8";
constexpr std::string_view kClose = "\xE2\x9F\xA9";

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

struct LatticeParts {
  std::string_view g1, g2;
  std::optional<FieldTag> field;
};

LatticeParts split_lattice(std::string_view text) {
  auto bad = [&](const std::string& why) -> LatticeParts {
    fail(Errc::ParseError, "bad lattice literal '" + std::string(text) + "': " + why);
  };
  std::string_view s = trim(text);
  LatticeParts parts;
  if (auto at = s.rfind('@'); at != std::string_view::npos) {
    std::string d(trim(s.substr(at + 1)));
    try {
      std::size_t used = 0;
      long long v = std::stoll(d, &used);
      if (used != d.size()) return bad("bad field suffix");
      parts.field = FieldTag::from_d(v);
    } catch (const std::logic_error&) {
      return bad("bad field suffix");
    }
    s = trim(s.substr(0, at));
  }
  if (s.substr(0, kOpen.size()) == kOpen) {
    s.remove_prefix(kOpen.size());
  } else if (!s.empty() && s.front() == '<') {
    s.remove_prefix(1);
  } else {
    return bad("missing opening bracket");
  }
  if (s.size() >= kClose.size() && s.substr(s.size() - kClose.size()) == kClose) {
    s.remove_suffix(kClose.size());
  } else if (!s.empty() && s.back() == '>') {
    s.remove_suffix(1);
  } else {
    return bad("missing closing bracket");
  }
  std::size_t sep = std::string_view::npos;
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (depth == 0 && (s[i] == ';' || s[i] == ',')) {
      if (sep != std::string_view::npos) return bad("expected exactly two generators");
      sep = i;
    }
  }
  if (sep == std::string_view::npos) return bad("expected two generators");
  parts.g1 = trim(s.substr(0, sep));
  parts.g2 = trim(s.substr(sep + 1));
  return parts;
}

}  // namespace

CMLattice parse_lattice(std::string_view text, FieldTag field) {
  LatticeParts p = split_lattice(text);
  if (p.field && !(*p.field == field)) check_same_field(*p.field, field);
  return canonicalize(parse_quad_elem(p.g1, field), parse_quad_elem(p.g2, field));
}

CMLattice parse_lattice(std::string_view text) {
  LatticeParts p = split_lattice(text);
  if (p.field) return canonicalize(parse_quad_elem(p.g1, *p.field), parse_quad_elem(p.g2, *p.field));
  // Infer the field from whichever generator names it.
  std::string both = std::string(p.g1) + " " + std::string(p.g2);
  auto at = both.find("sqrt(");
  if (at == std::string::npos) {
    fail(Errc::ParseError, "cannot infer the field of lattice '" + std::string(text) + "'; append @d");
  }
  FieldTag field = parse_quad_elem(both.substr(at, both.find(')', at) - at + 1)).field();
  return canonicalize(parse_quad_elem(p.g1, field), parse_quad_elem(p.g2, field));
}

std::string to_string(const LatticeTuple& T) {
  std::string s = "[";
  for (std::size_t i = 0; i < T.n(); ++i) {
    if (i > 0) s += ", ";
    s += to_string(T.components[i]);
  }
  return s + "]";
}

LatticeTuple parse_lattice_tuple(std::string_view text) {
  std::string_view s = trim(text);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') {
    fail(Errc::ParseError, "lattice tuple must be a bracketed list: '" + std::string(text) + "'");
  }
  s = s.substr(1, s.size() - 2);
  std::vector<CMLattice> comps;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i < s.size()) {
      if (s[i] == '<' || s[i] == '(') ++depth;
      if (s[i] == '>' || s[i] == ')') --depth;
      if (s.substr(i, kOpen.size()) == kOpen) ++depth;
      if (s.substr(i, kClose.size()) == kClose) --depth;
    }
    if (i == s.size() || (depth == 0 && s[i] == ',')) {
      std::string_view item = trim(s.substr(start, i - start));
      if (!item.empty()) comps.push_back(parse_lattice(item));
      start = i + 1;
    }
  }
  return LatticeTuple(std::move(comps));
}

}  // namespace wj
