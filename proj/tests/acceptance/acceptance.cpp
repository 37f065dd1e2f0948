// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "oracles/appendix_roots.hpp"
#include "oracles/chain_oracle.hpp"
#include "wj/analytic.hpp"
#include "wj/hodgecalc.hpp"
#include "wj/jacobians.hpp"
#include "wj/kernels.hpp"

using namespace wj;

namespace {

struct Verdict {
  bool pass = true;
  std::ostringstream detail;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << "first failure: " << what;
      pass = false;
    }
  }
};

using Clock = std::chrono::steady_clock;

bool run_criterion(int id, const std::string& title, double limit_s, const std::function<void(Verdict&)>& body) {
  Verdict v;
  auto t0 = Clock::now();
  try {
    body(v);
  } catch (const std::exception& e) {
    v.require(false, std::string("exception: ") + e.what());
  }
  double s = std::chrono::duration<double>(Clock::now() - t0).count();
  if (limit_s > 0 && s >= limit_s) v.require(false, "runtime " + std::to_string(s) + " s over the limit");
  std::printf("%s %2d  %s  [%.2f s%s]%s%s\n", v.pass ? "PASS" : "FAIL", id, title.c_str(), s,
              limit_s > 0 ? (", limit " + std::to_string(static_cast<int>(limit_s)) + " s").c_str() : "",
              v.detail.str().empty() ? "" : "  ", v.detail.str().c_str());
  for (const auto& n : v.notes) std::printf("         %s\n", n.c_str());
  std::fflush(stdout);
  return v.pass;
}

const FieldTag Qi = FieldTag::from_d(-1);
const FieldTag Qs3 = FieldTag::from_d(-3);

CMLattice lat(FieldTag f, std::string_view a, std::string_view b) {
  return canonicalize(parse_quad_elem(a, f), parse_quad_elem(b, f));
}
CurveClass cls(FieldTag f, std::string_view a, std::string_view b) { return CurveClass::from_lattice(lat(f, a, b)); }
CurveClass principal(const BigInt& D) { return CurveClass::principal(Order::from_discriminant(D)); }

std::vector<long> discriminants(long max_abs) {
  std::vector<long> out;
  for (long D = -3; D >= -max_abs; --D) {
    if (((D % 4) + 4) % 4 <= 1) out.push_back(D);
  }
  return out;
}

std::string forms_str(const std::vector<Form>& fs) {
  std::string s = "{";
  for (std::size_t k = 0; k < fs.size(); ++k) s += (k ? " " : "") + std::string("(") + to_string(fs[k]) + ")";
  return s + "}";
}

std::string structure_str(const std::vector<long>& st) {
  std::string s;
  for (std::size_t k = 0; k < st.size(); ++k) s += (k ? " x " : "") + std::string("Z/") + std::to_string(st[k]);
  return s;
}

std::string poly_str(const std::vector<BigInt>& c) {
  std::string s = "[";
  for (std::size_t k = 0; k < c.size(); ++k) s += (k ? ", " : "") + c[k].get_str();
  return s + "]";
}

// Random classes over orders with |D| <= max_abs inside one field.
struct Sampler {
  std::mt19937_64 rng;
  long max_abs;

  FieldTag field() {
    static const long ds[] = {-1, -2, -3, -5, -6, -7, -11, -15, -23, -31};
    return FieldTag::from_d(ds[rng() % std::size(ds)]);
  }
  CurveClass curve(FieldTag f) {
    long top = 1;
    while ((top + 1) * (top + 1) * std::labs(f.dK) <= max_abs) ++top;
    long c = 1 + static_cast<long>(rng() % top);
    auto forms = enumerate_reduced(Order::from_conductor(f, c).D);
    return CurveClass::from_form(forms[rng() % forms.size()]);
  }
  ProductAV product(FieldTag f, std::size_t n) {
    std::vector<CurveClass> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(curve(f));
    return ProductAV(out);
  }
};

// The discriminants of Z[sqrt(-27)] and Z[sqrt(-48)].
const long D27 = -108, D48 = -192;

void c1(Verdict& v) {
  ClassGroup g36(-36), g144(-144), g27(D27), g48(D48);
  v.require(g36.structure() == std::vector<long>{2}, "D=-36 structure");
  v.require(g36.elements() == std::vector<Form>{Form(1, 0, 9), Form(2, 2, 5)}, "D=-36 forms");
  v.require(g144.structure() == std::vector<long>{4}, "D=-144 structure");
  v.require(g144.elements() == std::vector<Form>{Form(1, 0, 36), Form(4, 0, 9), Form(5, -4, 8), Form(5, 4, 8)},
            "D=-144 forms");
  v.require(g27.structure() == std::vector<long>{3}, "Z[sqrt(-27)] structure");
  v.require(g48.structure() == std::vector<long>{2, 2}, "Z[sqrt(-48)] structure");
  v.notes.push_back("-36: " + structure_str(g36.structure()) + " " + forms_str(g36.elements()));
  v.notes.push_back("-144: " + structure_str(g144.structure()) + " " + forms_str(g144.elements()));
  v.notes.push_back("Z[sqrt(-27)] has D = -108: " + structure_str(g27.structure()) + " " + forms_str(g27.elements()));
  v.notes.push_back("Z[sqrt(-48)] has D = -192: " + structure_str(g48.structure()) + " " + forms_str(g48.elements()));
  ClassGroup lit27(-27), lit48(-48);
  v.notes.push_back("for reference, literal D = -27 gives " + structure_str(lit27.structure()) + " and D = -48 gives " +
                    structure_str(lit48.structure()) + "; the cases above are read as the orders Z[sqrt(-27)], Z[sqrt(-48)]");
}

void c2(Verdict& v) {
  const auto& fx = appendix_fixtures();
  double worst = -1e9;
  for (const auto& f : fx) {
    CMLattice L = parse_lattice(f.lattice);
    v.require(endomorphism_order(L).D == f.D, f.name + " order");
    PrecComplex exact = eval_expression(f.exact_expr, 1024);
    double e = log2_relative_error(j_of_lattice(L, 256).with_prec(1024), exact);
    worst = std::max(worst, e);
    v.require(e < -200.0, f.name + " log2 rel err " + std::to_string(e));
  }
  v.notes.push_back(std::to_string(fx.size()) + " closed-form values (the -108 and -192 lattices included), worst log2 rel err " +
                    std::to_string(worst));
}

void c3(Verdict& v) {
  for (long D : {-4L, D27, -36L, D48, -144L}) {
    ClassPolynomial H = hilbert_class_polynomial(D, 256);
    auto expanded = oracle::expanded_class_polynomial(D);
    v.require(expanded.has_value(), "oracle expansion not integral for D=" + std::to_string(D));
    v.require(expanded && H.coefficients == *expanded, "coefficients differ for D=" + std::to_string(D));
    v.require(H.coefficients.back() == 1 && H.degree() == enumerate_reduced(D).size(), "monic of degree h");
    // the closed-form values are roots
    for (const auto& f : appendix_fixtures()) {
      if (f.D != D) continue;
      const prec_t p = 512;
      PrecComplex x = eval_expression(f.exact_expr, p), y(0, p);
      BigFloat scale(1, p);
      for (std::size_t k = H.coefficients.size(); k-- > 0;) {
        y = y * x + PrecComplex(BigFloat(H.coefficients[k], p), BigFloat(p));
        scale = scale * (BigFloat(1, p) + x.abs()) + abs(BigFloat(H.coefficients[k], p));
      }
      v.require(log2_abs(y) < 32.0 - p + log2_abs(PrecComplex(scale, BigFloat(p))), f.name + " is not a root");
    }
    v.notes.push_back("D = " + std::to_string(D) + ": " + poly_str(H.coefficients));
  }
  v.notes.push_back("for reference, literal D = -27: " + poly_str(hilbert_class_polynomial(-27, 256).coefficients) +
                    ", literal D = -48: " + poly_str(hilbert_class_polynomial(-48, 256).coefficients));
}

void c4(Verdict& v) {
  CMLattice L = lat(Qi, "1", "(1+2i)/3");
  CMLattice sq = lattice_product(L, L);
  v.require(sq.g1() == QuadElem(Qi, make_rational(1, 3)) && sq.g2() == parse_quad_elem("2i/9", Qi), "product basis");
  v.require(is_homothetic(L, lat(Qi, "3", "1+2i")), "<1,(1+2i)/3> ~ <3,1+2i>");
  v.require(!is_homothetic(lat(Qi, "3", "1+2i"), lat(Qi, "3", "2i")), "<3,1+2i> !~ <3,2i>");
  v.require(is_homothetic(sq, lat(Qi, "3", "2i")), "square ~ <3,2i>");
  v.require(!is_homothetic(sq, L), "square !~ L");
  v.notes.push_back("<1,(1+2i)/3>^2 = " + to_string(sq));
}

void c5(Verdict& v) {
  Sampler s{std::mt19937_64(2024), 2000};
  long cases = 0;
  for (int t = 0; t < 600; ++t) {
    FieldTag f = s.field();
    std::size_t n = 2 + t % 3;
    ProductAV X = s.product(f, n);
    for (int m = 2; m <= static_cast<int>(n); ++m) {
      ProductAV a = m_jacobian(X, m, JacobianRoute::classes);
      ProductAV c = m_jacobian(X, m, JacobianRoute::lattices);
      v.require(a.factors == c.factors, "routes differ");
      ++cases;
    }
  }
  v.require(cases >= 500, "too few cases");
  v.notes.push_back(std::to_string(cases) + " (X, m) cases, n in 2..4, |D| <= 2000");
}

void c6(Verdict& v) {
  CurveClass e = cls(Qi, "3", "1+2i");
  SurfaceReport r = surface_decompose(e, e);
  v.require(r.big_order.lattice() == lat(Qi, "1", "6i"), "big order Z[6i]");
  v.require(r.jacobian == cls(Qi, "3", "2i"), "Jacobian <3,2i>");
  v.require(r.primitivity_degree == 1, "primitivity 1");
  v.require(element_order(r.jacobian.form) == 2 && product_definable_over_jacobian_field(e, e), "order 2, definable");

  CurveClass l1 = cls(Qs3, "3", "2+s");
  SurfaceReport r2 = surface_decompose(l1, l1);
  v.require(r2.big_order.lattice() == lat(Qs3, "1", "3s"), "big order Z[sqrt(-27)]");
  v.require(r2.jacobian == cls(Qs3, "3", "1+s"), "Jacobian <3,1+sqrt(-3)>");
  v.require(r2.primitivity_degree == 1, "primitivity 1");
  v.require(element_order(r2.jacobian.form) == 3 && !product_definable_over_jacobian_field(l1, l1),
            "order 3, not definable");

  std::mt19937_64 rng(7);
  int triples = 0;
  for (int t = 0; t < 200; ++t) {
    FieldTag f = t % 2 ? Qi : Qs3;
    long fs[3];
    std::vector<CurveClass> cs;
    for (long& x : fs) {
      x = 1 + static_cast<long>(rng() % 30);
      auto forms = enumerate_reduced(Order::from_conductor(f, x).D);
      cs.push_back(CurveClass::from_form(forms[rng() % forms.size()]));
    }
    long d = std::gcd(std::gcd(fs[0], fs[1]), fs[2]), N = std::lcm(std::lcm(fs[0], fs[1]), fs[2]);
    Decomposition dec = n_decompose(ProductAV(cs));
    v.require(dec.conductors.size() == 3 && dec.conductors[1] == fs[0] * fs[1] * fs[2] / (d * N),
              "r2 formula");
    v.require(dec.conductors[0] == d && dec.conductors[2] == N, "r1, r3");
    ++triples;
  }
  v.notes.push_back("(<3,1+2i>)^2 = C/Z[6i] x C/<3,2i>; (<3,2+sqrt(-3)>)^2 = C/Z[sqrt(-27)] x C/<3,1+sqrt(-3)>; " +
                    std::to_string(triples) + " random conductor triples");
}

void c7(Verdict& v) {
  // fixed points: true exactly on (C/O)^3
  std::mt19937_64 rng(11);
  long checked = 0;
  for (long D : discriminants(2000)) {
    auto fs = enumerate_reduced(D);
    CurveClass p = principal(D);
    v.require(is_fixed_point(ProductAV({p, p, p})), "(C/O)^3 not fixed, D=" + std::to_string(D));
    for (int t = 0; t < 8; ++t) {
      Form a = fs[rng() % fs.size()], b = fs[rng() % fs.size()], c = fs[rng() % fs.size()];
      ProductAV X({CurveClass::from_form(a), CurveClass::from_form(b), CurveClass::from_form(c)});
      bool trivial = is_principal(compose(compose(a, b), c));
      v.require(is_fixed_point(X) == trivial, "same-order triple, D=" + std::to_string(D));
      v.require(is_fixed_point_direct(X) == trivial, "direct check, D=" + std::to_string(D));
      ++checked;
    }
  }
  Sampler s{std::mt19937_64(13), 2000};
  for (int t = 0; t < 300; ++t) {
    ProductAV X = s.product(s.field(), 3);
    auto chain = oracle::conductor_chain(X.conductors());
    bool equal = chain.front() == chain.back();
    bool trivial = false;
    if (equal) {
      Form acc = principal_form(X.factors[0].order.D);
      for (const auto& e : X.factors) acc = compose(acc, e.form);
      trivial = is_principal(acc);
    }
    v.require(is_fixed_point(X) == (equal && trivial), "mixed-order triple");
    ++checked;
  }

  // orbits: exponent formula and the length bound
  long seeds = 0, bound_violations = 0, exponent_failures = 0;
  std::string example;
  for (int t = 0; t < 200; ++t) {
    std::size_t n = 3 + t % 2;
    ProductAV X = s.product(s.field(), n);
    Orbit orb = jacobian_orbit(X);
    const Form& t0 = orb.steps[0].terminal.form;
    const long h = static_cast<long>(enumerate_reduced(t0.discriminant()).size());
    ProductAV cur = X;
    long e = 1;
    for (std::size_t k = 0; k < orb.steps.size() + 2; ++k) {
      if (n_decompose(cur).terminal.form != power(t0, e)) ++exponent_failures;
      e = (e * static_cast<long>(n - 1)) % (64 * h);
      cur = m_jacobian(cur, static_cast<int>(n) - 1);
    }
    if (static_cast<long>(orb.steps.size()) > h + 1) {
      if (bound_violations == 0) {
        example = "e.g. X = ";
        for (std::size_t i = 0; i < X.n(); ++i) example += (i ? " x " : "") + to_string(X.factors[i]);
        example += ": " + std::to_string(orb.steps.size()) + " steps, h(D_r1) = " + std::to_string(h);
      }
      ++bound_violations;
    }
    ++seeds;
  }
  // a fixed witness: conductors 1 | 2 | 6 in Q(i), all principal
  ProductAV W({CurveClass::principal(Order::from_conductor(Qi, 1)), CurveClass::principal(Order::from_conductor(Qi, 2)),
               CurveClass::principal(Order::from_conductor(Qi, 6))});
  std::size_t wlen = jacobian_orbit(W).steps.size();

  v.require(exponent_failures == 0, "terminal class differs from t^((n-1)^k)");
  v.require(bound_violations == 0 && wlen <= 2,
            "orbit length exceeds h(D_r1) + 1 on " + std::to_string(bound_violations) + " of " +
                std::to_string(seeds) + " seeds");
  v.notes.push_back(std::to_string(checked) + " fixed-point instances over all |D| <= 2000; " + std::to_string(seeds) +
                    " orbit seeds, exponent formula failures: " + std::to_string(exponent_failures));
  v.notes.push_back("orbit-length bound h(D_r1) + 1 violated on " + std::to_string(bound_violations) + " seeds; " +
                    example);
  v.notes.push_back("witness (1),(2),(6) principal over Q(i): " + std::to_string(wlen) +
                    " distinct steps against the bound 2; the conductor chain takes up to two steps to "
                    "settle, so h(D_r1) + 2 is the bound these runs support");
}

void c8(Verdict& v) {
  auto c108 = enumerate_reduced(D27);
  for (std::size_t i = 0; i < c108.size(); ++i) {
    for (std::size_t j = 0; j < c108.size(); ++j) {
      bool same = same_field_of_definition(CurveClass::from_form(c108[i]), CurveClass::from_form(c108[j]));
      v.require(same == (i == j), "Z[sqrt(-27)] classes");
    }
  }
  for (long D : {D48, -36L}) {
    for (const Form& x : enumerate_reduced(D)) {
      for (const Form& y : enumerate_reduced(D)) {
        v.require(same_field_of_definition(CurveClass::from_form(x), CurveClass::from_form(y)),
                  "one field for D=" + std::to_string(D));
      }
    }
  }
  std::vector<Form> forms;
  for (long D : discriminants(2000)) {
    for (const Form& f : enumerate_reduced(D)) forms.push_back(f);
  }
  auto checks = reality_sweep(forms, 192, Exec::parallel);
  long disagree = 0;
  for (const auto& c : checks) disagree += c.j_real != c.order_le_2;
  v.require(disagree == 0, std::to_string(disagree) + " reality disagreements");
  v.notes.push_back("Z[sqrt(-27)] (D=-108): three distinct fields; Z[sqrt(-48)] (D=-192) and D=-36: one field; " +
                    std::to_string(forms.size()) + " classes checked for reality at 192 bits");
}

SyntheticHodge random_hodge(std::mt19937_64& rng, int m) {
  std::uniform_int_distribution<std::int64_t> num(0, 6);
  std::vector<std::int64_t> h(static_cast<std::size_t>(m) + 1);
  for (std::size_t k = 0; k <= h.size() / 2; ++k) h[k] = h[h.size() - 1 - k] = num(rng);
  std::int64_t total = std::accumulate(h.begin(), h.end(), std::int64_t{0});
  if (m == 0) return SyntheticHodge(0, h, h[0]);
  if (h.back() == 0) return SyntheticHodge(m, h, 0);
  std::uniform_int_distribution<std::int64_t> rank(2 * h.back(), total);
  return SyntheticHodge(m, h, rank(rng));
}

void c9(Verdict& v) {
  std::mt19937_64 rng(17);
  const int N = 1000;
  for (int t = 0; t < N; ++t) {
    int m = 1 + static_cast<int>(rng() % 6);
    std::vector<SyntheticHodge> Hs;
    std::int64_t sum = 0;
    for (std::size_t i = 0, k = 1 + rng() % 4; i < k; ++i) {
      Hs.push_back(random_hodge(rng, m));
      sum += discrepancy(Hs.back());
    }
    v.require(discrepancy(direct_sum(Hs)) == sum, "additivity");

    SyntheticHodge H = Hs.front();
    int d = 1 + static_cast<int>(rng() % 4);
    std::map<int, SyntheticHodge> center, base;
    for (int i = 1; i <= d - 1 && m - 2 * i >= 0; ++i) center.emplace(i, random_hodge(rng, m - 2 * i));
    BlowupResult b = blowup(H, center, d);
    v.require(b.discrepancy_preserved && discrepancy(b.hodge) == discrepancy(H), "blowup");
    for (int w = m; w >= 0; w -= 2) base.emplace(w, w == m ? H : random_hodge(rng, w));
    v.require(discrepancy(projective_bundle(base, d, m)) == discrepancy(H), "projective bundle");
    for (std::int64_t p : {2, 3, 5, 7}) v.require(torsion_dim(H, p) == 2 * H.h0m() + discrepancy(H), "torsion");
  }
  for (int n = 2; n <= 6; ++n) {
    SyntheticHodge A = abelian_product_hodge(n, 2);
    v.require(A.kernel_rank() == n * n && has_jacobian(A), "abelian product NS rank");
  }
  v.notes.push_back(std::to_string(N) + " random instances per property; NS rank n^2 for n = 2..6");
}

void c10(Verdict& v) {
  Sampler s{std::mt19937_64(19), 2000};
  for (int t = 0; t < 100; ++t) {
    std::size_t n = 2 + t % 3;
    ProductAV X = s.product(s.field(), n);
    int m = 2 + static_cast<int>(s.rng() % (n - 1));
    v.require(kummer_jacobian(X, m).jacobian.factors == m_jacobian(X, m).factors, "Kummer passthrough");
    std::vector<CMLattice> ls;
    for (const auto& e : X.factors) ls.push_back(e.lattice());
    TwoMaximality tm = is_two_maximal(LatticeTuple(ls));
    long nn = static_cast<long>(n);
    v.require(tm.two_maximal && tm.ns_rank == nn * nn, "2-maximal with NS rank n^2");
  }
  auto q = [](FieldTag f, std::string_view x) { return parse_quad_elem(x, f); };
  v.require(!is_two_maximal({{q(Qi, "1"), q(Qi, "i")}, {q(Qs3, "1"), q(Qs3, "s")}}).two_maximal, "mixed fields");
  v.notes.push_back("out of scope: algebraicity of the tori, Kummer resolutions as geometry, singular K3 double covers");
  v.notes.push_back("checked shadows: Kummer passthrough equality and the 2-maximality criterion on class data");
}

}  // namespace

int main() {
  bool all = true;
  all &= run_criterion(1, "class group tables", 1, c1);
  all &= run_criterion(2, "closed-form j-values at 256 bits", 5, c2);
  all &= run_criterion(3, "Hilbert class polynomials vs exact expansion", 10, c3);
  all &= run_criterion(4, "lattice-product fixture", 0, c4);
  all &= run_criterion(5, "two-route Jacobian oracle", 60, c5);
  all &= run_criterion(6, "decomposition fixtures", 0, c6);
  all &= run_criterion(7, "fixed points and orbits", 0, c7);
  all &= run_criterion(8, "field-of-definition predicates and reality", 0, c8);
  all &= run_criterion(9, "Hodge calculus properties", 5, c9);
  all &= run_criterion(10, "out-of-scope claims and their computable shadows", 0, c10);
  return all ? 0 : 1;
}
