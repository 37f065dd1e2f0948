#include "wj/cli/run.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <memory>
#include <optional>

#include <CLI11.hpp>

#include "wj/analytic.hpp"
#include "wj/cli/cache.hpp"
#include "wj/cli/json.hpp"
#include "wj/hodgecalc.hpp"
#include "wj/jacobians.hpp"

namespace wj::cli {

namespace {

struct Options {
  std::string D;
  int m = 2;
  prec_t prec = 256;
  std::string cache;
  std::string curves;
  std::string lattices;
  std::string fixtures;
  std::vector<std::string> positional;
};

BigInt parse_discriminant(const std::string& s) {
  BigInt D;
  if (s.empty() || D.set_str(s, 10) != 0) fail(Errc::ParseError, "discriminant must be an integer, got '" + s + "'");
  check_discriminant(D);
  return D;
}

std::unique_ptr<ClassCache> open_cache(const Options& o) {
  std::string path = o.cache;
  if (path.empty()) {
    if (const char* env = std::getenv("WJ_CACHE")) path = env;
  }
  if (path.empty()) return nullptr;
  return std::make_unique<ClassCache>(path);
}

CacheEntry class_entry(const BigInt& D, ClassCache* cache) {
  if (cache) {
    if (const CacheEntry* hit = cache->class_data(D)) return *hit;
  }
  ClassGroup G(D);
  CacheEntry e{D, G.elements(), G.structure(), {}, 0};
  if (cache) cache->append(e);
  return e;
}

json order_json(const Order& o) { return {{"D", int_json(o.D)}, {"conductor", int_json(o.f)}, {"d", o.field.d}}; }

json class_json(const CurveClass& e) {
  return {{"class", to_string(e)}, {"D", int_json(e.order.D)}, {"form", form_json(e.form)}};
}

json product_json(const ProductAV& X) {
  json out = json::array();
  for (const auto& e : X.factors) out.push_back(to_string(e));
  return out;
}

json decomposition_json(const Decomposition& d) {
  json j;
  j["conductors"] = json::array();
  for (const auto& c : d.conductors) j["conductors"].push_back(int_json(c));
  j["terminal"] = class_json(d.terminal);
  if (d.primitivity_degree) j["primitivity_degree"] = int_json(*d.primitivity_degree);
  return j;
}

json complex_json(const PrecComplex& z, prec_t prec) {
  const int digits = static_cast<int>(static_cast<double>(prec > 16 ? prec - 16 : prec) * 0.30103);
  return {{"re", z.re().to_string(digits)}, {"im", z.im().to_string(digits)}};
}

// Curves from --curves, or else from --lattices through their ideal classes.
ProductAV curves_input(const Options& o) {
  if (!o.curves.empty()) return parse_product(o.curves);
  if (!o.lattices.empty()) {
    std::vector<CurveClass> cs;
    for (const auto& L : parse_lattice_tuple(o.lattices).components) cs.push_back(CurveClass::from_lattice(L));
    return ProductAV(std::move(cs));
  }
  fail(Errc::InvalidArgument, "expected --curves \"(D:a,b,c),...\" or --lattices \"[<g1;g2>@d, ...]\"");
}

LatticeTuple lattices_input(const Options& o) {
  if (!o.lattices.empty()) return parse_lattice_tuple(o.lattices);
  if (!o.curves.empty()) {
    std::vector<CMLattice> ls;
    for (const auto& e : parse_product(o.curves).factors) ls.push_back(e.lattice());
    return LatticeTuple(std::move(ls));
  }
  fail(Errc::InvalidArgument, "expected --lattices \"[<g1;g2>@d, ...]\" or --curves \"(D:a,b,c),...\"");
}

json lattices_echo(const LatticeTuple& T) {
  json out = json::array();
  for (const auto& L : T.components) out.push_back(to_string(L));
  return out;
}

struct Outcome {
  json input;
  json result;
  int status = 0;
};

using Command = std::function<Outcome(const Options&)>;

Outcome cmd_classgroup(const Options& o) {
  BigInt D = parse_discriminant(o.D);
  auto cache = open_cache(o);
  CacheEntry e = class_entry(D, cache.get());
  json r;
  r["D"] = int_json(D);
  r["h"] = e.forms.size();
  r["structure"] = e.structure;
  r["elements"] = json::array();
  r["orders"] = json::array();
  for (const auto& f : e.forms) {
    r["elements"].push_back(form_json(f));
    r["orders"].push_back(element_order(f));
  }
  return {{{"D", int_json(D)}}, r};
}

Form one_form(const Options& o, std::size_t k) {
  if (o.positional.size() <= k) fail(Errc::InvalidArgument, "missing form argument \"a,b,c\"");
  return parse_form(o.positional[k]);
}

Outcome cmd_reduce(const Options& o) {
  Form f = one_form(o, 0);
  Form r = reduce(f);
  return {{{"form", form_json(f)}},
          {{"D", int_json(f.discriminant())}, {"reduced", form_json(r)}, {"was_reduced", is_reduced(f)}}};
}

Outcome cmd_compose(const Options& o) {
  Form f = one_form(o, 0), g = one_form(o, 1);
  Form h = compose(f, g);
  return {{{"forms", json::array({form_json(f), form_json(g)})}},
          {{"D", int_json(h.discriminant())}, {"composed", form_json(h)}, {"order", element_order(h)}}};
}

Outcome cmd_latprod(const Options& o) {
  LatticeTuple T = lattices_input(o);
  CMLattice p = T.components.front();
  for (std::size_t k = 1; k < T.n(); ++k) p = lattice_product(p, T.components[k]);
  IdealClass c = ideal_class(p);
  return {{{"lattices", lattices_echo(T)}},
          {{"product", to_string(p)}, {"order", order_json(c.order)}, {"class", form_json(c.form)}}};
}

Outcome cmd_homothety(const Options& o) {
  LatticeTuple T = lattices_input(o);
  if (T.n() != 2) fail(Errc::InvalidArgument, "homothety compares exactly two lattices");
  const CMLattice &x = T.components[0], &y = T.components[1];
  IdealClass cx = ideal_class(x), cy = ideal_class(y);
  return {{{"lattices", lattices_echo(T)}},
          {{"homothetic", is_homothetic(x, y)},
           {"classes", json::array({{{"order", order_json(cx.order)}, {"form", form_json(cx.form)}},
                                    {{"order", order_json(cy.order)}, {"form", form_json(cy.form)}}})}}};
}

Outcome cmd_endring(const Options& o) {
  LatticeTuple T = lattices_input(o);
  json items = json::array();
  for (const auto& L : T.components) {
    IdealClass c = ideal_class(L);
    items.push_back({{"lattice", to_string(L)}, {"order", order_json(c.order)}, {"class", form_json(c.form)}});
  }
  return {{{"lattices", lattices_echo(T)}}, {{"lattices", items}}};
}

Outcome cmd_jacobian(const Options& o) {
  ProductAV X = curves_input(o);
  ProductAV J = m_jacobian(X, o.m, JacobianRoute::classes);
  bool agree = J.factors == m_jacobian(X, o.m, JacobianRoute::iterated_pairs).factors &&
               J.factors == m_jacobian(X, o.m, JacobianRoute::lattices).factors;
  json factors = json::array();
  for (const auto& e : J.factors) factors.push_back(class_json(e));
  return {{{"curves", product_json(X)}, {"m", o.m}},
          {{"factors", factors}, {"n_factors", J.n()}, {"routes_agree", agree}}};
}

Outcome cmd_decompose(const Options& o) {
  ProductAV X = curves_input(o);
  json r;
  r["decomposition"] = decomposition_json(n_decompose(X));
  if (X.n() >= 2) {
    std::vector<CMLattice> ls;
    for (const auto& e : X.factors) ls.push_back(e.lattice());
    TwoMaximality t = is_two_maximal(LatticeTuple(ls));
    r["two_maximal"] = {{"value", t.two_maximal}, {"reason", t.reason}, {"ns_rank", t.ns_rank}};
  }
  if (X.n() == 2) {
    const CurveClass &a = X.factors[0], &b = X.factors[1];
    SurfaceReport s = surface_decompose(a, b);
    json sj = {{"big_order", order_json(s.big_order)},
               {"jacobian", class_json(s.jacobian)},
               {"primitivity_degree", int_json(s.primitivity_degree)}};
    if (a.order == b.order) sj["definable_over_jacobian_field"] = product_definable_over_jacobian_field(a, b);
    r["surface"] = sj;
  }
  return {{{"curves", product_json(X)}}, r};
}

Outcome cmd_orbit(const Options& o) {
  ProductAV X = curves_input(o);
  Orbit orb = jacobian_orbit(X);
  json steps = json::array();
  for (const auto& d : orb.steps) steps.push_back(decomposition_json(d));
  return {{{"curves", product_json(X)}},
          {{"steps", steps}, {"length", orb.steps.size()}, {"cycle_start", orb.cycle_start}}};
}

Outcome cmd_fixedpoint(const Options& o) {
  ProductAV X = curves_input(o);
  return {{{"curves", product_json(X)}}, {{"fixed_point", is_fixed_point(X)}, {"direct", is_fixed_point_direct(X)}}};
}

Outcome cmd_fod(const Options& o) {
  ProductAV X = curves_input(o);
  if (X.n() != 2) fail(Errc::InvalidArgument, "fod compares exactly two curves");
  const CurveClass &a = X.factors[0], &b = X.factors[1];
  json r;
  if (a.order == b.order) {
    r["same_field_of_definition"] = same_field_of_definition(a, b);
    r["definable_over_jacobian_field"] = product_definable_over_jacobian_field(a, b);
  } else if (b.order.f % a.order.f == 0) {
    r["first_field_inside_second"] = field_contains(a, b);
  } else if (a.order.f % b.order.f == 0) {
    r["second_field_inside_first"] = field_contains(b, a);
  } else {
    fail(Errc::NotADivisor, "conductors " + a.order.f.get_str() + " and " + b.order.f.get_str() +
                                " are not comparable under divisibility");
  }
  return {{{"curves", product_json(X)}}, r};
}

Outcome cmd_jinv(const Options& o) {
  LatticeTuple T = lattices_input(o);
  json items = json::array();
  for (const auto& L : T.components) {
    PrecComplex j = j_of_lattice(L, o.prec);
    json item = complex_json(j, o.prec);
    item["lattice"] = to_string(L);
    item["real"] = j_is_real(j, o.prec);
    items.push_back(item);
  }
  return {{{"lattices", lattices_echo(T)}, {"prec", o.prec}}, {{"values", items}}};
}

Outcome cmd_hcp(const Options& o) {
  BigInt D = parse_discriminant(o.D);
  auto cache = open_cache(o);
  std::vector<BigInt> coeffs;
  if (const CacheEntry* hit = cache ? cache->class_polynomial(D, o.prec) : nullptr) {
    coeffs = hit->hcp;
  } else {
    coeffs = hilbert_class_polynomial(D, o.prec).coefficients;
    if (cache) {
      CacheEntry e = class_entry(D, nullptr);
      e.hcp = coeffs;
      e.prec = o.prec;
      cache->append(e);
    }
  }
  json cs = json::array();
  for (const auto& c : coeffs) cs.push_back(int_json(c));
  return {{{"D", int_json(D)}, {"prec", o.prec}}, {{"D", int_json(D)}, {"degree", coeffs.size() - 1}, {"coefficients", cs}}};
}

Outcome cmd_hodge(const Options& o) {
  if (o.positional.empty()) fail(Errc::InvalidArgument, "expected \"weight m; h = [..]; rankL = k\"");
  SyntheticHodge H = parse_hodge(o.positional[0]);
  json r = {{"weight", H.weight()},
            {"h", H.hodge_numbers()},
            {"rankL", H.rankL()},
            {"total_rank", H.total_rank()},
            {"kernel_rank", H.kernel_rank()}};
  if (H.weight() > 0) {
    r["discrepancy"] = discrepancy(H);
    r["has_jacobian"] = has_jacobian(H);
    r["torsion_dim"] = torsion_dim(H, 2);
    if (has_jacobian(H)) {
      auto [h0, rest] = split_h0(H);
      r["split"] = {{"h0", to_string(h0)}, {"rest", to_string(rest)}};
    }
  }
  return {{{"hodge", to_string(H)}}, r};
}

Outcome cmd_kummer(const Options& o) {
  ProductAV X = curves_input(o);
  KummerReport k = kummer_jacobian(X, o.m);
  json factors = json::array();
  for (const auto& e : k.jacobian.factors) factors.push_back(class_json(e));
  return {{{"curves", product_json(X)}, {"m", o.m}}, {{"jacobian", factors}, {"labels", k.labels}}};
}

std::vector<AppendixFixture> load_fixtures(const std::string& path) {
  if (path.empty()) return appendix_fixtures();
  std::ifstream in(path);
  if (!in) fail(Errc::InvalidArgument, "cannot read fixture file " + path);
  json doc = json::parse(in, nullptr, false);
  if (doc.is_discarded() || !doc.contains("fixtures")) fail(Errc::ParseError, "malformed fixture file " + path);
  std::vector<AppendixFixture> out;
  try {
    for (const auto& f : doc["fixtures"]) {
      out.push_back({f.at("name").get<std::string>(), f.at("D").get<long>(), f.at("lattice").get<std::string>(),
                     f.at("exact_expr").get<std::string>()});
    }
  } catch (const json::exception& e) {
    fail(Errc::ParseError, std::string("malformed fixture record: ") + e.what());
  }
  return out;
}

Outcome cmd_verify_appendix(const Options& o) {
  json items = json::array();
  bool all = true;
  for (const auto& f : load_fixtures(o.fixtures)) {
    CMLattice L = parse_lattice(f.lattice);
    bool order_ok = endomorphism_order(L).D == f.D;
    bool ok = verify_exact(L, f.exact_expr, o.prec);
    double err = log2_relative_error(j_of_lattice(L, o.prec).with_prec(o.prec + 64),
                                     eval_expression(f.exact_expr, o.prec + 64));
    all = all && ok && order_ok;
    items.push_back({{"name", f.name},
                     {"D", f.D},
                     {"lattice", f.lattice},
                     {"pass", ok && order_ok},
                     {"log2_rel_err", std::max(err, -1e6)}});
  }
  return {{{"prec", o.prec}}, {{"fixtures", items}, {"count", items.size()}, {"all_pass", all}}, all ? 0 : 1};
}

json error_record(std::string_view code, const std::string& message) {
  return {{"error", {{"code", code}, {"message", message}}}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();

  CLI::App app{"Class groups, lattices and Jacobians of CM abelian varieties", "wj"};
  app.require_subcommand(1);
  Options o;
  std::string selected;
  Command command;

  auto add = [&](const std::string& name, const std::string& help, Command fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->callback([&, name, fn] {
      selected = name;
      command = fn;
    });
    return sub;
  };
  auto with_D = [&](CLI::App* s) { s->add_option("-D,--discriminant", o.D, "negative discriminant")->required(); };
  auto with_prec = [&](CLI::App* s) {
    s->add_option("--prec", o.prec, "working precision in bits")->check(CLI::Range(64u, 65536u));
  };
  auto with_cache = [&](CLI::App* s) { s->add_option("--cache", o.cache, "JSON-lines cache file (or $WJ_CACHE)"); };
  auto with_curves = [&](CLI::App* s) {
    s->add_option("--curves", o.curves, "curve classes \"(D:a,b,c),(D:a,b,c),...\"");
    s->add_option("--lattices", o.lattices, "lattices \"[<g1;g2>@d, ...]\"");
  };
  auto with_m = [&](CLI::App* s) { s->add_option("-m,--weight", o.m, "weight m, 2 <= m <= n"); };
  auto with_pos = [&](CLI::App* s, const std::string& what) { s->add_option("args", o.positional, what); };

  CLI::App* s;
  s = add("classgroup", "class group of a discriminant", cmd_classgroup);
  with_D(s);
  with_cache(s);
  s = add("reduce", "reduce a form a,b,c", cmd_reduce);
  with_pos(s, "form a,b,c");
  s = add("compose", "compose two forms", cmd_compose);
  with_pos(s, "forms a,b,c a,b,c");
  s = add("latprod", "product of lattices", cmd_latprod);
  with_curves(s);
  s = add("homothety", "are two lattices homothetic", cmd_homothety);
  with_curves(s);
  s = add("endring", "endomorphism orders and ideal classes of lattices", cmd_endring);
  with_curves(s);
  s = add("jacobian", "m-Jacobian of a product of CM elliptic curves", cmd_jacobian);
  with_curves(s);
  with_m(s);
  s = add("decompose", "canonical decomposition of a product", cmd_decompose);
  with_curves(s);
  s = add("orbit", "orbit under the (n-1)-Jacobian", cmd_orbit);
  with_curves(s);
  s = add("fixedpoint", "is X isomorphic to its (n-1)-Jacobian", cmd_fixedpoint);
  with_curves(s);
  s = add("fod", "field-of-definition predicates for two curves", cmd_fod);
  with_curves(s);
  s = add("jinv", "j-invariants of lattices", cmd_jinv);
  with_curves(s);
  with_prec(s);
  s = add("hcp", "Hilbert class polynomial", cmd_hcp);
  with_D(s);
  with_prec(s);
  with_cache(s);
  s = add("hodge", "Jacobian discrepancy of Hodge data", cmd_hodge);
  with_pos(s, "\"weight m; h = [..]; rankL = k\"");
  s = add("kummer", "Jacobians of the Kummer variety", cmd_kummer);
  with_curves(s);
  with_m(s);
  s = add("verify-appendix", "check the closed-form j-value fixtures", cmd_verify_appendix);
  with_prec(s);
  s->add_option("--fixtures", o.fixtures, "fixture JSON file (default: built-in list)");
  for (CLI::App* sub : app.get_subcommands({})) sub->add_flag("--json", "JSON output (the default and only format)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    out << error_record("UsageError", e.what()).dump(2) << '\n';
    return 2;
  }

  try {
    Outcome r = command(o);
    const double ms = std::chrono::duration<double, std::milli>(clock::now() - start).count();
    json report = {{"schema", 1},
                   {"command", selected},
                   {"input", r.input},
                   {"result", r.result},
                   {"timings", {{"total_ms", ms}}}};
    out << report.dump(2) << '\n';
    return r.status;
  } catch (const Error& e) {
    out << error_record(errc_name(e.code()), e.what()).dump(2) << '\n';
    err << "wj " << selected << ": " << e.what() << '\n';
    return e.code() == Errc::PrecisionExhausted || e.code() == Errc::CorruptCache ? 1 : 2;
  } catch (const std::exception& e) {
    out << error_record("Internal", e.what()).dump(2) << '\n';
    err << "wj " << selected << ": internal error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace wj::cli
