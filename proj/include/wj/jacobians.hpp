#pragma once

// Higher-weight Jacobians of products of CM elliptic curves, expressed
// through class groups of orders in one imaginary quadratic field.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wj/binforms.hpp"
#include "wj/cmlattice.hpp"

namespace wj {

// Isomorphism class of an elliptic curve with CM by `order`.
struct CurveClass {
  Order order;
  Form form;

  // Reduces the form; the order is read off its discriminant.
  static CurveClass from_form(const Form& f);
  static CurveClass from_lattice(const CMLattice& L);
  static CurveClass principal(const Order& o);

  CMLattice lattice() const { return form_to_lattice(form); }
  bool is_principal() const { return form.a() == 1; }

  friend bool operator==(const CurveClass& x, const CurveClass& y) { return x.order == y.order && x.form == y.form; }
};

// E_1 x ... x E_n, all over one field.
struct ProductAV {
  std::vector<CurveClass> factors;

  // Throws InvalidArgument when empty, FieldMismatch on mixed fields.
  explicit ProductAV(std::vector<CurveClass> f);
  std::size_t n() const { return factors.size(); }
  const FieldTag& field() const { return factors.front().order.field; }
  std::vector<BigInt> conductors() const;
};

// Class of O_c * Lambda in Cl(O_c).  Throws NotADivisor unless c | f.
CurveClass phi(const CurveClass& cls, const BigInt& c);

// Brauer-Jacobian of E1 x E2: phi(e1, c) * phi(e2, c), c = gcd(f1, f2).
CurveClass brauer_jacobian_pair(const CurveClass& e1, const CurveClass& e2);

enum class JacobianRoute {
  classes,         // prod over S of phi_{d_S, f_i}([E_i])
  iterated_pairs,  // nested brauer_jacobian_pair over S
  lattices,        // ideal classes of the wedge-image lattices
};

// One factor per m-subset of {1..n}, in lexicographic order.  Throws
// BadWeight unless 2 <= m <= n.
ProductAV m_jacobian(const ProductAV& X, int m, JacobianRoute route = JacobianRoute::classes);

struct TwoMaximality {
  bool two_maximal = false;
  std::string reason;
  // Only meaningful when two_maximal.
  long ns_rank = 0;
  long rank_L2 = 0;
};
TwoMaximality is_two_maximal(const std::vector<std::pair<QuadElem, QuadElem>>& bases);
TwoMaximality is_two_maximal(const LatticeTuple& T);

struct SurfaceReport {
  Order big_order;
  CurveClass jacobian;
  BigInt primitivity_degree;
  friend bool operator==(const SurfaceReport& x, const SurfaceReport& y) {
    return x.big_order == y.big_order && x.jacobian == y.jacobian && x.primitivity_degree == y.primitivity_degree;
  }
};
SurfaceReport surface_decompose(const CurveClass& e1, const CurveClass& e2);

// X = C/O_{r_n} x ... x C/O_{r_2} x E with r_1 | r_2 | ... | r_n and
// [E] = terminal in Cl(O_{r_1}).
struct Decomposition {
  std::vector<BigInt> conductors;
  CurveClass terminal;
  std::optional<BigInt> primitivity_degree;  // n = 2 only
  friend bool operator==(const Decomposition& x, const Decomposition& y) {
    return x.conductors == y.conductors && x.terminal == y.terminal && x.primitivity_degree == y.primitivity_degree;
  }
};
Decomposition n_decompose(const ProductAV& X);

// Throws FieldMismatch, DimensionMismatch.
bool is_isomorphic(const ProductAV& X, const ProductAV& Y);

// X isomorphic to its (n-1)-Jacobian.  Throws DimensionTooSmall for n < 3.
bool is_fixed_point(const ProductAV& X);
// Same question answered by computing the Jacobian and comparing.
bool is_fixed_point_direct(const ProductAV& X);

struct Orbit {
  std::vector<Decomposition> steps;  // X, J(X), J(J(X)), ... up to the first repeat
  std::size_t cycle_start = 0;       // index the first repeated decomposition equals
};
Orbit jacobian_orbit(const ProductAV& X);

// [E1]^2 == [E2]^2.  Throws OrderMismatch for different orders.
bool same_field_of_definition(const CurveClass& e1, const CurveClass& e2);
// Q(j(e_small)) inside Q(j(e_big)) for the order of e_small containing that
// of e_big.  Throws NotADivisor unless f_small | f_big.
bool field_contains(const CurveClass& e_small, const CurveClass& e_big);
// Throws PrimitivityViolation unless the orders agree.
bool product_definable_over_jacobian_field(const CurveClass& e1, const CurveClass& e2);

struct KummerReport {
  ProductAV jacobian;
  std::vector<std::string> labels;
};
// The Kummer variety of X shares the m-Jacobians of X.
KummerReport kummer_jacobian(const ProductAV& X, int m);

// "(D:a,b,c)"
std::string to_string(const CurveClass& e);
CurveClass parse_curve_class(std::string_view text);
// "(D:a,b,c),(D:a,b,c),..."
ProductAV parse_product(std::string_view text);

}  // namespace wj
