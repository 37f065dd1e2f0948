#pragma once

// Rank-2 lattices inside an imaginary quadratic field, their endomorphism
// orders and products, and the wedge-image lattices of a product of tori.

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wj/binforms.hpp"
#include "wj/quadfield.hpp"

namespace wj {

class CMLattice;

// Z + f*O_K inside Q(sqrt(d)); D = f^2 * dK.
struct Order {
  FieldTag field;
  BigInt f = 1;
  BigInt D = -4;

  static Order from_conductor(FieldTag field, const BigInt& f);
  static Order from_discriminant(const BigInt& D);

  // <1, f*omega> with O_K = Z[omega], omega = (dK + sqrt(dK))/2.
  CMLattice lattice() const;

  friend bool operator==(const Order& x, const Order& y) { return x.field == y.field && x.f == y.f; }
};

class CMLattice {
 public:
  const FieldTag& field() const { return g1_.field(); }
  const QuadElem& g1() const { return g1_; }
  const QuadElem& g2() const { return g2_; }
  // g2/g1, with positive imaginary part.
  QuadElem tau() const { return g2_ / g1_; }

  friend bool operator==(const CMLattice& x, const CMLattice& y) { return x.g1_ == y.g1_ && x.g2_ == y.g2_; }

 private:
  CMLattice(QuadElem g1, QuadElem g2) : g1_(std::move(g1)), g2_(std::move(g2)) {}
  friend CMLattice lattice_from_generators(const std::vector<QuadElem>& gens);

  QuadElem g1_;
  QuadElem g2_;
};

// Canonical basis of the Z-span of the generators: Hermite normal form of
// the integer coordinate matrix over the common denominator L, giving
// g1 = (h11 + h12*sqrt(d))/L and g2 = h22*sqrt(d)/L with 0 <= h12 < h22.
// Throws DegenerateBasis when the span has rank < 2, FieldMismatch when the
// generators live in different fields.
CMLattice lattice_from_generators(const std::vector<QuadElem>& gens);
inline CMLattice canonicalize(const QuadElem& g1, const QuadElem& g2) { return lattice_from_generators({g1, g2}); }

Order endomorphism_order(const CMLattice& L);

CMLattice lattice_product(const CMLattice& x, const CMLattice& y);
CMLattice scale(const CMLattice& L, const QuadElem& s);

struct IdealClass {
  Order order;
  Form form;
  friend bool operator==(const IdealClass&, const IdealClass&) = default;
};

// Form (a, b, c) <-> lattice <a, (-b + sqrt(D))/2>.
IdealClass ideal_class(const CMLattice& L);
CMLattice form_to_lattice(const Form& f);

bool is_homothetic(const CMLattice& x, const CMLattice& y);
CMLattice conjugate_lattice(const CMLattice& L);
// conj(L) scaled so that lattice_product(L, inverse_class(L)) == End(L).
CMLattice inverse_class(const CMLattice& L);

struct LatticeTuple {
  std::vector<CMLattice> components;

  // Throws InvalidArgument when empty, FieldMismatch on mixed fields.
  explicit LatticeTuple(std::vector<CMLattice> comps);
  std::size_t n() const { return components.size(); }
  const FieldTag& field() const { return components.front().field(); }
};

// Image of the m-th exterior power of the integral cohomology in the
// antiholomorphic part, one lattice per m-subset of components (lex order).
// Throws BadWeight unless 2 <= m <= n.
std::vector<CMLattice> image_lattice_L(const LatticeTuple& T, int m);
// Rank over Z of that image, computed from all C(2n, m) wedge vectors.
std::size_t wedge_image_rank(const LatticeTuple& T, int m);

// "<g1, g2>" with field elements written as x+y*sqrt(d).
std::string to_string(const CMLattice& L);
// Accepts "<g1, g2>" (or with angle brackets U+27E8/U+27E9, or ';' as the
// separator), optionally followed by "@d" to fix the field for shorthand
// elements such as "<3;1+2i>@-1".
CMLattice parse_lattice(std::string_view text);
CMLattice parse_lattice(std::string_view text, FieldTag field);
std::string to_string(const LatticeTuple& T);
LatticeTuple parse_lattice_tuple(std::string_view text);

}  // namespace wj
