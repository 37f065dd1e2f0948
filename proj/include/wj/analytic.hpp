#pragma once

// j-invariants by q-series, Hilbert class polynomials from their roots, and
// numeric checks of closed-form algebraic values.

#include <string>
#include <string_view>
#include <vector>

#include "wj/binforms.hpp"
#include "wj/cmlattice.hpp"
#include "wj/kernels.hpp"
#include "wj/precision.hpp"

namespace wj {

// j(tau) = E4(tau)^3 / Delta(tau), after moving tau into the standard
// fundamental domain.  Throws LowerHalfPlane unless Im(tau) > 0.
PrecComplex j_invariant(const PrecComplex& tau, prec_t prec);

// tau = (-b + sqrt(D))/(2a) for a reduced form, which already lies in the
// fundamental domain.
PrecComplex j_of_form(const Form& f, prec_t prec);
PrecComplex j_of_lattice(const CMLattice& L, prec_t prec);

struct ClassPolynomial {
  BigInt D;
  std::vector<BigInt> coefficients;  // ascending powers, monic
  prec_t prec_used = 0;
  std::size_t degree() const { return coefficients.size() - 1; }
  friend bool operator==(const ClassPolynomial& x, const ClassPolynomial& y) {
    return x.D == y.D && x.coefficients == y.coefficients;
  }
};

// Monic integer polynomial whose roots are j over the reduced forms of D.
// Working precision is raised above the coefficient size and doubled until
// every coefficient is within 0.25 of an integer; PrecisionExhausted past
// 65536 bits.
ClassPolynomial hilbert_class_polynomial(const BigInt& D, prec_t prec, Exec exec = Exec::parallel);

// Integers with + - * / ^ (integer exponent), parentheses, sqrt(x),
// cbrt(x), root4(x), i and zeta3 = (-1 + sqrt(-3))/2.  Evaluated with 64
// guard bits and returned at `prec`.  Throws ParseError.
PrecComplex eval_expression(std::string_view expr, prec_t prec);

// |j(L) - expr| < 2^(16 - prec) * |expr|
bool verify_exact(const CMLattice& L, std::string_view expr, prec_t prec);
// |Im j(L)| < 2^(16 - prec) * (1 + |j(L)|)
bool j_is_real(const CMLattice& L, prec_t prec);
bool j_is_real(const PrecComplex& j, prec_t prec);

struct AppendixFixture {
  std::string name;
  long D;
  std::string lattice;  // "<g1;g2>@d"
  std::string exact_expr;
};
const std::vector<AppendixFixture>& appendix_fixtures();

}  // namespace wj
