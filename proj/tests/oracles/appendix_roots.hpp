#pragma once

// Closed-form CM j-values, written directly as exact radical-algebra
// elements, and the class polynomials obtained by expanding them.

#include <optional>
#include <stdexcept>
#include <vector>

#include "oracles/radical_algebra.hpp"

namespace oracle {

struct RootSet {
  long D;
  const Radicals* radicals;
  std::vector<RadElem> roots;
};

inline RootSet appendix_roots(long D) {
  auto z = [](const char* s) { return mpq_class(s); };
  switch (D) {
    case -4: {
      static const Radicals r{{}, {}};
      return {D, &r, {RadElem(&r, 1728)}};
    }
    case -36: {
      static const Radicals r{{2}, {3}};  // sqrt(3)
      RadElem s3 = RadElem::gen(&r, 0);
      RadElem a(&r, 76771008), b = z("44330496") * s3;
      return {D, &r, {a + b, a - b}};
    }
    case -144: {
      // s = 12^(1/4), i; sqrt(3) = s^2/2
      static const Radicals r{{4, 2}, {12, -1}};
      RadElem s = RadElem::gen(&r, 0), i = RadElem::gen(&r, 1);
      RadElem s3 = mpq_class(1, 2) * (s * s);
      RadElem P(&r, z("5894625992142600")), Q = z("3403263903336192") * s3;
      RadElem R = z("3167093925247392") * s, S = z("914261265145368") * (s * s * s);
      return {D, &r, {P + Q + R + S, P - Q - i * (R - S), P - Q + i * (R - S), P + Q - R - S}};
    }
    case -108: {
      // c = 2^(1/3), t = sqrt(-3), zeta = (-1 + t)/2
      static const Radicals r{{3, 2}, {2, -3}};
      RadElem c = RadElem::gen(&r, 0), t = RadElem::gen(&r, 1);
      RadElem zeta = mpq_class(1, 2) * (t - RadElem(&r, 1));
      auto j = [&](const RadElem& x) {
        return z("31710790944000") * (x * x) + z("39953093016000") * x + RadElem(&r, z("50337742902000"));
      };
      return {D, &r, {j(c), j(zeta * zeta * c), j(zeta * c)}};
    }
    case -192: {
      static const Radicals r{{2, 2}, {2, 3}};  // sqrt(2), sqrt(3)
      RadElem s2 = RadElem::gen(&r, 0), s3 = RadElem::gen(&r, 1), s6 = s2 * s3;
      RadElem A = z("820762881440077125") * s6, B = z("1160733998424384000") * s3;
      RadElem C = z("1421603011620136125") * s2, E(&r, z("2010450259344609000"));
      return {D, &r, {A + B + C + E, -A - B + C + E, -A + B - C + E, A - B - C + E}};
    }
    default:
      throw std::invalid_argument("no closed-form roots recorded for this discriminant");
  }
}

inline std::optional<std::vector<mpz_class>> expanded_class_polynomial(long D) {
  RootSet rs = appendix_roots(D);
  return expand_roots(rs.radicals, rs.roots);
}

}  // namespace oracle
