#pragma once

// Test-only lattice oracles that never touch the library's HNF code.

#include <optional>
#include <vector>

#include "wj/quadfield.hpp"

namespace oracle {

using wj::BigInt;
using wj::BigRational;
using wj::QuadElem;

struct Vec {
  BigInt x, y;
};

// Integer coordinates of the generators over a common denominator.
inline std::vector<Vec> integer_coords(const std::vector<QuadElem>& gens, BigInt& L) {
  L = 1;
  for (const auto& g : gens) {
    mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), g.x().get_den().get_mpz_t());
    mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), g.y().get_den().get_mpz_t());
  }
  std::vector<Vec> out;
  for (const auto& g : gens) {
    BigRational x = g.x() * L, y = g.y() * L;
    out.push_back({x.get_num(), y.get_num()});
  }
  return out;
}

// Brute-force Hermite form of the Z-span of integer vectors in Z^2:
// h11 = gcd of first coordinates, h22 = (gcd of all 2x2 minors)/h11, and h12
// found by scanning [0, h22) for the unique y with (h11, y) in the span.
struct Hnf {
  BigInt h11, h12, h22;
};

inline bool in_span_of_basis(const Vec& v, const Vec& b1, const Vec& b2) {
  BigInt det = b1.x * b2.y - b1.y * b2.x;
  BigInt s = v.x * b2.y - v.y * b2.x;
  BigInt t = b1.x * v.y - b1.y * v.x;
  return mpz_divisible_p(s.get_mpz_t(), det.get_mpz_t()) && mpz_divisible_p(t.get_mpz_t(), det.get_mpz_t());
}

inline std::optional<Hnf> brute_hnf(const std::vector<Vec>& vs) {
  BigInt h11 = 0, minors = 0;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    h11 = gcd(h11, vs[i].x);
    for (std::size_t j = i + 1; j < vs.size(); ++j) minors = gcd(minors, vs[i].x * vs[j].y - vs[i].y * vs[j].x);
  }
  if (h11 == 0 || minors == 0) return std::nullopt;
  BigInt h22 = minors / h11;
  // (0, h22) lies in the span; find h12 by checking that every generator
  // is an integer combination of (h11, y) and (0, h22).
  for (BigInt y = 0; y < h22; ++y) {
    bool ok = true;
    for (const auto& v : vs) ok = ok && in_span_of_basis(v, {h11, y}, {0, h22});
    if (ok) return Hnf{h11, y, h22};
  }
  return std::nullopt;
}

}  // namespace oracle
