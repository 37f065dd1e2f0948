#pragma once

// Divisibility chain of a multiset of conductors by sorting p-adic
// valuations prime by prime, independent of the pair-reduction rule.

#include <algorithm>
#include <map>
#include <vector>

#include <gmpxx.h>

namespace oracle {

inline std::vector<mpz_class> conductor_chain(const std::vector<mpz_class>& fs) {
  std::map<mpz_class, std::vector<unsigned long>> vals;
  for (const auto& f : fs) {
    mpz_class r = f;
    for (mpz_class p = 2; p * p <= r; ++p) {
      while (r % p == 0) {
        r /= p;
        vals[p];
      }
    }
    if (r > 1) vals[r];
  }
  std::vector<mpz_class> chain(fs.size(), 1);
  for (auto& [p, v] : vals) {
    for (const auto& f : fs) {
      mpz_class r = f;
      unsigned long k = 0;
      while (r % p == 0) {
        r /= p;
        ++k;
      }
      v.push_back(k);
    }
    std::sort(v.begin(), v.end());
    for (std::size_t i = 0; i < fs.size(); ++i) {
      mpz_class pk;
      mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), v[i]);
      chain[i] *= pk;
    }
  }
  return chain;
}

}  // namespace oracle
