#pragma once

// Bookkeeping on synthetic Hodge data: a weight, Hodge numbers and the rank
// of the image of the integral lattice in H^{0,m}.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wj/error.hpp"

namespace wj {

class SyntheticHodge {
 public:
  // h[k] = h^{m-k,k}, so h.front() = h^{m,0} and h.back() = h^{0,m}.
  // Throws InvalidHodge unless h has m+1 nonnegative symmetric entries and
  // rankL fits: rankL >= 2*h^{0,m} if h^{0,m} > 0, rankL = 0 if h^{0,m} = 0,
  // rankL <= sum h.  In weight 0 the lattice spans H^{0,0} over the reals
  // and rankL = h^{0,0}.
  SyntheticHodge(int weight, std::vector<std::int64_t> h, std::int64_t rankL);

  static SyntheticHodge zero(int weight);

  int weight() const { return weight_; }
  const std::vector<std::int64_t>& hodge_numbers() const { return h_; }
  std::int64_t h(int p, int q) const;
  std::int64_t h0m() const { return h_.back(); }
  std::int64_t rankL() const { return rankL_; }
  std::int64_t total_rank() const;
  // Rank of the kernel of H_Z -> H^{0,m}; the Neron-Severi rank for m = 2.
  std::int64_t kernel_rank() const { return total_rank() - rankL_; }

  friend bool operator==(const SyntheticHodge&, const SyntheticHodge&) = default;

 private:
  int weight_;
  std::vector<std::int64_t> h_;
  std::int64_t rankL_;
};

// rankL - 2*h^{0,m}.  Throws BadWeight in weight 0.
std::int64_t discrepancy(const SyntheticHodge& H);
bool has_jacobian(const SyntheticHodge& H);

// Throws WeightMismatch, InvalidArgument for an empty list.
SyntheticHodge direct_sum(const std::vector<SyntheticHodge>& Hs);

// dim over F_p of the p-torsion of H^{0,m}/L.  Throws InvalidArgument
// unless p is prime.
std::int64_t torsion_dim(const SyntheticHodge& H, std::int64_t p);

// Tate twist H(-i): weight m+2i, Hodge numbers shifted by (i, i).
SyntheticHodge twist(const SyntheticHodge& H, int i);

// H^m of a P^d-bundle over X: sum over i of H^{m-2i}(X)(-i).  The map is
// keyed by weight.  Throws MissingSummand.
SyntheticHodge projective_bundle(const std::map<int, SyntheticHodge>& H_by_weight, int d, int m);

struct BlowupResult {
  SyntheticHodge hodge;
  bool discrepancy_preserved;
  // The induced map of intermediate Jacobian tori is an isomorphism: the
  // exceptional summands add nothing to H^{0,m} or to its lattice.
  bool torus_map_isomorphism;
};
// H^m of the blowup of X along a center Y of codimension d: H^m(X) plus
// H^{m-2i}(Y)(-i) for i = 1..d-1, center data keyed by i.  Throws
// MissingSummand.
BlowupResult blowup(const SyntheticHodge& H_X, const std::map<int, SyntheticHodge>& H_Y, int d);

// H = H0 + H' with H0 of type (r, 0, ..., 0, r) carrying all of L.  Throws
// NoJacobian when the discrepancy is positive.
std::pair<SyntheticHodge, SyntheticHodge> split_h0(const SyntheticHodge& H);

// H^m of a product of n elliptic curves with maximal Picard number.
// Throws BadWeight unless 2 <= m <= n.
SyntheticHodge abelian_product_hodge(int n, int m);

// "weight m; h = [h^{m,0}, ..., h^{0,m}]; rankL = k"
std::string to_string(const SyntheticHodge& H);
SyntheticHodge parse_hodge(std::string_view text);

}  // namespace wj
