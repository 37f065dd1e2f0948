#include "wj/hodgecalc.hpp"

#include <numeric>
#include <regex>
#include <sstream>

namespace wj {

namespace {

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t q = 2; q * q <= p; ++q) {
    if (p % q == 0) return false;
  }
  return true;
}

std::string numbers(const std::vector<std::int64_t>& h) {
  std::string s = "[";
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (i > 0) s += ", ";
    s += std::to_string(h[i]);
  }
  return s + "]";
}

}  // namespace

SyntheticHodge::SyntheticHodge(int weight, std::vector<std::int64_t> h, std::int64_t rankL)
    : weight_(weight), h_(std::move(h)), rankL_(rankL) {
  auto bad = [&](const std::string& why) {
    fail(Errc::InvalidHodge, "invalid Hodge data (weight " + std::to_string(weight_) + ", h = " + numbers(h_) +
                                 ", rankL = " + std::to_string(rankL_) + "): " + why);
  };
  if (weight_ < 0) bad("negative weight");
  if (h_.size() != static_cast<std::size_t>(weight_) + 1) bad("expected weight+1 Hodge numbers");
  for (std::size_t k = 0; k < h_.size(); ++k) {
    if (h_[k] < 0) bad("negative Hodge number");
    if (h_[k] != h_[h_.size() - 1 - k]) bad("Hodge numbers are not symmetric");
  }
  if (rankL_ < 0) bad("negative rankL");
  if (rankL_ > total_rank()) bad("rankL exceeds the total rank");
  if (weight_ == 0) {
    if (rankL_ != h_[0]) bad("in weight 0 the lattice spans H^{0,0}, so rankL = h^{0,0}");
    return;
  }
  if (h0m() == 0 && rankL_ != 0) bad("rankL must vanish when h^{0,m} = 0");
  if (h0m() > 0 && rankL_ < 2 * h0m()) bad("rankL < 2*h^{0,m}: the lattice must span H^{0,m} over the reals");
}

SyntheticHodge SyntheticHodge::zero(int weight) {
  return SyntheticHodge(weight, std::vector<std::int64_t>(static_cast<std::size_t>(weight) + 1, 0), 0);
}

std::int64_t SyntheticHodge::h(int p, int q) const {
  if (p < 0 || q < 0 || p + q != weight_) return 0;
  return h_[static_cast<std::size_t>(q)];
}

std::int64_t SyntheticHodge::total_rank() const { return std::accumulate(h_.begin(), h_.end(), std::int64_t{0}); }

std::int64_t discrepancy(const SyntheticHodge& H) {
  if (H.weight() == 0) fail(Errc::BadWeight, "the Jacobian discrepancy needs weight m >= 1");
  return H.rankL() - 2 * H.h0m();
}

bool has_jacobian(const SyntheticHodge& H) { return discrepancy(H) == 0; }

SyntheticHodge direct_sum(const std::vector<SyntheticHodge>& Hs) {
  if (Hs.empty()) fail(Errc::InvalidArgument, "direct sum of an empty list has no weight");
  const int m = Hs.front().weight();
  std::vector<std::int64_t> h(static_cast<std::size_t>(m) + 1, 0);
  std::int64_t rank = 0;
  for (const auto& H : Hs) {
    if (H.weight() != m) {
      fail(Errc::WeightMismatch,
           "cannot add structures of weights " + std::to_string(m) + " and " + std::to_string(H.weight()));
    }
    for (std::size_t k = 0; k < h.size(); ++k) h[k] += H.hodge_numbers()[k];
    rank += H.rankL();
  }
  return SyntheticHodge(m, std::move(h), rank);
}

std::int64_t torsion_dim(const SyntheticHodge& H, std::int64_t p) {
  if (!is_prime(p)) fail(Errc::InvalidArgument, std::to_string(p) + " is not prime");
  return 2 * H.h0m() + discrepancy(H);
}

SyntheticHodge twist(const SyntheticHodge& H, int i) {
  if (i < 0) fail(Errc::InvalidArgument, "twist index must be nonnegative");
  if (i == 0) return H;
  const int m = H.weight() + 2 * i;
  std::vector<std::int64_t> h(static_cast<std::size_t>(m) + 1, 0);
  for (std::size_t k = 0; k < H.hodge_numbers().size(); ++k) h[k + static_cast<std::size_t>(i)] = H.hodge_numbers()[k];
  return SyntheticHodge(m, std::move(h), 0);
}

SyntheticHodge projective_bundle(const std::map<int, SyntheticHodge>& H_by_weight, int d, int m) {
  if (d < 0 || m < 0) fail(Errc::InvalidArgument, "relative dimension and weight must be nonnegative");
  std::vector<SyntheticHodge> parts;
  for (int i = 0; i <= d && m - 2 * i >= 0; ++i) {
    auto it = H_by_weight.find(m - 2 * i);
    if (it == H_by_weight.end()) {
      fail(Errc::MissingSummand, "projective bundle needs H^" + std::to_string(m - 2 * i) + " of the base");
    }
    if (it->second.weight() != m - 2 * i) {
      fail(Errc::WeightMismatch, "summand keyed by weight " + std::to_string(m - 2 * i) + " has weight " +
                                     std::to_string(it->second.weight()));
    }
    parts.push_back(twist(it->second, i));
  }
  return direct_sum(parts);
}

BlowupResult blowup(const SyntheticHodge& H_X, const std::map<int, SyntheticHodge>& H_Y, int d) {
  if (d < 1) fail(Errc::InvalidArgument, "codimension of the center must be at least 1");
  const int m = H_X.weight();
  std::vector<SyntheticHodge> parts{H_X};
  for (int i = 1; i <= d - 1 && m - 2 * i >= 0; ++i) {
    auto it = H_Y.find(i);
    if (it == H_Y.end()) {
      fail(Errc::MissingSummand, "blowup needs H^" + std::to_string(m - 2 * i) + " of the center for i = " +
                                     std::to_string(i));
    }
    if (it->second.weight() != m - 2 * i) {
      fail(Errc::WeightMismatch, "center summand i = " + std::to_string(i) + " should have weight " +
                                     std::to_string(m - 2 * i));
    }
    parts.push_back(twist(it->second, i));
  }
  SyntheticHodge out = direct_sum(parts);
  bool same_delta = m == 0 ? out.rankL() == H_X.rankL() : discrepancy(out) == discrepancy(H_X);
  bool iso = out.h0m() == H_X.h0m() && out.rankL() == H_X.rankL();
  return {std::move(out), same_delta, iso};
}

std::pair<SyntheticHodge, SyntheticHodge> split_h0(const SyntheticHodge& H) {
  if (discrepancy(H) > 0) {
    fail(Errc::NoJacobian, "discrepancy " + std::to_string(discrepancy(H)) + " > 0: no Jacobian to split off");
  }
  const std::int64_t r = H.h0m();
  const int m = H.weight();
  std::vector<std::int64_t> h0(static_cast<std::size_t>(m) + 1, 0);
  h0.front() = r;
  h0.back() = r;
  std::vector<std::int64_t> rest = H.hodge_numbers();
  rest.front() -= r;
  rest.back() -= r;
  return {SyntheticHodge(m, std::move(h0), 2 * r), SyntheticHodge(m, std::move(rest), 0)};
}

SyntheticHodge abelian_product_hodge(int n, int m) {
  if (m < 2 || m > n) {
    fail(Errc::BadWeight, "weight m = " + std::to_string(m) + " outside 2..n = " + std::to_string(n));
  }
  std::vector<std::int64_t> h;
  for (int q = 0; q <= m; ++q) h.push_back(binomial(n, m - q) * binomial(n, q));
  return SyntheticHodge(m, std::move(h), 2 * binomial(n, m));
}

std::string to_string(const SyntheticHodge& H) {
  return "weight " + std::to_string(H.weight()) + "; h = " + numbers(H.hodge_numbers()) +
         "; rankL = " + std::to_string(H.rankL());
}

SyntheticHodge parse_hodge(std::string_view text) {
  static const std::regex re(R"(^\s*weight\s+(\d+)\s*;\s*h\s*=\s*\[([^\]]*)\]\s*;\s*rankL\s*=\s*(\d+)\s*$)");
  std::string s(text);
  std::smatch mt;
  if (!std::regex_match(s, mt, re)) {
    fail(Errc::ParseError, "expected 'weight m; h = [..]; rankL = k', got '" + s + "'");
  }
  std::vector<std::int64_t> h;
  std::stringstream list(mt[2].str());
  std::string item;
  while (std::getline(list, item, ',')) {
    try {
      std::size_t used = 0;
      h.push_back(std::stoll(item, &used));
    } catch (const std::logic_error&) {
      fail(Errc::ParseError, "bad Hodge number '" + item + "'");
    }
  }
  return SyntheticHodge(std::stoi(mt[1].str()), std::move(h), std::stoll(mt[3].str()));
}

}  // namespace wj
