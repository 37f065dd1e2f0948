#include <catch_amalgamated.hpp>

#include "wj/kernels.hpp"

using namespace wj;

namespace {

std::vector<BigInt> discriminants(long max_abs) {
  std::vector<BigInt> out;
  for (long D = -3; D >= -max_abs; --D) {
    if (((D % 4) + 4) % 4 <= 1) out.emplace_back(D);
  }
  return out;
}

std::vector<Form> all_forms(long max_abs) {
  std::vector<Form> out;
  for (const auto& D : discriminants(max_abs)) {
    for (const Form& f : enumerate_reduced(D)) out.push_back(f);
  }
  return out;
}

}  // namespace

TEST_CASE("class group sweep: parallel equals serial") {
  auto Ds = discriminants(3000);
  auto a = class_group_sweep(Ds, Exec::serial);
  auto b = class_group_sweep(Ds, Exec::parallel);
  CHECK(a == b);
  REQUIRE(a.size() == Ds.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    CHECK(a[k].D == Ds[k]);
    CHECK(a[k].h == enumerate_reduced(Ds[k]).size());
  }
}

TEST_CASE("class roots: parallel equals serial bit for bit") {
  auto forms = all_forms(400);
  auto a = class_roots(forms, 160, Exec::serial);
  auto b = class_roots(forms, 160, Exec::parallel);
  REQUIRE(a.size() == forms.size());
  REQUIRE(b.size() == forms.size());
  for (std::size_t k = 0; k < a.size(); ++k) CHECK(a[k] == b[k]);
}

TEST_CASE("reality sweep: parallel equals serial") {
  auto forms = all_forms(500);
  auto a = reality_sweep(forms, 128, Exec::serial);
  auto b = reality_sweep(forms, 128, Exec::parallel);
  CHECK(a == b);
  for (const auto& c : a) CHECK(c.j_real == c.order_le_2);
}

TEST_CASE("errors inside parallel sweeps propagate") {
  std::vector<BigInt> Ds{-3, -4, -6, -7};
  CHECK_THROWS_AS(class_group_sweep(Ds, Exec::parallel), Error);
  CHECK_THROWS_AS(class_group_sweep(Ds, Exec::serial), Error);
  CHECK(class_group_sweep({}, Exec::parallel).empty());
}
