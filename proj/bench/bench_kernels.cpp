// Serial reference against the OpenMP path for each data-parallel kernel.

#include <benchmark/benchmark.h>

#include "wj/kernels.hpp"

using namespace wj;

namespace {

std::vector<Form> forms_up_to(long max_abs) {
  std::vector<Form> out;
  for (long D = -3; D >= -max_abs; --D) {
    if (((D % 4) + 4) % 4 > 1) continue;
    for (const Form& f : enumerate_reduced(D)) out.push_back(f);
  }
  return out;
}

Exec exec_of(const benchmark::State& s) { return s.range(0) ? Exec::parallel : Exec::serial; }

void BM_class_roots(benchmark::State& s) {
  auto forms = enumerate_reduced(-9999);
  for (auto _ : s) benchmark::DoNotOptimize(class_roots(forms, 256, exec_of(s)));
  s.SetItemsProcessed(s.iterations() * static_cast<long>(forms.size()));
}

void BM_class_group_sweep(benchmark::State& s) {
  std::vector<BigInt> ds;
  for (long D = -3; D >= -5000; --D) {
    if (((D % 4) + 4) % 4 <= 1) ds.emplace_back(D);
  }
  for (auto _ : s) benchmark::DoNotOptimize(class_group_sweep(ds, exec_of(s)));
  s.SetItemsProcessed(s.iterations() * static_cast<long>(ds.size()));
}

void BM_reality_sweep(benchmark::State& s) {
  auto forms = forms_up_to(1000);
  for (auto _ : s) benchmark::DoNotOptimize(reality_sweep(forms, 192, exec_of(s)));
  s.SetItemsProcessed(s.iterations() * static_cast<long>(forms.size()));
}

}  // namespace

BENCHMARK(BM_class_roots)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_class_group_sweep)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_reality_sweep)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
