#include "wj/kernels.hpp"

#include <exception>
#include <optional>

#include "wj/analytic.hpp"

namespace wj {

namespace {

// Runs body(i) for i in [0, n), in parallel when asked.  The first
// exception thrown by any iteration is rethrown after the loop.
template <class Body>
void for_each_index(std::size_t n, Exec exec, Body body) {
  if (exec == Exec::serial) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::exception_ptr error;
  const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace

std::vector<PrecComplex> class_roots(const std::vector<Form>& forms, prec_t prec, Exec exec) {
  std::vector<PrecComplex> roots(forms.size(), PrecComplex(prec));
  for_each_index(forms.size(), exec, [&](std::size_t i) { roots[i] = j_of_form(forms[i], prec); });
  return roots;
}

std::vector<ClassGroupSummary> class_group_sweep(const std::vector<BigInt>& discriminants, Exec exec) {
  std::vector<ClassGroupSummary> out(discriminants.size());
  for_each_index(discriminants.size(), exec, [&](std::size_t i) {
    ClassGroup G(discriminants[i]);
    out[i] = {discriminants[i], G.h(), G.structure()};
  });
  return out;
}

std::vector<RealityCheck> reality_sweep(const std::vector<Form>& forms, prec_t prec, Exec exec) {
  std::vector<RealityCheck> out(forms.size());
  for_each_index(forms.size(), exec, [&](std::size_t i) {
    out[i] = {j_is_real(j_of_form(forms[i], prec), prec), element_order(forms[i]) <= 2};
  });
  return out;
}

}  // namespace wj
