#pragma once

// Data-parallel sweeps.  Each has an OpenMP path and a serial reference;
// both produce identical results element by element.

#include <vector>

#include "wj/binforms.hpp"
#include "wj/precision.hpp"

namespace wj {

enum class Exec { serial, parallel };

// j of every form, in input order.
std::vector<PrecComplex> class_roots(const std::vector<Form>& forms, prec_t prec, Exec exec);

struct ClassGroupSummary {
  BigInt D;
  std::size_t h = 0;
  std::vector<long> structure;
  friend bool operator==(const ClassGroupSummary&, const ClassGroupSummary&) = default;
};
std::vector<ClassGroupSummary> class_group_sweep(const std::vector<BigInt>& discriminants, Exec exec);

// For each form: is j real (numerically) and is its class of order <= 2.
struct RealityCheck {
  bool j_real = false;
  bool order_le_2 = false;
  friend bool operator==(const RealityCheck&, const RealityCheck&) = default;
};
std::vector<RealityCheck> reality_sweep(const std::vector<Form>& forms, prec_t prec, Exec exec);

}  // namespace wj
