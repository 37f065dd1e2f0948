#pragma once

#include <json.hpp>

#include "wj/binforms.hpp"

namespace wj::cli {

using json = nlohmann::json;

// Integers that fit in 64 bits are JSON numbers, larger ones strings.
inline json int_json(const BigInt& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

inline json form_json(const Form& f) { return json::array({int_json(f.a()), int_json(f.b()), int_json(f.c())}); }

}  // namespace wj::cli
