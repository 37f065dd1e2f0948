#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wj {

enum class Errc {
  FieldMismatch,
  DivisionByZero,
  RationalInput,
  InvalidForm,
  DiscriminantMismatch,
  InvalidDiscriminant,
  DegenerateBasis,
  NotCM,
  BadWeight,
  NotADivisor,
  OrderMismatch,
  PrimitivityViolation,
  DimensionMismatch,
  DimensionTooSmall,
  WeightMismatch,
  MissingSummand,
  NoJacobian,
  InvalidHodge,
  LowerHalfPlane,
  PrecisionExhausted,
  ParseError,
  CorruptCache,
  InvalidArgument,
};

std::string_view errc_name(Errc code) noexcept;

// Every library failure is reported through this type; the CLI maps the
// code to an exit status and a machine-readable error record.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace wj
