#include "wj/error.hpp"

namespace wj {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::RationalInput: return "RationalInput";
    case Errc::InvalidForm: return "InvalidForm";
    case Errc::DiscriminantMismatch: return "DiscriminantMismatch";
    case Errc::InvalidDiscriminant: return "InvalidDiscriminant";
    case Errc::DegenerateBasis: return "DegenerateBasis";
    case Errc::NotCM: return "NotCM";
    case Errc::BadWeight: return "BadWeight";
    case Errc::NotADivisor: return "NotADivisor";
    case Errc::OrderMismatch: return "OrderMismatch";
    case Errc::PrimitivityViolation: return "PrimitivityViolation";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::DimensionTooSmall: return "DimensionTooSmall";
    case Errc::WeightMismatch: return "WeightMismatch";
    case Errc::MissingSummand: return "MissingSummand";
    case Errc::NoJacobian: return "NoJacobian";
    case Errc::InvalidHodge: return "InvalidHodge";
    case Errc::LowerHalfPlane: return "LowerHalfPlane";
    case Errc::PrecisionExhausted: return "PrecisionExhausted";
    case Errc::ParseError: return "ParseError";
    case Errc::CorruptCache: return "CorruptCache";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace wj
