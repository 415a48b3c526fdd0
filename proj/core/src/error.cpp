#include "sklylab/error.hpp"

namespace sklylab {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::MixedFields: return "MixedFields";
    case Errc::NonResidue: return "NonResidue";
    case Errc::InvalidField: return "InvalidField";
    case Errc::ParseError: return "ParseError";
    case Errc::UnknownVariable: return "UnknownVariable";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::NotZeroDimensional: return "NotZeroDimensional";
    case Errc::DegreeCapExceeded: return "DegreeCapExceeded";
    case Errc::Unsupported: return "Unsupported";
    case Errc::ConstraintViolated: return "ConstraintViolated";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::Indeterminacy: return "Indeterminacy";
    case Errc::NoPointFound: return "NoPointFound";
    case Errc::DisagreementAcrossPoints: return "DisagreementAcrossPoints";
    case Errc::DegenerateParams: return "DegenerateParams";
    case Errc::ClosureExplosion: return "ClosureExplosion";
    case Errc::NotInGSpan: return "NotInGSpan";
    case Errc::DegenerateAForm: return "DegenerateAForm";
    case Errc::CommonFactorH: return "CommonFactorH";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::BadPIDegree: return "BadPIDegree";
    case Errc::RangeError: return "RangeError";
    case Errc::InvalidInstance: return "InvalidInstance";
  }
  return "Unknown";
}

}  // namespace sklylab
