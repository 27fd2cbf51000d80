#include "artri/error.hpp"

namespace artri {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::CharacteristicMismatch: return "CharacteristicMismatch";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::NoUnit: return "NoUnit";
    case ErrorCode::RadicalNotIdeal: return "RadicalNotIdeal";
    case ErrorCode::RadicalNotNilpotent: return "RadicalNotNilpotent";
    case ErrorCode::NotSplitBasic: return "NotSplitBasic";
    case ErrorCode::NotSelfInjective: return "NotSelfInjective";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::SimpleProjective: return "SimpleProjective";
    case ErrorCode::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorCode::ZeroModule: return "ZeroModule";
    case ErrorCode::InvalidModule: return "InvalidModule";
    case ErrorCode::InvalidComplex: return "InvalidComplex";
    case ErrorCode::InvalidChainMap: return "InvalidChainMap";
    case ErrorCode::SplitnessViolation: return "SplitnessViolation";
    case ErrorCode::Inconclusive: return "Inconclusive";
    case ErrorCode::NotIndecomposable: return "NotIndecomposable";
    case ErrorCode::NoSocleElement: return "NoSocleElement";
    case ErrorCode::ProjectiveInput: return "ProjectiveInput";
    case ErrorCode::NotOnRim: return "NotOnRim";
    case ErrorCode::WalkDiverged: return "WalkDiverged";
    case ErrorCode::RadicalTooShort: return "RadicalTooShort";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
  }
  return "Unknown";
}

}  // namespace artri
