#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace artri {

enum class ErrorCode {
  DimensionMismatch,
  CharacteristicMismatch,
  NotPrime,
  ParseError,
  NotAssociative,
  NoUnit,
  RadicalNotIdeal,
  RadicalNotNilpotent,
  NotSplitBasic,
  NotSelfInjective,
  NotSymmetric,
  SimpleProjective,
  AlgebraMismatch,
  ZeroModule,
  InvalidModule,
  InvalidComplex,
  InvalidChainMap,
  SplitnessViolation,
  Inconclusive,
  NotIndecomposable,
  NoSocleElement,
  ProjectiveInput,
  NotOnRim,
  WalkDiverged,
  RadicalTooShort,
  ZeroDenominator,
};

std::string_view error_name(ErrorCode code);

// Every domain failure in the library is reported through this type; the
// code is what callers (and the CLI exit path) dispatch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_name(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace artri
