#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ak {

enum class ErrorKind {
  Parse,
  DimensionMismatch,
  JacobiViolation,
  NotSkew,
  Degenerate,
  CocycleViolation,
  NotAlmostComplex,
  NotCompatible,
  NotPositive,
  SingularGram,
  UnknownName,
  NonpositiveParameter,
  NotACharacter,
  ZeroCharacter,
  PerfectAlgebra,
  Unsatisfiable,
  IdentityViolation,
  InternalInvariantViolation,
  NoWitnessFound,
};

constexpr std::string_view kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::JacobiViolation: return "JacobiViolation";
    case ErrorKind::NotSkew: return "NotSkew";
    case ErrorKind::Degenerate: return "Degenerate";
    case ErrorKind::CocycleViolation: return "CocycleViolation";
    case ErrorKind::NotAlmostComplex: return "NotAlmostComplex";
    case ErrorKind::NotCompatible: return "NotCompatible";
    case ErrorKind::NotPositive: return "NotPositive";
    case ErrorKind::SingularGram: return "SingularGram";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::NonpositiveParameter: return "NonpositiveParameter";
    case ErrorKind::NotACharacter: return "NotACharacter";
    case ErrorKind::ZeroCharacter: return "ZeroCharacter";
    case ErrorKind::PerfectAlgebra: return "PerfectAlgebra";
    case ErrorKind::Unsatisfiable: return "Unsatisfiable";
    case ErrorKind::IdentityViolation: return "IdentityViolation";
    case ErrorKind::InternalInvariantViolation: return "InternalInvariantViolation";
    case ErrorKind::NoWitnessFound: return "NoWitnessFound";
  }
  return "Error";
}

/// Validation failures on user input; everything else is a bug or a usage error.
constexpr bool is_validation_error(ErrorKind k) {
  switch (k) {
    case ErrorKind::DimensionMismatch:
    case ErrorKind::JacobiViolation:
    case ErrorKind::NotSkew:
    case ErrorKind::Degenerate:
    case ErrorKind::CocycleViolation:
    case ErrorKind::NotAlmostComplex:
    case ErrorKind::NotCompatible:
    case ErrorKind::NotPositive:
      return true;
    default:
      return false;
  }
}

/// Single exception type for the library. `indices` names the offending basis
/// elements (e.g. the Jacobi triple) when there is one.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, std::vector<std::size_t> indices = {})
      : std::runtime_error(std::string(kind_name(kind)) + ": " + what),
        kind_(kind),
        indices_(std::move(indices)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<std::size_t>& indices() const noexcept { return indices_; }

 private:
  ErrorKind kind_;
  std::vector<std::size_t> indices_;
};

}  // namespace ak
