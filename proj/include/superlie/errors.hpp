#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace superlie {

enum class ErrorCode {
  SingularMatrix,
  DimensionMismatch,
  NotAlternating,
  Singular,
  OddDimension,
  SpaceMismatch,
  NotSymplectic,
  NotAntisymmetric,
  JacobiFails,
  FormSingular,
  FormNotInvariant,
  NotARepresentation,
  InternalDegreeLeak,
  InconsistentRatio,
  NotSuperLieType,
  IdentityViolated,
  TooLarge,
  NoCalibration,
  InvalidInput,
  NotInvariant,
  NotAnIdeal,
  UnknownInstance,
  ParseError,
  IoError,
};

std::string_view error_name(ErrorCode code);

/// Every failure raised by the library. `what()` renders as
/// `Name(i,j,...)` followed by an optional detail, e.g.
/// "JacobiFails(0,1,2): ...". Tools rely on that prefix.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, std::string detail = {},
        std::vector<std::size_t> indices = {});

  ErrorCode code() const noexcept { return code_; }
  const std::vector<std::size_t>& indices() const noexcept { return indices_; }
  /// Name plus index tuple, without the detail text.
  std::string label() const;

private:
  ErrorCode code_;
  std::vector<std::size_t> indices_;
};

}  // namespace superlie
