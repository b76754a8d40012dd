#include "superlie/errors.hpp"

namespace superlie {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotAlternating: return "NotAlternating";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::OddDimension: return "OddDimension";
    case ErrorCode::SpaceMismatch: return "SpaceMismatch";
    case ErrorCode::NotSymplectic: return "NotSymplectic";
    case ErrorCode::NotAntisymmetric: return "NotAntisymmetric";
    case ErrorCode::JacobiFails: return "JacobiFails";
    case ErrorCode::FormSingular: return "FormSingular";
    case ErrorCode::FormNotInvariant: return "FormNotInvariant";
    case ErrorCode::NotARepresentation: return "NotARepresentation";
    case ErrorCode::InternalDegreeLeak: return "InternalDegreeLeak";
    case ErrorCode::InconsistentRatio: return "InconsistentRatio";
    case ErrorCode::NotSuperLieType: return "NotSuperLieType";
    case ErrorCode::IdentityViolated: return "IdentityViolated";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NoCalibration: return "NoCalibration";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::NotInvariant: return "NotInvariant";
    case ErrorCode::NotAnIdeal: return "NotAnIdeal";
    case ErrorCode::UnknownInstance: return "UnknownInstance";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

namespace {

std::string render_label(ErrorCode code, const std::vector<std::size_t>& idx) {
  std::string out(error_name(code));
  if (!idx.empty()) {
    out += '(';
    for (std::size_t i = 0; i < idx.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(idx[i]);
    }
    out += ')';
  }
  return out;
}

std::string render(ErrorCode code, const std::string& detail,
                   const std::vector<std::size_t>& idx) {
  std::string out = render_label(code, idx);
  if (!detail.empty()) out += ": " + detail;
  return out;
}

}  // namespace

Error::Error(ErrorCode code, std::string detail, std::vector<std::size_t> indices)
    : std::runtime_error(render(code, detail, indices)),
      code_(code),
      indices_(std::move(indices)) {}

std::string Error::label() const { return render_label(code_, indices_); }

}  // namespace superlie
