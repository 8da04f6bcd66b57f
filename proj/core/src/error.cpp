#include "reebsym/error.hpp"

namespace reebsym {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotAPermutation: return "NotAPermutation";
    case ErrorCode::kInvolutionViolation: return "InvolutionViolation";
    case ErrorCode::kDisconnected: return "Disconnected";
    case ErrorCode::kGenusNegative: return "GenusNegative";
    case ErrorCode::kGenusNonZero: return "GenusNonZero";
    case ErrorCode::kOddDegreeVertex: return "OddDegreeVertex";
    case ErrorCode::kDegreeTwoVertex: return "DegreeTwoVertex";
    case ErrorCode::kSignAlternationViolation: return "SignAlternationViolation";
    case ErrorCode::kNoVertices: return "NoVertices";
    case ErrorCode::kSyntaxError: return "SyntaxError";
    case ErrorCode::kNotClosedSurface: return "NotClosedSurface";
    case ErrorCode::kDegenerateLevel: return "DegenerateLevel";
    case ErrorCode::kNotASaddleNode: return "NotASaddleNode";
    case ErrorCode::kKernelNotTrivial: return "KernelNotTrivial";
    case ErrorCode::kValueNotPreserved: return "ValueNotPreserved";
    case ErrorCode::kEmptyFixedSet: return "EmptyFixedSet";
    case ErrorCode::kVertexNotFixed: return "VertexNotFixed";
    case ErrorCode::kLefschetzViolation: return "LefschetzViolation";
    case ErrorCode::kNotAnAutomorphism: return "NotAnAutomorphism";
    case ErrorCode::kDegreeMismatch: return "DegreeMismatch";
    case ErrorCode::kGroupTooLarge: return "GroupTooLarge";
    case ErrorCode::kGenusNotZero: return "GenusNotZero";
    case ErrorCode::kUnknownCorpusName: return "UnknownCorpusName";
  }
  return "Unknown";
}

namespace {

std::string compose(ErrorCode code, const std::string& detail) {
  std::string msg(error_name(code));
  if (!detail.empty()) {
    msg += ' ';
    msg += detail;
  }
  return msg;
}

}  // namespace

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(compose(code, detail)), code_(code) {}

}  // namespace reebsym
