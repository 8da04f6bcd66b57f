#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace reebsym {

enum class ErrorCode {
  kNotAPermutation,
  kInvolutionViolation,
  kDisconnected,
  kGenusNegative,
  kGenusNonZero,
  kOddDegreeVertex,
  kDegreeTwoVertex,
  kSignAlternationViolation,
  kNoVertices,
  kSyntaxError,
  kNotClosedSurface,
  kDegenerateLevel,
  kNotASaddleNode,
  kKernelNotTrivial,
  kValueNotPreserved,
  kEmptyFixedSet,
  kVertexNotFixed,
  kLefschetzViolation,
  kNotAnAutomorphism,
  kDegreeMismatch,
  kGroupTooLarge,
  kGenusNotZero,
  kUnknownCorpusName,
};

std::string_view error_name(ErrorCode code);

// All library failures are reported through this exception. what() always
// starts with the error name, e.g. "OddDegreeVertex at vertex 0".
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace reebsym
