#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wsa {

enum class ErrorKind {
  InvalidScalar,
  InvalidDocument,
  NotTwoRegular,
  NotConnected,
  FNotPermutation,
  FCubeNotIdentity,
  FTargetMismatch,
  InvalidWeights,
  AssumptionViolated,
  UnknownCatalogEntry,
  PathIllFormed,
  TruncationUnstable,
  NotSymmetricCandidate,
  FormNotSymmetric,
  FormDegenerate,
  ZeroModule,
  NotVirtualBar,
  SingularAlgebraDetected,
  NotPeriodic4,
  Usage,
};

inline std::string_view error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidScalar: return "InvalidScalar";
    case ErrorKind::InvalidDocument: return "InvalidDocument";
    case ErrorKind::NotTwoRegular: return "NotTwoRegular";
    case ErrorKind::NotConnected: return "NotConnected";
    case ErrorKind::FNotPermutation: return "FNotPermutation";
    case ErrorKind::FCubeNotIdentity: return "FCubeNotIdentity";
    case ErrorKind::FTargetMismatch: return "FTargetMismatch";
    case ErrorKind::InvalidWeights: return "InvalidWeights";
    case ErrorKind::AssumptionViolated: return "AssumptionViolated";
    case ErrorKind::UnknownCatalogEntry: return "UnknownCatalogEntry";
    case ErrorKind::PathIllFormed: return "PathIllFormed";
    case ErrorKind::TruncationUnstable: return "TruncationUnstable";
    case ErrorKind::NotSymmetricCandidate: return "NotSymmetricCandidate";
    case ErrorKind::FormNotSymmetric: return "FormNotSymmetric";
    case ErrorKind::FormDegenerate: return "FormDegenerate";
    case ErrorKind::ZeroModule: return "ZeroModule";
    case ErrorKind::NotVirtualBar: return "NotVirtualBar";
    case ErrorKind::SingularAlgebraDetected: return "SingularAlgebraDetected";
    case ErrorKind::NotPeriodic4: return "NotPeriodic4";
    case ErrorKind::Usage: return "Usage";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-readable kind; the
/// message names the offending vertex, arrow or value.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(error_name(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace wsa
