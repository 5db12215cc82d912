#include "catenoid/error.hpp"

namespace catenoid {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Divergent: return "Divergent";
    case ErrorKind::TolExceeded: return "TolExceeded";
    case ErrorKind::StepUnderflow: return "StepUnderflow";
    case ErrorKind::NoSignChange: return "NoSignChange";
    case ErrorKind::UnsupportedFamily: return "UnsupportedFamily";
    case ErrorKind::OutOfDomain: return "OutOfDomain";
    case ErrorKind::RecoveryMismatch: return "RecoveryMismatch";
    case ErrorKind::IdenticalCurves: return "IdenticalCurves";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace catenoid
