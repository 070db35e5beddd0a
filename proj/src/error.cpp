#include "gqs/error.hpp"

namespace gqs {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Dimension: return "DimensionError";
    case ErrorKind::NotJCommuting: return "NotJCommuting";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::InvalidState: return "InvalidState";
    case ErrorKind::NotSymplectic: return "NotSymplectic";
    case ErrorKind::NotUnitary: return "NotUnitary";
    case ErrorKind::NotPSD: return "NotPSD";
    case ErrorKind::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorKind::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorKind::NotPUNCovariance: return "NotPUNCovariance";
    case ErrorKind::NotAState: return "NotAState";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::SingularMeanMap: return "SingularMeanMap";
    case ErrorKind::NotPUN: return "NotPUN";
    case ErrorKind::NotClassical: return "NotClassical";
    case ErrorKind::InconsistentClassification: return "InconsistentClassification";
    case ErrorKind::SingularSigma: return "SingularSigma";
    case ErrorKind::NonzeroMean: return "NonzeroMean";
  }
  return "UnknownError";
}

Error::Error(ErrorKind kind, const std::string& what, std::optional<double> residual)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what),
      kind_(kind),
      residual_(residual) {}

}  // namespace gqs
