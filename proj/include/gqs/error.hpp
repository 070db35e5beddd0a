#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gqs {

enum class ErrorKind {
  Dimension,
  NotJCommuting,
  NotHermitian,
  InvalidState,
  NotSymplectic,
  NotUnitary,
  NotPSD,
  NotPositiveDefinite,
  ConvergenceFailure,
  NotPUNCovariance,
  NotAState,
  InvalidParams,
  SingularMeanMap,
  NotPUN,
  NotClassical,
  InconsistentClassification,
  SingularSigma,
  NonzeroMean,
};

std::string_view to_string(ErrorKind kind);

// Every failure in the library is reported through this type. The kind is
// stable and machine readable; residual carries the offending norm when the
// failure is a tolerance test.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what,
        std::optional<double> residual = std::nullopt);

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<double> residual() const noexcept { return residual_; }

 private:
  ErrorKind kind_;
  std::optional<double> residual_;
};

}  // namespace gqs
