#pragma once

// Glauber-Sudarshan representation of classical Gaussian states: the state is
// the average of coherent states |a><a| over a ~ N(mu_R, sigma_R), with
// S_R = I/2 + 2 J^T sigma_R J.

#include <optional>
#include <string_view>

#include "gqs/gaussian_state.hpp"

namespace gqs {

enum class PFunctionClass { CSGS, PUNGS, CGS };

std::string_view to_string(PFunctionClass c);

// Normal form of the p-function of a mean-zero classical state.
//
//   CSGS:  sigma_R = diag(N) (+) diag(N)
//   PUNGS: sigma_R = embed(U^dagger diag(N) U)
//   CGS:   sigma_R = L^{-T} (diag(N) (+) diag(N)) L^{-1}, L real symplectic
//
// N holds the per-quadrature noise variances. The mean photon number carried
// by the j-th normal mode is 2 N_j (photon_numbers()), which is the quantity
// appearing in the complex density exp(-sum |(U a)_j|^2 / (2 N_j)).
struct PFunctionForm {
  PFunctionClass class_tag = PFunctionClass::CGS;
  RealVector N;
  std::optional<ComplexMatrix> U;
  std::optional<RealMatrix> L;

  RealVector photon_numbers() const { return 2.0 * N; }
  RealMatrix sigma() const;
};

/// mu_R = (Re m, Im m), sigma_R = J (S_R - I/2) J^T / 2 with eigenvalues in
/// (-psd_tol, 0) clipped to zero. Throws Error(NotClassical).
ClassicalNoise classical_covariance(const GaussianState& state, const Tolerances& tol = {});

/// I/2 + 2 J^T sigma_R J. Throws Error(NotPSD).
RealMatrix quantum_covariance(const ClassicalNoise& noise, const Tolerances& tol = {});

/// Normal density on R^{2n} at (Re a, Im a). Throws Error(SingularSigma) when
/// sigma_R is not strictly positive definite.
double p_density(const ClassicalNoise& noise, const ComplexVector& alpha,
                 const Tolerances& tol = {});

/// Density evaluated from the normal form (mean zero):
/// prod_j (pi nbar_j)^{-1} exp(-sum_j |(T a)_j|^2 / nbar_j), nbar = 2N, where
/// T a is the normal-mode amplitude.
double form_density(const PFunctionForm& form, const ComplexVector& alpha,
                    const Tolerances& tol = {});

/// Throws Error(NotClassical), Error(NonzeroMean), or Error(SingularSigma)
/// for a CGS-branch state whose noise is degenerate.
PFunctionForm table_form(const GaussianState& state, const Tolerances& tol = {});

}  // namespace gqs
