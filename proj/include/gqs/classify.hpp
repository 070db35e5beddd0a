#pragma once

// Membership in the lattice GS > CGS > PUN > CSGS, with certificates.
//
// PUN (passive unitary normalizable) states are detected by four independent
// routes which must agree: S_R J = J S_R, S_R = embed(X) with X >= 1/2, A = 0
// in the (A, Lambda) parametrization, and existence of a gauge-invariant
// classical covariance. Disagreement is reported, never resolved.

#include <map>
#include <optional>
#include <string>

#include "gqs/alambda.hpp"
#include "gqs/gaussian_state.hpp"

namespace gqs {

struct CsgsCheck {
  bool ok = false;
  RealVector N;  // S_R = I/2 + 2 (diag(N) (+) diag(N))
  double offdiag_norm = 0.0;
  double block_mismatch = 0.0;

  explicit operator bool() const noexcept { return ok; }
};

struct GaugeCertificate {
  RealMatrix sigma_R;  // J (S_R - I/2) J^T / 2
  ComplexMatrix K;     // sigma_R = embed(K)
  double min_eig_K = 0.0;
  bool degenerate = false;  // K only positive semidefinite
};

Check is_pun(const GaussianState& state, const Tolerances& tol = {});

/// Residual is lambda_min(S_R - I/2).
Check is_classical(const GaussianState& state, const Tolerances& tol = {});

CsgsCheck is_csgs(const GaussianState& state, const Tolerances& tol = {});

/// Throws Error(NotPUN) or Error(NotClassical).
GaugeCertificate gauge_certificate(const GaussianState& state, const Tolerances& tol = {});

struct Certificates {
  // PUN: passive normal form and its thermal parameters.
  std::optional<ComplexMatrix> U;
  std::optional<RealVector> D;
  std::optional<RealVector> s;
  std::optional<RealVector> nbar;
  // CGS: classical noise covariance.
  std::optional<RealMatrix> sigma_R;
  // Gauge invariant: sigma_R = embed(K).
  std::optional<ComplexMatrix> K;
  std::optional<double> K_min_eig;
  bool K_degenerate = false;
  // CSGS: diagonal noise.
  std::optional<RealVector> csgs_N;
  // Every valid state: (mu, A, Lambda).
  std::optional<ALambdaParams> params;
};

struct ClassificationReport {
  bool is_gaussian = false;
  bool is_classical = false;
  bool is_pun = false;
  bool is_csgs = false;
  bool is_gauge_invariant = false;
  bool nonzero_mean = false;
  std::vector<double> sympl_eigs;
  std::map<std::string, double> residuals;
  Certificates certificates;
};

/// Runs every class test and assembles the report. Throws
/// Error(InconsistentClassification) when the PUN routes disagree or the
/// implication chain CSGS => PUN => CGS => GS is broken. Dimension problems
/// throw Error(Dimension); an invalid state yields a report with all flags
/// false.
ClassificationReport classify(const GaussianState& state, const Tolerances& tol = {});

}  // namespace gqs
