#pragma once

#include "gqs/symplectic_core.hpp"

namespace gqs {

// L^T S L = diag(d) (+) diag(d) with L symplectic and d sorted descending.
struct WilliamsonDecomposition {
  RealMatrix L;
  RealVector d;
};

// U_R S U_R^T = diag(D) (+) diag(D) with U unitary, D descending.
struct OrthosymplecticDiagonalization {
  ComplexMatrix U;
  RealVector D;
};

// Inverse temperatures (+inf for vacuum modes) and mean photon numbers of the
// thermal normal form, one entry per mode.
struct ThermalParameters {
  RealVector s;
  RealVector nbar;
};

/// Symplectic eigenvalues of a symmetric positive definite S, descending.
/// Throws Error(NotPositiveDefinite).
RealVector symplectic_eigenvalues(const RealMatrix& s, const Tolerances& tol = {});

/// Full Williamson normal form. The orthogonal factor inside a degenerate
/// block is whatever the Hermitian eigensolver returns after phase
/// normalization; only the residuals are contractual there.
///
/// Throws Error(NotPositiveDefinite) or Error(ConvergenceFailure) when either
/// residual misses its tolerance.
WilliamsonDecomposition williamson_decompose(const RealMatrix& s, const Tolerances& tol = {});

/// Diagonalizes a J-commuting covariance with a passive (orthosymplectic)
/// transform. D are the eigenvalues of X = extract_complex(S), which coincide
/// with the symplectic eigenvalues of S.
///
/// Throws Error(NotPUNCovariance) with the commutator residual attached when S
/// does not commute with J, Error(NotPositiveDefinite) when S is not PD.
OrthosymplecticDiagonalization orthosymplectic_diagonalize(const RealMatrix& s,
                                                           const Tolerances& tol = {});

/// Inverts d_j = coth(s_j / 2) / 2. Throws Error(NotAState) if some d_j lies
/// below the vacuum value 1/2 by more than psd_tol.
ThermalParameters thermal_parameters(const RealVector& d, const Tolerances& tol = {});

/// coth(s / 2) / 2, with s = +inf mapped to 1/2.
double symplectic_eigenvalue_from_inverse_temperature(double s);

}  // namespace gqs
