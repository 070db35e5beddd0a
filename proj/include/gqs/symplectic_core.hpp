#pragma once

// Real/complex matrix substrate shared by every other module: the standard
// symplectic form, the complex <-> real embedding, J-commutant splitting and
// tolerance-aware predicates.
//
// Phase-space ordering is (x_1..x_n, y_1..y_n) for z = x + iy, so a complex
// n x n matrix M acts on R^{2n} as [[Re M, -Im M], [Im M, Re M]].

#include <complex>

#include <Eigen/Dense>

#include "gqs/error.hpp"

namespace gqs {

using Complex = std::complex<double>;
using RealMatrix = Eigen::MatrixXd;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;
using ComplexVector = Eigen::VectorXcd;

// Numeric policy threaded through every predicate. All thresholds are applied
// relative to the scale of the matrix under test, i.e. tol * (1 + ||M||_F).
struct Tolerances {
  double sym_tol = 1e-10;
  double psd_tol = 1e-10;
  double commutator_tol = 1e-9;
  double residual_tol = 1e-9;
  // Symplectic eigenvalues within eig_floor of 1/2 are vacuum modes.
  double eig_floor = 1e-12;

  // Throws Error(Dimension) naming the offending field if any value is
  // negative or not finite.
  void check() const;
};

// Outcome of a tolerance test: the decision plus the norm it was based on.
struct Check {
  bool ok = false;
  double residual = 0.0;
  double threshold = 0.0;

  explicit operator bool() const noexcept { return ok; }
};

struct OrthosymplecticCheck {
  bool ok = false;
  double symplectic_residual = 0.0;
  double orthogonality_residual = 0.0;

  explicit operator bool() const noexcept { return ok; }
};

struct PsdCheck {
  bool ok = false;
  double min_eigenvalue = 0.0;
  double threshold = 0.0;

  explicit operator bool() const noexcept { return ok; }
};

struct JSplit {
  RealMatrix commuting;      // (T - J T J) / 2, commutes with J
  RealMatrix anticommuting;  // (T + J T J) / 2, anticommutes with J
};

/// The 2n x 2n matrix [[0, I_n], [-I_n, 0]].
RealMatrix standard_symplectic_form(int n);

/// [[Re M, -Im M], [Im M, Re M]] for square M.
RealMatrix embed_complex(const ComplexMatrix& m);

/// Inverse of embed_complex on the J-commutant. The input is projected onto
/// the commutant first; a commutator residual above tolerance throws
/// Error(NotJCommuting) carrying the residual ||M J - J M||_F.
ComplexMatrix extract_complex(const RealMatrix& m, const Tolerances& tol = {});

/// Projection onto the commutant without any tolerance test.
ComplexMatrix extract_complex_projection(const RealMatrix& m);

// (Re v, Im v) and back.
RealVector embed_vector(const ComplexVector& v);
ComplexVector extract_vector(const RealVector& v);

JSplit j_commutant_split(const RealMatrix& t);

// ||M J - J M||_F.
double commutator_residual(const RealMatrix& m);

/// Residual ||M^T J M - J||_F, accepted below commutator_tol * (1 + ||M||_F^2).
Check is_symplectic(const RealMatrix& m, const Tolerances& tol = {});

OrthosymplecticCheck is_orthosymplectic(const RealMatrix& m, const Tolerances& tol = {});

/// Residual ||U^dagger U - I||_F against commutator_tol * (1 + ||U||_F^2).
Check is_unitary(const ComplexMatrix& u, const Tolerances& tol = {});

/// Symmetrizes H once, then reports whether lambda_min(H) >= -psd_tol * (1 + ||H||_F).
/// Hermitian deviation beyond sym_tol throws Error(NotHermitian).
PsdCheck hermitian_psd_check(const ComplexMatrix& h, const Tolerances& tol = {});

/// Real symmetric variant of the same test.
PsdCheck symmetric_psd_check(const RealMatrix& s, const Tolerances& tol = {});

/// Returns (M + M^T) / 2 when the asymmetry is within sym_tol, otherwise throws
/// Error(NotHermitian). `what` names the matrix in the message.
RealMatrix symmetrize(const RealMatrix& m, const Tolerances& tol, const char* what);

ComplexMatrix hermitize(const ComplexMatrix& m, const Tolerances& tol, const char* what);

/// Mode count of a 2n x 2n matrix; throws Error(Dimension) otherwise.
int mode_count(const RealMatrix& m);

bool all_finite(const RealMatrix& m);
bool all_finite(const ComplexMatrix& m);

}  // namespace gqs
