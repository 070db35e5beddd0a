#include "gqs/williamson.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace gqs {
namespace {

struct SpdRoots {
  RealMatrix sqrt;
  RealMatrix inv_sqrt;
};

RealMatrix checked_spd(const RealMatrix& s, const Tolerances& tol) {
  mode_count(s);
  if (!s.allFinite()) throw Error(ErrorKind::Dimension, "matrix has non-finite entries");
  return symmetrize(s, tol, "covariance");
}

SpdRoots spd_roots(const RealMatrix& sym, const Tolerances& tol) {
  Eigen::SelfAdjointEigenSolver<RealMatrix> es(sym);
  if (es.info() != Eigen::Success) {
    throw Error(ErrorKind::ConvergenceFailure, "symmetric eigensolver failed");
  }
  const RealVector& lambda = es.eigenvalues();
  const double floor = tol.eig_floor * std::max(1.0, lambda.cwiseAbs().maxCoeff());
  if (!(lambda.minCoeff() > floor)) {
    throw Error(ErrorKind::NotPositiveDefinite,
                "minimum eigenvalue " + std::to_string(lambda.minCoeff()),
                lambda.minCoeff());
  }
  const RealMatrix& v = es.eigenvectors();
  SpdRoots r;
  r.sqrt = v * lambda.cwiseSqrt().asDiagonal() * v.transpose();
  r.inv_sqrt = v * lambda.cwiseSqrt().cwiseInverse().asDiagonal() * v.transpose();
  return r;
}

// Rotates the phase of v so that its first significant component is real and
// positive (times `target`, a unit-modulus phase).
void normalize_phase(Eigen::Ref<ComplexVector> v, Complex target) {
  const double cutoff = 1e-6 * v.cwiseAbs().maxCoeff();
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    const double mag = std::abs(v(k));
    if (mag > cutoff) {
      v *= target * std::conj(v(k)) / mag;
      return;
    }
  }
}

// Positive spectrum of the Hermitian i S^{1/2} J S^{1/2}, descending, with
// eigenvectors (columns). The eigenvalues come in +/- pairs.
struct PairedSpectrum {
  RealVector d;
  ComplexMatrix vectors;
};

PairedSpectrum paired_spectrum(const RealMatrix& sqrt_s, int n) {
  const RealMatrix j = standard_symplectic_form(n);
  RealMatrix w = sqrt_s * j * sqrt_s;
  w = ((w - w.transpose()) / 2.0).eval();
  const ComplexMatrix h = Complex(0.0, 1.0) * w.cast<Complex>();
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
  if (es.info() != Eigen::Success) {
    throw Error(ErrorKind::ConvergenceFailure, "Hermitian eigensolver failed");
  }
  PairedSpectrum p;
  p.d.resize(n);
  p.vectors.resize(2 * n, n);
  for (int k = 0; k < n; ++k) {
    const Eigen::Index idx = 2 * n - 1 - k;  // ascending order from Eigen
    p.d(k) = es.eigenvalues()(idx);
    p.vectors.col(k) = es.eigenvectors().col(idx);
  }
  return p;
}

}  // namespace

RealVector symplectic_eigenvalues(const RealMatrix& s, const Tolerances& tol) {
  const RealMatrix sym = checked_spd(s, tol);
  const SpdRoots roots = spd_roots(sym, tol);
  return paired_spectrum(roots.sqrt, mode_count(sym)).d;
}

WilliamsonDecomposition williamson_decompose(const RealMatrix& s, const Tolerances& tol) {
  const RealMatrix sym = checked_spd(s, tol);
  const int n = mode_count(sym);
  const SpdRoots roots = spd_roots(sym, tol);
  PairedSpectrum p = paired_spectrum(roots.sqrt, n);

  // For i W v = d v with v = a + i b: W a = d b and W b = -d a, and |a| = |b|
  // = 1/sqrt(2). Columns (b_j | a_j) scaled by sqrt(2) bring W to
  // [[0, D], [-D, 0]].
  RealMatrix o(2 * n, 2 * n);
  for (int k = 0; k < n; ++k) {
    normalize_phase(p.vectors.col(k), Complex(0.0, 1.0));
    o.col(k) = std::sqrt(2.0) * p.vectors.col(k).imag();
    o.col(n + k) = std::sqrt(2.0) * p.vectors.col(k).real();
  }
  RealVector root_d(2 * n);
  root_d << p.d.cwiseSqrt(), p.d.cwiseSqrt();

  WilliamsonDecomposition out;
  out.L = roots.inv_sqrt * o * root_d.asDiagonal();
  out.d = p.d;

  const RealMatrix j = standard_symplectic_form(n);
  const double sympl = (out.L.transpose() * j * out.L - j).norm();
  RealVector dd(2 * n);
  dd << out.d, out.d;
  const double diag =
      (out.L.transpose() * sym * out.L - RealMatrix(dd.asDiagonal())).norm();
  if (!(sympl <= tol.commutator_tol * (1.0 + out.L.squaredNorm()))) {
    throw Error(ErrorKind::ConvergenceFailure,
                "symplectic residual " + std::to_string(sympl), sympl);
  }
  if (!(diag <= tol.residual_tol * sym.norm())) {
    throw Error(ErrorKind::ConvergenceFailure,
                "normal-form residual " + std::to_string(diag), diag);
  }
  return out;
}

OrthosymplecticDiagonalization orthosymplectic_diagonalize(const RealMatrix& s,
                                                           const Tolerances& tol) {
  const RealMatrix sym = checked_spd(s, tol);
  const int n = mode_count(sym);
  const double residual = commutator_residual(sym);
  if (!(residual <= tol.commutator_tol * (1.0 + sym.norm()))) {
    throw Error(ErrorKind::NotPUNCovariance,
                "covariance does not commute with J (residual " + std::to_string(residual) +
                    ")",
                residual);
  }
  spd_roots(sym, tol);  // positive definiteness

  const ComplexMatrix x = extract_complex_projection(sym);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es((x + x.adjoint()) / 2.0);
  if (es.info() != Eigen::Success) {
    throw Error(ErrorKind::ConvergenceFailure, "Hermitian eigensolver failed");
  }
  ComplexMatrix v(n, n);
  OrthosymplecticDiagonalization out;
  out.D.resize(n);
  for (int k = 0; k < n; ++k) {
    out.D(k) = es.eigenvalues()(n - 1 - k);
    v.col(k) = es.eigenvectors().col(n - 1 - k);
    normalize_phase(v.col(k), Complex(1.0, 0.0));
  }
  out.U = v.adjoint();

  const RealMatrix ur = embed_complex(out.U);
  RealVector dd(2 * n);
  dd << out.D, out.D;
  const double diag = (ur * sym * ur.transpose() - RealMatrix(dd.asDiagonal())).norm();
  if (!(diag <= tol.residual_tol * (1.0 + sym.norm()))) {
    throw Error(ErrorKind::ConvergenceFailure,
                "orthosymplectic residual " + std::to_string(diag), diag);
  }
  return out;
}

ThermalParameters thermal_parameters(const RealVector& d, const Tolerances& tol) {
  ThermalParameters out;
  out.s.resize(d.size());
  out.nbar.resize(d.size());
  for (Eigen::Index j = 0; j < d.size(); ++j) {
    const double dj = d(j);
    if (!(dj >= 0.5 - tol.psd_tol)) {
      throw Error(ErrorKind::NotAState,
                  "symplectic eigenvalue " + std::to_string(dj) + " below 1/2", dj);
    }
    if (dj <= 0.5 + tol.eig_floor) {
      out.s(j) = std::numeric_limits<double>::infinity();
      out.nbar(j) = 0.0;
    } else {
      out.s(j) = std::log((2.0 * dj + 1.0) / (2.0 * dj - 1.0));
      out.nbar(j) = dj - 0.5;
    }
  }
  return out;
}

double symplectic_eigenvalue_from_inverse_temperature(double s) {
  if (std::isinf(s)) return 0.5;
  return 0.5 / std::tanh(s / 2.0);
}

}  // namespace gqs
