#include "gqs/gaussian_state.hpp"

#include <cmath>
#include <string>

#include "gqs/williamson.hpp"

namespace gqs {

GaussianState::GaussianState(ComplexVector mean, RealMatrix cov, const Tolerances& tol)
    : n_(0), mean_(std::move(mean)), cov_(std::move(cov)) {
  n_ = mode_count(cov_);
  if (mean_.size() != n_) {
    throw Error(ErrorKind::Dimension, "mean has length " + std::to_string(mean_.size()) +
                                          " but covariance is for " + std::to_string(n_) +
                                          " modes");
  }
  if (!all_finite(cov_) || !all_finite(ComplexMatrix(mean_))) {
    throw Error(ErrorKind::Dimension, "state has non-finite entries");
  }
  asymmetry_ = (cov_ - cov_.transpose()).norm() / 2.0;
  symmetric_ = asymmetry_ <= tol.sym_tol * (1.0 + cov_.norm());
  if (symmetric_) cov_ = ((cov_ + cov_.transpose()) / 2.0).eval();
}

GaussianState GaussianState::vacuum(int n) {
  if (n < 1) throw Error(ErrorKind::Dimension, "mode count must be >= 1");
  return GaussianState(ComplexVector::Zero(n), 0.5 * RealMatrix::Identity(2 * n, 2 * n));
}

GaussianState GaussianState::thermal(const RealVector& nbar) {
  const Eigen::Index n = nbar.size();
  if (n < 1) throw Error(ErrorKind::Dimension, "mode count must be >= 1");
  RealVector diag(2 * n);
  diag << nbar.array() + 0.5, nbar.array() + 0.5;
  return GaussianState(ComplexVector::Zero(n), diag.asDiagonal());
}

ValidityReport validate(const GaussianState& state, const Tolerances& tol) {
  ValidityReport r;
  r.symmetric = state.symmetric();
  const int n = state.modes();
  const RealMatrix sym = (state.cov() + state.cov().transpose()) / 2.0;
  const ComplexMatrix h =
      sym.cast<Complex>() + Complex(0.0, 0.5) * standard_symplectic_form(n).cast<Complex>();
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h, Eigen::EigenvaluesOnly);
  r.min_eig = es.eigenvalues().minCoeff();
  r.uncertainty_ok = r.min_eig >= -tol.psd_tol * (1.0 + h.norm());
  try {
    const RealVector d = symplectic_eigenvalues(sym, tol);
    r.sympl_eigs.assign(d.data(), d.data() + d.size());
  } catch (const Error&) {
    // not positive definite: no symplectic spectrum to report
  }
  return r;
}

void require_valid(const GaussianState& state, const Tolerances& tol) {
  const ValidityReport r = validate(state, tol);
  if (!r.symmetric) {
    throw Error(ErrorKind::InvalidState, "covariance is not symmetric", state.asymmetry());
  }
  if (!r.uncertainty_ok) {
    throw Error(ErrorKind::InvalidState,
                "uncertainty relation violated, lambda_min(S + iJ/2) = " +
                    std::to_string(r.min_eig),
                r.min_eig);
  }
}

Complex characteristic_function(const GaussianState& state, const ComplexVector& z,
                                const Tolerances& tol) {
  if (z.size() != state.modes()) throw Error(ErrorKind::Dimension, "z has wrong length");
  require_valid(state, tol);
  const RealVector zr = embed_vector(z);
  const RealMatrix j = standard_symplectic_form(state.modes());
  const double phase = zr.dot(j * state.mean_real());
  const double quad = zr.dot(state.cov() * zr);
  return std::exp(Complex(-quad, -2.0 * phase));
}

GaussianState displace(const GaussianState& state, const ComplexVector& u) {
  if (u.size() != state.modes()) throw Error(ErrorKind::Dimension, "u has wrong length");
  return GaussianState(state.mean() + u, state.cov());
}

GaussianState apply_symplectic(const GaussianState& state, const RealMatrix& l,
                               const Tolerances& tol) {
  if (l.rows() != 2 * state.modes() || l.cols() != 2 * state.modes()) {
    throw Error(ErrorKind::Dimension, "symplectic map has wrong shape");
  }
  const Check c = is_symplectic(l, tol);
  if (!c) throw Error(ErrorKind::NotSymplectic, "map is not symplectic", c.residual);
  require_valid(state, tol);

  // (L^{-1})^T S L^{-1} through two solves with L^T.
  const Eigen::PartialPivLU<RealMatrix> lu_t(l.transpose());
  const RealMatrix left = lu_t.solve(state.cov());           // L^{-T} S
  const RealMatrix both = lu_t.solve(left.transpose());      // L^{-T} (L^{-T} S)^T
  RealMatrix cov = both.transpose();
  cov = ((cov + cov.transpose()) / 2.0).eval();
  return GaussianState(extract_vector(l * state.mean_real()), std::move(cov), tol);
}

GaussianState apply_passive(const GaussianState& state, const ComplexMatrix& u,
                            const Tolerances& tol) {
  if (u.rows() != state.modes()) throw Error(ErrorKind::Dimension, "unitary has wrong shape");
  const Check c = is_unitary(u, tol);
  if (!c) throw Error(ErrorKind::NotUnitary, "matrix is not unitary", c.residual);
  const RealMatrix ur = embed_complex(u);
  RealMatrix cov = ur * state.cov() * ur.transpose();
  cov = ((cov + cov.transpose()) / 2.0).eval();
  return GaussianState(u * state.mean(), std::move(cov), tol);
}

GaussianState gaussian_average(const GaussianState& state, const ClassicalNoise& noise,
                               const Tolerances& tol) {
  const int n = state.modes();
  if (noise.mu_R.size() != 2 * n || noise.sigma_R.rows() != 2 * n ||
      noise.sigma_R.cols() != 2 * n) {
    throw Error(ErrorKind::Dimension, "noise has wrong shape");
  }
  require_valid(state, tol);
  const PsdCheck psd = symmetric_psd_check(noise.sigma_R, tol);
  if (!psd) {
    throw Error(ErrorKind::NotPSD, "classical covariance is not PSD", psd.min_eigenvalue);
  }
  const RealMatrix j = standard_symplectic_form(n);
  const RealMatrix sigma = (noise.sigma_R + noise.sigma_R.transpose()) / 2.0;
  RealMatrix cov = state.cov() + 2.0 * j.transpose() * sigma * j;
  cov = ((cov + cov.transpose()) / 2.0).eval();
  return GaussianState(state.mean() + extract_vector(noise.mu_R), std::move(cov), tol);
}

}  // namespace gqs
