#include "gqs/classical_rep.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "gqs/classify.hpp"
#include "gqs/williamson.hpp"

namespace gqs {
namespace {

RealVector doubled(const RealVector& v) {
  RealVector d(2 * v.size());
  d << v, v;
  return d;
}

}  // namespace

std::string_view to_string(PFunctionClass c) {
  switch (c) {
    case PFunctionClass::CSGS: return "CSGS";
    case PFunctionClass::PUNGS: return "PUNGS";
    case PFunctionClass::CGS: return "CGS";
  }
  return "?";
}

RealMatrix PFunctionForm::sigma() const {
  switch (class_tag) {
    case PFunctionClass::CSGS:
      return RealMatrix(doubled(N).asDiagonal());
    case PFunctionClass::PUNGS: {
      const ComplexMatrix& u = U.value();
      return embed_complex(u.adjoint() * N.cast<Complex>().asDiagonal() * u);
    }
    case PFunctionClass::CGS: {
      const RealMatrix& l = L.value();
      // L^{-T} D L^{-1} through solves.
      const Eigen::PartialPivLU<RealMatrix> lu_t(l.transpose());
      const RealMatrix left = lu_t.solve(RealMatrix(doubled(N).asDiagonal()));
      RealMatrix s = lu_t.solve(left.transpose()).transpose();
      return (s + s.transpose()) / 2.0;
    }
  }
  return {};
}

ClassicalNoise classical_covariance(const GaussianState& state, const Tolerances& tol) {
  require_valid(state, tol);
  const Check c = is_classical(state, tol);
  if (!c) {
    throw Error(ErrorKind::NotClassical,
                "lambda_min(S - I/2) = " + std::to_string(c.residual), c.residual);
  }
  const int n = state.modes();
  const RealMatrix j = standard_symplectic_form(n);
  RealMatrix sigma =
      0.5 * j * (state.cov() - 0.5 * RealMatrix::Identity(2 * n, 2 * n)) * j.transpose();
  sigma = ((sigma + sigma.transpose()) / 2.0).eval();

  Eigen::SelfAdjointEigenSolver<RealMatrix> es(sigma);
  if (es.eigenvalues().minCoeff() < 0.0) {
    const RealVector clipped = es.eigenvalues().cwiseMax(0.0);
    sigma = es.eigenvectors() * clipped.asDiagonal() * es.eigenvectors().transpose();
    sigma = ((sigma + sigma.transpose()) / 2.0).eval();
  }
  return {state.mean_real(), sigma};
}

RealMatrix quantum_covariance(const ClassicalNoise& noise, const Tolerances& tol) {
  const int n = mode_count(noise.sigma_R);
  const PsdCheck psd = symmetric_psd_check(noise.sigma_R, tol);
  if (!psd) {
    throw Error(ErrorKind::NotPSD, "classical covariance is not PSD", psd.min_eigenvalue);
  }
  const RealMatrix j = standard_symplectic_form(n);
  const RealMatrix sigma = (noise.sigma_R + noise.sigma_R.transpose()) / 2.0;
  RealMatrix s = 0.5 * RealMatrix::Identity(2 * n, 2 * n) + 2.0 * j.transpose() * sigma * j;
  return (s + s.transpose()) / 2.0;
}

double p_density(const ClassicalNoise& noise, const ComplexVector& alpha,
                 const Tolerances& tol) {
  const int n = mode_count(noise.sigma_R);
  if (alpha.size() != n || noise.mu_R.size() != 2 * n) {
    throw Error(ErrorKind::Dimension, "alpha and mu must have one entry per mode");
  }
  const RealMatrix sigma = symmetrize(noise.sigma_R, tol, "sigma_R");
  Eigen::SelfAdjointEigenSolver<RealMatrix> es(sigma, Eigen::EigenvaluesOnly);
  const double lo = es.eigenvalues().minCoeff();
  if (!(lo > tol.eig_floor * std::max(1.0, es.eigenvalues().maxCoeff()))) {
    throw Error(ErrorKind::SingularSigma, "degenerate classical covariance", lo);
  }
  const Eigen::LLT<RealMatrix> llt(sigma);
  const RealVector diff = embed_vector(alpha) - noise.mu_R;
  const RealVector w = llt.matrixL().solve(diff);
  const double log_sqrt_det = llt.matrixL().toDenseMatrix().diagonal().array().log().sum();
  const double log_norm = -n * std::log(2.0 * std::numbers::pi) - log_sqrt_det;
  return std::exp(log_norm - 0.5 * w.squaredNorm());
}

double form_density(const PFunctionForm& form, const ComplexVector& alpha,
                    const Tolerances& tol) {
  const Eigen::Index n = form.N.size();
  if (alpha.size() != n) throw Error(ErrorKind::Dimension, "alpha has wrong length");
  const RealVector nbar = form.photon_numbers();
  if (!(nbar.minCoeff() > tol.eig_floor)) {
    throw Error(ErrorKind::SingularSigma, "a normal mode carries no noise", nbar.minCoeff());
  }
  ComplexVector beta;
  switch (form.class_tag) {
    case PFunctionClass::CSGS:
      beta = alpha;
      break;
    case PFunctionClass::PUNGS:
      beta = form.U.value() * alpha;
      break;
    case PFunctionClass::CGS: {
      // L^T maps a_R to normal-mode coordinates (beta_R), since
      // a_R^T sigma^{-1} a_R = (L^T a_R)^T (N (+) N)^{-1} (L^T a_R).
      beta = extract_vector(form.L.value().transpose() * embed_vector(alpha));
      break;
    }
  }
  double exponent = 0.0;
  double log_prefactor = 0.0;
  for (Eigen::Index j = 0; j < n; ++j) {
    exponent += std::norm(beta(j)) / nbar(j);
    log_prefactor -= std::log(std::numbers::pi * nbar(j));
  }
  return std::exp(log_prefactor - exponent);
}

PFunctionForm table_form(const GaussianState& state, const Tolerances& tol) {
  const ClassicalNoise noise = classical_covariance(state, tol);
  if (state.mean().norm() > tol.residual_tol) {
    throw Error(ErrorKind::NonzeroMean, "table forms describe mean-zero states",
                state.mean().norm());
  }
  const int n = state.modes();
  PFunctionForm form;
  if (is_csgs(state, tol)) {
    form.class_tag = PFunctionClass::CSGS;
    form.N = (noise.sigma_R.diagonal().head(n) + noise.sigma_R.diagonal().tail(n)) / 2.0;
    form.N = form.N.cwiseMax(0.0);
  } else if (is_pun(state, tol)) {
    form.class_tag = PFunctionClass::PUNGS;
    const ComplexMatrix k = extract_complex(noise.sigma_R, tol);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es((k + k.adjoint()) / 2.0);
    ComplexMatrix v(n, n);
    form.N.resize(n);
    for (int j = 0; j < n; ++j) {
      form.N(j) = std::max(es.eigenvalues()(n - 1 - j), 0.0);
      v.col(j) = es.eigenvectors().col(n - 1 - j);
    }
    form.U = v.adjoint();
  } else {
    form.class_tag = PFunctionClass::CGS;
    WilliamsonDecomposition w;
    try {
      w = williamson_decompose(noise.sigma_R, tol);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotPositiveDefinite) throw;
      throw Error(ErrorKind::SingularSigma,
                  "classical covariance of a non-PUN state is degenerate; no symplectic "
                  "normal form",
                  e.residual());
    }
    form.N = w.d;
    form.L = w.L;
  }
  const double recon = (form.sigma() - noise.sigma_R).norm();
  if (!(recon <= tol.residual_tol * (1.0 + noise.sigma_R.norm()))) {
    throw Error(ErrorKind::ConvergenceFailure,
                "p-function normal form does not reproduce sigma_R", recon);
  }
  return form;
}

}  // namespace gqs
