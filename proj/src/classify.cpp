#include "gqs/classify.hpp"

#include <string>

#include "gqs/williamson.hpp"

namespace gqs {
namespace {

double commutator_threshold(const RealMatrix& s, const Tolerances& tol) {
  return tol.commutator_tol * (1.0 + s.norm());
}

RealMatrix classical_noise_matrix(const RealMatrix& s) {
  const int n = mode_count(s);
  const RealMatrix j = standard_symplectic_form(n);
  RealMatrix sigma = 0.5 * j * (s - 0.5 * RealMatrix::Identity(2 * n, 2 * n)) * j.transpose();
  return (sigma + sigma.transpose()) / 2.0;
}

// ||A_R||_F against the commutator threshold carried through
// ||A_R||_F = ||P [S, J] P||_F / 4 <= ||P||_2^2 ||[S, J]||_F / 4, P = (I/2 + S)^{-1}.
Check alambda_pun_test(const GaussianState& state, const ALambdaParams& params,
                       const Tolerances& tol) {
  const int n = state.modes();
  const RealMatrix shifted = 0.5 * RealMatrix::Identity(2 * n, 2 * n) + state.cov();
  Eigen::SelfAdjointEigenSolver<RealMatrix> es(shifted, Eigen::EigenvaluesOnly);
  const double p_norm = 1.0 / es.eigenvalues().minCoeff();
  Check c;
  c.residual = conjugate_linear_block(params.A).norm();
  c.threshold = commutator_threshold(state.cov(), tol) * p_norm * p_norm / 4.0;
  c.ok = c.residual <= c.threshold;
  return c;
}

}  // namespace

Check is_pun(const GaussianState& state, const Tolerances& tol) {
  require_valid(state, tol);
  Check c;
  c.residual = commutator_residual(state.cov());
  c.threshold = commutator_threshold(state.cov(), tol);
  c.ok = c.residual <= c.threshold;
  return c;
}

Check is_classical(const GaussianState& state, const Tolerances& tol) {
  require_valid(state, tol);
  const int n = state.modes();
  const RealMatrix shifted = state.cov() - 0.5 * RealMatrix::Identity(2 * n, 2 * n);
  Eigen::SelfAdjointEigenSolver<RealMatrix> es(shifted, Eigen::EigenvaluesOnly);
  Check c;
  c.residual = es.eigenvalues().minCoeff();
  c.threshold = -tol.psd_tol * (1.0 + state.cov().norm());
  c.ok = c.residual >= c.threshold;
  return c;
}

CsgsCheck is_csgs(const GaussianState& state, const Tolerances& tol) {
  require_valid(state, tol);
  const int n = state.modes();
  const RealMatrix& s = state.cov();
  const RealVector diag = s.diagonal();
  CsgsCheck c;
  c.offdiag_norm = (s - RealMatrix(diag.asDiagonal())).norm();
  c.block_mismatch = (diag.head(n) - diag.tail(n)).norm();
  c.N = ((diag.head(n) + diag.tail(n)) / 2.0 - RealVector::Constant(n, 0.5)) / 2.0;
  const double threshold = tol.residual_tol * (1.0 + s.norm());
  c.ok = c.offdiag_norm <= threshold && c.block_mismatch <= threshold &&
         c.N.minCoeff() >= -threshold;
  return c;
}

GaugeCertificate gauge_certificate(const GaussianState& state, const Tolerances& tol) {
  const Check pun = is_pun(state, tol);
  if (!pun) throw Error(ErrorKind::NotPUN, "covariance does not commute with J", pun.residual);
  const Check classical = is_classical(state, tol);
  if (!classical) {
    throw Error(ErrorKind::NotClassical, "S - I/2 is not PSD", classical.residual);
  }
  GaugeCertificate g;
  g.sigma_R = classical_noise_matrix(state.cov());
  g.K = hermitize(extract_complex(g.sigma_R, tol), tol, "K");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(g.K, Eigen::EigenvaluesOnly);
  g.min_eig_K = es.eigenvalues().minCoeff();
  g.degenerate = g.min_eig_K <= tol.psd_tol * (1.0 + g.K.norm());
  return g;
}

ClassificationReport classify(const GaussianState& state, const Tolerances& tol) {
  ClassificationReport r;
  const ValidityReport validity = validate(state, tol);
  r.residuals["uncertainty_min_eig"] = validity.min_eig;
  r.residuals["asymmetry"] = state.asymmetry();
  r.sympl_eigs = validity.sympl_eigs;
  r.nonzero_mean = state.mean().norm() > tol.residual_tol;
  if (!validity.valid()) return r;
  r.is_gaussian = true;

  const Check classical = is_classical(state, tol);
  r.is_classical = classical.ok;
  r.residuals["classicality_min_eig"] = classical.residual;

  const Check commutator = is_pun(state, tol);
  r.residuals["commutator"] = commutator.residual;

  const double embed_residual =
      (embed_complex(extract_complex_projection(state.cov())) - state.cov()).norm();
  r.residuals["embed_residual"] = embed_residual;
  bool embed_ok = embed_residual <= commutator.threshold;
  if (embed_ok) {
    // X >= I/2
    const ComplexMatrix x = extract_complex_projection(state.cov());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es((x + x.adjoint()) / 2.0,
                                                    Eigen::EigenvaluesOnly);
    embed_ok = es.eigenvalues().minCoeff() >= 0.5 - tol.psd_tol * (1.0 + x.norm());
  }

  const ALambdaParams params = from_covariance(state, tol);
  r.certificates.params = params;
  const Check alambda = alambda_pun_test(state, params, tol);
  r.residuals["alambda_A_norm"] = alambda.residual;

  bool ortho_ok = false;
  try {
    const OrthosymplecticDiagonalization od = orthosymplectic_diagonalize(state.cov(), tol);
    const ThermalParameters tp = thermal_parameters(od.D, tol);
    r.certificates.U = od.U;
    r.certificates.D = od.D;
    r.certificates.s = tp.s;
    r.certificates.nbar = tp.nbar;
    ortho_ok = true;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotPUNCovariance) throw;
  }

  bool gauge_ok = false;
  try {
    const GaugeCertificate g = gauge_certificate(state, tol);
    r.certificates.K = g.K;
    r.certificates.K_min_eig = g.min_eig_K;
    r.certificates.K_degenerate = g.degenerate;
    gauge_ok = true;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotPUN && e.kind() != ErrorKind::NotClassical) throw;
  }

  if (r.is_classical) r.certificates.sigma_R = classical_noise_matrix(state.cov());

  const bool routes[] = {commutator.ok, embed_ok, alambda.ok, ortho_ok, gauge_ok};
  for (bool route : routes) {
    if (route != commutator.ok) {
      throw Error(ErrorKind::InconsistentClassification,
                  std::string("PUN tests disagree: commutator=") +
                      (commutator.ok ? "1" : "0") + " embed=" + (embed_ok ? "1" : "0") +
                      " A=0:" + (alambda.ok ? "1" : "0") +
                      " orthosymplectic=" + (ortho_ok ? "1" : "0") +
                      " gauge=" + (gauge_ok ? "1" : "0"),
                  commutator.residual);
    }
  }
  r.is_pun = commutator.ok;
  r.is_gauge_invariant = gauge_ok;

  const CsgsCheck csgs = is_csgs(state, tol);
  r.is_csgs = csgs.ok;
  r.residuals["csgs_offdiag"] = csgs.offdiag_norm;
  r.residuals["csgs_block_mismatch"] = csgs.block_mismatch;
  if (csgs.ok) r.certificates.csgs_N = csgs.N;

  if ((r.is_csgs && !r.is_pun) || (r.is_pun && !r.is_classical)) {
    throw Error(ErrorKind::InconsistentClassification,
                "implication chain CSGS => PUN => CGS violated");
  }
  return r;
}

}  // namespace gqs
