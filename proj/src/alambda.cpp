#include "gqs/alambda.hpp"

#include <cmath>
#include <string>

namespace gqs {
namespace {

void check_shapes(const ComplexMatrix& a, const ComplexMatrix& lambda) {
  if (a.rows() == 0 || a.rows() != a.cols() || lambda.rows() != a.rows() ||
      lambda.cols() != a.cols()) {
    throw Error(ErrorKind::Dimension, "A and Lambda must be square of the same size");
  }
}

double operator_norm(const ComplexMatrix& m) {
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues()(0);
}

void require_valid_params(const ComplexMatrix& a, const ComplexMatrix& lambda,
                          const Tolerances& tol) {
  const ParamReport r = validate_params(a, lambda, tol);
  if (!r.a_symmetric) throw Error(ErrorKind::InvalidParams, "A is not symmetric");
  if (!r.lambda_hermitian) throw Error(ErrorKind::InvalidParams, "Lambda is not Hermitian");
  if (!r.lambda_psd) {
    throw Error(ErrorKind::InvalidParams, "Lambda is not PSD", r.min_eig_lambda);
  }
  if (!r.m_pd) {
    throw Error(ErrorKind::InvalidParams, "M(A, Lambda) is not positive definite",
                r.min_eig_m);
  }
}

}  // namespace

RealMatrix conjugate_linear_block(const ComplexMatrix& a) {
  const Eigen::Index n = a.rows();
  RealMatrix r(2 * n, 2 * n);
  r.topLeftCorner(n, n) = a.real();
  r.topRightCorner(n, n) = a.imag();
  r.bottomLeftCorner(n, n) = a.imag();
  r.bottomRightCorner(n, n) = -a.real();
  return r;
}

RealMatrix m_matrix(const ComplexMatrix& a, const ComplexMatrix& lambda) {
  check_shapes(a, lambda);
  const Eigen::Index n = a.rows();
  return RealMatrix::Identity(2 * n, 2 * n) - embed_complex(lambda) -
         2.0 * conjugate_linear_block(a);
}

RealMatrix mean_map(const ComplexMatrix& a, const ComplexMatrix& lambda) {
  // A conj(x + iy) = (Re A x + Im A y) + i (Im A x - Re A y), which is the
  // anticommuting block; so the map is exactly M(A, Lambda).
  return m_matrix(a, lambda);
}

double c_normalization(const ComplexMatrix& a, const ComplexMatrix& lambda) {
  RealMatrix m = m_matrix(a, lambda);
  m = ((m + m.transpose()) / 2.0).eval();
  const Eigen::LLT<RealMatrix> llt(m);
  if (llt.info() != Eigen::Success) {
    throw Error(ErrorKind::InvalidParams, "M(A, Lambda) is not positive definite");
  }
  // sqrt(det M) = prod diag(chol)
  return llt.matrixL().toDenseMatrix().diagonal().prod();
}

ParamReport validate_params(const ComplexMatrix& a, const ComplexMatrix& lambda,
                            const Tolerances& tol) {
  check_shapes(a, lambda);
  ParamReport r;
  r.a_symmetric = (a - a.transpose()).norm() / 2.0 <= tol.sym_tol * (1.0 + a.norm());
  r.lambda_hermitian =
      (lambda - lambda.adjoint()).norm() / 2.0 <= tol.sym_tol * (1.0 + lambda.norm());
  const ComplexMatrix herm = (lambda + lambda.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> les(herm, Eigen::EigenvaluesOnly);
  r.min_eig_lambda = les.eigenvalues().minCoeff();
  r.lambda_psd = r.min_eig_lambda >= -tol.psd_tol * (1.0 + herm.norm());

  RealMatrix m = m_matrix((a + a.transpose()) / 2.0, herm);
  m = ((m + m.transpose()) / 2.0).eval();
  Eigen::SelfAdjointEigenSolver<RealMatrix> mes(m, Eigen::EigenvaluesOnly);
  r.min_eig_m = mes.eigenvalues().minCoeff();
  r.m_pd = r.min_eig_m > tol.psd_tol;
  r.normA = operator_norm(a);
  r.normLambda = operator_norm(lambda);
  return r;
}

ALambdaParams from_covariance(const GaussianState& state, const Tolerances& tol) {
  require_valid(state, tol);
  const int n = state.modes();
  const RealMatrix id = RealMatrix::Identity(2 * n, 2 * n);
  const RealMatrix shifted = 0.5 * id + state.cov();
  const Eigen::LLT<RealMatrix> llt(shifted);
  if (llt.info() != Eigen::Success) {
    throw Error(ErrorKind::InvalidState, "I/2 + S is not positive definite");
  }
  RealMatrix p = llt.solve(id);
  p = ((p + p.transpose()) / 2.0).eval();

  // T = I - M(-A, Lambda) = Lambda_R - 2 A_R.
  const JSplit split = j_commutant_split(id - p);
  const RealMatrix a_block = -0.5 * split.anticommuting;

  ALambdaParams out;
  out.Lambda = hermitize(extract_complex_projection(split.commuting), tol, "Lambda");
  ComplexMatrix a(n, n);
  a.real() = (a_block.topLeftCorner(n, n) - a_block.bottomRightCorner(n, n)) / 2.0;
  a.imag() = (a_block.topRightCorner(n, n) + a_block.bottomLeftCorner(n, n)) / 2.0;
  const double asym = (a - a.transpose()).norm() / 2.0;
  if (!(asym <= tol.sym_tol * (1.0 + a.norm()))) {
    throw Error(ErrorKind::NotHermitian, "extracted A is not symmetric", asym);
  }
  out.A = (a + a.transpose()) / 2.0;
  out.mu = extract_vector(mean_map(out.A, out.Lambda) * state.mean_real());
  return out;
}

ComplexVector mean_from_mu(const ALambdaParams& params, const Tolerances& tol) {
  if (params.mu.size() != params.modes()) {
    throw Error(ErrorKind::Dimension, "mu has wrong length");
  }
  RealMatrix m = mean_map(params.A, params.Lambda);
  const Eigen::FullPivLU<RealMatrix> lu(m);
  if (!lu.isInvertible()) {
    throw Error(ErrorKind::SingularMeanMap, "I - Lambda - 2AC is singular");
  }
  const double rcond = 1.0 / (m.norm() * lu.inverse().norm());
  if (!(rcond > tol.eig_floor)) {
    throw Error(ErrorKind::SingularMeanMap,
                "I - Lambda - 2AC is numerically singular (rcond " + std::to_string(rcond) +
                    ")",
                rcond);
  }
  return extract_vector(lu.solve(embed_vector(params.mu)));
}

GaussianState to_covariance(const ALambdaParams& params, const Tolerances& tol) {
  require_valid_params(params.A, params.Lambda, tol);
  const int n = params.modes();
  const ComplexMatrix a = (params.A + params.A.transpose()) / 2.0;
  const ComplexMatrix lambda = (params.Lambda + params.Lambda.adjoint()) / 2.0;
  RealMatrix mneg = m_matrix(-a, lambda);
  mneg = ((mneg + mneg.transpose()) / 2.0).eval();
  const Eigen::LLT<RealMatrix> llt(mneg);
  if (llt.info() != Eigen::Success) {
    throw Error(ErrorKind::InvalidParams, "M(-A, Lambda) is not positive definite");
  }
  const RealMatrix id = RealMatrix::Identity(2 * n, 2 * n);
  RealMatrix cov = llt.solve(id) - 0.5 * id;
  cov = ((cov + cov.transpose()) / 2.0).eval();
  GaussianState state(mean_from_mu({params.mu, a, lambda}, tol), std::move(cov), tol);
  const ValidityReport v = validate(state, tol);
  if (!v.valid()) {
    throw Error(ErrorKind::InvalidParams, "parameters do not describe a state", v.min_eig);
  }
  return state;
}

Complex generating_function(const ALambdaParams& params, const ComplexVector& u,
                            const ComplexVector& v, const Tolerances& tol) {
  require_valid_params(params.A, params.Lambda, tol);
  const int n = params.modes();
  if (u.size() != n || v.size() != n || params.mu.size() != n) {
    throw Error(ErrorKind::Dimension, "u, v and mu must have one entry per mode");
  }
  const double c = c_normalization(params.A, params.Lambda);
  const ComplexVector m = mean_from_mu(params, tol);
  const Complex vacuum_overlap = -m.dot(params.mu).real();  // dot() conjugates m
  const Complex exponent = (u.transpose() * params.mu).value() + params.mu.dot(v) +
                           (u.transpose() * params.A * u).value() +
                           (u.transpose() * params.Lambda * v).value() +
                           (v.transpose() * params.A.conjugate() * v).value();
  return c * std::exp(vacuum_overlap + exponent);
}

ALambdaParams passive_transform(const ALambdaParams& params, const ComplexMatrix& u,
                                const Tolerances& tol) {
  if (u.rows() != params.modes() || u.cols() != params.modes()) {
    throw Error(ErrorKind::Dimension, "unitary has wrong shape");
  }
  const Check c = is_unitary(u, tol);
  if (!c) throw Error(ErrorKind::NotUnitary, "matrix is not unitary", c.residual);
  return {u * params.mu, u * params.A * u.transpose(), u * params.Lambda * u.adjoint()};
}

}  // namespace gqs
