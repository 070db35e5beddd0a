#pragma once

// (mu, A, Lambda) parametrization of Gaussian states through the generating
// function G(u, v) = <e(conj u)| rho |e(v)>.
//
// Block conventions on R^{2n}:
//   Lambda_R = [[Re L, -Im L], [Im L, Re L]]   (commutes with J)
//   A_R      = [[Re A,  Im A], [Im A, -Re A]]  (anticommutes with J)
//   M(A, L)  = I - Lambda_R - 2 A_R
// and the covariance relation (I/2 + S_R)^{-1} = M(-A, Lambda).

#include "gqs/gaussian_state.hpp"

namespace gqs {

struct ALambdaParams {
  ComplexVector mu;
  ComplexMatrix A;       // complex symmetric
  ComplexMatrix Lambda;  // Hermitian PSD

  int modes() const noexcept { return static_cast<int>(A.rows()); }
};

struct ParamReport {
  bool a_symmetric = false;
  bool lambda_hermitian = false;
  bool lambda_psd = false;
  bool m_pd = false;
  double min_eig_m = 0.0;
  double min_eig_lambda = 0.0;
  double normA = 0.0;       // operator norm, < 1/2 for a state
  double normLambda = 0.0;  // operator norm, < 1 for a state

  bool valid() const noexcept { return a_symmetric && lambda_hermitian && lambda_psd && m_pd; }
};

/// The anticommuting block [[Re A, Im A], [Im A, -Re A]].
RealMatrix conjugate_linear_block(const ComplexMatrix& a);

RealMatrix m_matrix(const ComplexMatrix& a, const ComplexMatrix& lambda);

/// sqrt(det M(A, Lambda)); throws Error(InvalidParams) if M is not PD.
double c_normalization(const ComplexMatrix& a, const ComplexMatrix& lambda);

ParamReport validate_params(const ComplexMatrix& a, const ComplexMatrix& lambda,
                            const Tolerances& tol = {});

ALambdaParams from_covariance(const GaussianState& state, const Tolerances& tol = {});

GaussianState to_covariance(const ALambdaParams& params, const Tolerances& tol = {});

/// Real-linear form of m -> (I - Lambda - 2 A C) m, i.e. mu_R = M(A, Lambda) m_R.
RealMatrix mean_map(const ComplexMatrix& a, const ComplexMatrix& lambda);

/// Solves (I - Lambda - 2 A C) m = mu for m.
ComplexVector mean_from_mu(const ALambdaParams& params, const Tolerances& tol = {});

/// c(A, Lambda) exp(-Re(m^dagger mu)) exp(u^T mu + conj(mu)^T v + u^T A u +
/// u^T Lambda v + v^T conj(A) v). The exp(-Re(m^dagger mu)) factor equals
/// <0|rho|0> / c and is 1 for mean-zero states.
Complex generating_function(const ALambdaParams& params, const ComplexVector& u,
                            const ComplexVector& v, const Tolerances& tol = {});

/// Parameters of Gamma(U) rho Gamma(U)^dagger: (U mu, U A U^T, U Lambda U^dagger).
ALambdaParams passive_transform(const ALambdaParams& params, const ComplexMatrix& u,
                                const Tolerances& tol = {});

}  // namespace gqs
