#pragma once

#include <optional>
#include <vector>

#include "gqs/symplectic_core.hpp"

namespace gqs {

// An n-mode Gaussian state: complex mean annihilation vector m and the real
// 2n x 2n covariance matrix S_R. Construction only checks shapes and
// finiteness; physical validity is decided by validate().
class GaussianState {
 public:
  GaussianState(ComplexVector mean, RealMatrix cov, const Tolerances& tol = {});

  static GaussianState vacuum(int n);
  static GaussianState thermal(const RealVector& nbar);

  int modes() const noexcept { return n_; }
  const ComplexVector& mean() const noexcept { return mean_; }
  const RealMatrix& cov() const noexcept { return cov_; }

  // (Re m, Im m)
  RealVector mean_real() const { return embed_vector(mean_); }

  // ||S - S^T||_F / 2 of the matrix passed to the constructor.
  double asymmetry() const noexcept { return asymmetry_; }
  bool symmetric() const noexcept { return symmetric_; }

 private:
  int n_;
  ComplexVector mean_;
  RealMatrix cov_;
  double asymmetry_ = 0.0;
  bool symmetric_ = true;
};

// Mean and covariance of a classical normal distribution over (Re a, Im a).
struct ClassicalNoise {
  RealVector mu_R;
  RealMatrix sigma_R;
};

struct ValidityReport {
  bool symmetric = false;
  bool uncertainty_ok = false;
  double min_eig = 0.0;  // lambda_min(S_R + (i/2) J)
  std::vector<double> sympl_eigs;  // empty when S_R is not positive definite

  bool valid() const noexcept { return symmetric && uncertainty_ok; }
};

ValidityReport validate(const GaussianState& state, const Tolerances& tol = {});

/// Throws Error(InvalidState) unless validate() accepts the state.
void require_valid(const GaussianState& state, const Tolerances& tol = {});

/// exp(-2i z_R^T J m_R - z_R^T S_R z_R) with z_R = (Re z, Im z).
Complex characteristic_function(const GaussianState& state, const ComplexVector& z,
                                const Tolerances& tol = {});

GaussianState displace(const GaussianState& state, const ComplexVector& u);

/// Mean L m_R, covariance (L^{-1})^T S_R L^{-1}.
GaussianState apply_symplectic(const GaussianState& state, const RealMatrix& l,
                               const Tolerances& tol = {});

/// Mean U m, covariance U_R S_R U_R^T.
GaussianState apply_passive(const GaussianState& state, const ComplexMatrix& u,
                            const Tolerances& tol = {});

/// Average of W(a) rho W(a)^dagger over a ~ N(mu_R, sigma_R):
/// mean m + mu, covariance S_R + 2 J^T sigma_R J.
GaussianState gaussian_average(const GaussianState& state, const ClassicalNoise& noise,
                               const Tolerances& tol = {});

}  // namespace gqs
