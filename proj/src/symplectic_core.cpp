#include "gqs/symplectic_core.hpp"

#include <cmath>
#include <string>

namespace gqs {

void Tolerances::check() const {
  auto ok = [](double v) { return std::isfinite(v) && v >= 0.0; };
  const std::pair<const char*, double> fields[] = {
      {"sym_tol", sym_tol},
      {"psd_tol", psd_tol},
      {"commutator_tol", commutator_tol},
      {"residual_tol", residual_tol},
      {"eig_floor", eig_floor},
  };
  for (const auto& [name, value] : fields) {
    if (!ok(value)) {
      throw Error(ErrorKind::Dimension,
                  std::string("tolerance ") + name + " must be finite and >= 0");
    }
  }
}

RealMatrix standard_symplectic_form(int n) {
  if (n < 1) throw Error(ErrorKind::Dimension, "mode count must be >= 1");
  RealMatrix j = RealMatrix::Zero(2 * n, 2 * n);
  j.topRightCorner(n, n).setIdentity();
  j.bottomLeftCorner(n, n) = -RealMatrix::Identity(n, n);
  return j;
}

RealMatrix embed_complex(const ComplexMatrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw Error(ErrorKind::Dimension, "embed_complex needs a non-empty square matrix");
  }
  const Eigen::Index n = m.rows();
  RealMatrix r(2 * n, 2 * n);
  r.topLeftCorner(n, n) = m.real();
  r.topRightCorner(n, n) = -m.imag();
  r.bottomLeftCorner(n, n) = m.imag();
  r.bottomRightCorner(n, n) = m.real();
  return r;
}

int mode_count(const RealMatrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0 || m.rows() % 2 != 0) {
    throw Error(ErrorKind::Dimension,
                "expected a square matrix of even dimension, got " +
                    std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  return static_cast<int>(m.rows() / 2);
}

double commutator_residual(const RealMatrix& m) {
  const RealMatrix j = standard_symplectic_form(mode_count(m));
  return (m * j - j * m).norm();
}

ComplexMatrix extract_complex_projection(const RealMatrix& m) {
  const Eigen::Index n = mode_count(m);
  const auto e = m.topLeftCorner(n, n);
  const auto f = m.topRightCorner(n, n);
  const auto g = m.bottomLeftCorner(n, n);
  const auto h = m.bottomRightCorner(n, n);
  ComplexMatrix k(n, n);
  k.real() = (e + h) / 2.0;
  k.imag() = (g - f) / 2.0;
  return k;
}

ComplexMatrix extract_complex(const RealMatrix& m, const Tolerances& tol) {
  const double residual = commutator_residual(m);
  const double threshold = tol.commutator_tol * (1.0 + m.norm());
  if (!(residual <= threshold)) {
    throw Error(ErrorKind::NotJCommuting,
                "commutator residual " + std::to_string(residual) + " exceeds " +
                    std::to_string(threshold),
                residual);
  }
  return extract_complex_projection(m);
}

RealVector embed_vector(const ComplexVector& v) {
  RealVector r(2 * v.size());
  r.head(v.size()) = v.real();
  r.tail(v.size()) = v.imag();
  return r;
}

ComplexVector extract_vector(const RealVector& v) {
  if (v.size() % 2 != 0) throw Error(ErrorKind::Dimension, "real vector of odd length");
  const Eigen::Index n = v.size() / 2;
  ComplexVector c(n);
  c.real() = v.head(n);
  c.imag() = v.tail(n);
  return c;
}

JSplit j_commutant_split(const RealMatrix& t) {
  const RealMatrix j = standard_symplectic_form(mode_count(t));
  const RealMatrix jtj = j * t * j;
  return {(t - jtj) / 2.0, (t + jtj) / 2.0};
}

Check is_symplectic(const RealMatrix& m, const Tolerances& tol) {
  const RealMatrix j = standard_symplectic_form(mode_count(m));
  Check c;
  c.residual = (m.transpose() * j * m - j).norm();
  c.threshold = tol.commutator_tol * (1.0 + m.squaredNorm());
  c.ok = c.residual <= c.threshold;
  return c;
}

OrthosymplecticCheck is_orthosymplectic(const RealMatrix& m, const Tolerances& tol) {
  const Check s = is_symplectic(m, tol);
  OrthosymplecticCheck c;
  c.symplectic_residual = s.residual;
  c.orthogonality_residual =
      (m.transpose() * m - RealMatrix::Identity(m.rows(), m.cols())).norm();
  c.ok = s.ok && c.orthogonality_residual <= s.threshold;
  return c;
}

Check is_unitary(const ComplexMatrix& u, const Tolerances& tol) {
  if (u.rows() != u.cols() || u.rows() == 0) {
    throw Error(ErrorKind::Dimension, "unitary must be a non-empty square matrix");
  }
  Check c;
  c.residual = (u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols())).norm();
  c.threshold = tol.commutator_tol * (1.0 + u.squaredNorm());
  c.ok = c.residual <= c.threshold;
  return c;
}

ComplexMatrix hermitize(const ComplexMatrix& m, const Tolerances& tol, const char* what) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorKind::Dimension, std::string(what) + " must be square");
  }
  const double deviation = (m - m.adjoint()).norm() / 2.0;
  if (!(deviation <= tol.sym_tol * (1.0 + m.norm()))) {
    throw Error(ErrorKind::NotHermitian,
                std::string(what) + " deviates from Hermitian by " + std::to_string(deviation),
                deviation);
  }
  return (m + m.adjoint()) / 2.0;
}

RealMatrix symmetrize(const RealMatrix& m, const Tolerances& tol, const char* what) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorKind::Dimension, std::string(what) + " must be square");
  }
  const double deviation = (m - m.transpose()).norm() / 2.0;
  if (!(deviation <= tol.sym_tol * (1.0 + m.norm()))) {
    throw Error(ErrorKind::NotHermitian,
                std::string(what) + " deviates from symmetric by " + std::to_string(deviation),
                deviation);
  }
  return (m + m.transpose()) / 2.0;
}

PsdCheck hermitian_psd_check(const ComplexMatrix& h, const Tolerances& tol) {
  const ComplexMatrix sym = hermitize(h, tol, "matrix");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(sym, Eigen::EigenvaluesOnly);
  PsdCheck c;
  c.min_eigenvalue = es.eigenvalues().minCoeff();
  c.threshold = -tol.psd_tol * (1.0 + sym.norm());
  c.ok = c.min_eigenvalue >= c.threshold;
  return c;
}

PsdCheck symmetric_psd_check(const RealMatrix& s, const Tolerances& tol) {
  const RealMatrix sym = symmetrize(s, tol, "matrix");
  Eigen::SelfAdjointEigenSolver<RealMatrix> es(sym, Eigen::EigenvaluesOnly);
  PsdCheck c;
  c.min_eigenvalue = es.eigenvalues().minCoeff();
  c.threshold = -tol.psd_tol * (1.0 + sym.norm());
  c.ok = c.min_eigenvalue >= c.threshold;
  return c;
}

bool all_finite(const RealMatrix& m) { return m.allFinite(); }
bool all_finite(const ComplexMatrix& m) {
  return m.real().allFinite() && m.imag().allFinite();
}

}  // namespace gqs
