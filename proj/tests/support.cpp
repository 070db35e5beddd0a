#include "support.hpp"

#include <algorithm>

#include <Eigen/Eigenvalues>

#include "gqs/symplectic_core.hpp"

namespace testing {

RealVector sympl_eigs_oracle(const RealMatrix& s) {
  const int n = static_cast<int>(s.rows()) / 2;
  const ComplexMatrix ijs = Complex(0, 1) * (standard_symplectic_form(n) * s).cast<Complex>();
  Eigen::ComplexEigenSolver<ComplexMatrix> es(ijs);
  std::vector<double> ev;
  for (int i = 0; i < 2 * n; ++i) ev.push_back(es.eigenvalues()(i).real());
  std::sort(ev.begin(), ev.end(), std::greater<>());
  RealVector d(n);
  for (int i = 0; i < n; ++i) d(i) = ev[i];
  return d;
}

}  // namespace testing
