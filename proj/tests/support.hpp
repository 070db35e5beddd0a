#pragma once

#include <cmath>
#include <cstdint>

#include "gqs/gaussian_state.hpp"
#include "gqs/randgen.hpp"

namespace testing {

using namespace gqs;

inline double rel(const RealMatrix& a, const RealMatrix& b) {
  return (a - b).norm() / (1.0 + b.norm());
}

inline double rel(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).norm() / (1.0 + b.norm());
}

inline RealMatrix diag2(double a, double b) {
  RealMatrix m = RealMatrix::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

inline GaussianState state(const RealMatrix& cov) {
  return GaussianState(ComplexVector::Zero(cov.rows() / 2), cov);
}

inline GaussianState state1(const RealMatrix& cov, Complex m) {
  ComplexVector mean(1);
  mean(0) = m;
  return GaussianState(mean, cov);
}

// The 2x2 covariance built from the classical noise [[2,1],[1,1]].
inline RealMatrix cgs_example_cov() {
  RealMatrix s(2, 2);
  s << 2.5, -2.0, -2.0, 4.5;
  return s;
}

// [[1.5, 0.5i], [-0.5i, 1.5]]
inline ComplexMatrix two_mode_x() {
  ComplexMatrix x(2, 2);
  x << 1.5, Complex(0, 0.5), Complex(0, -0.5), 1.5;
  return x;
}

inline GenSpec spec(std::uint64_t seed, int n, StateClass c = StateClass::GS) {
  GenSpec g;
  g.seed = seed;
  g.n = n;
  g.class_tag = c;
  return g;
}

inline StateClass class_for(std::uint64_t i) {
  static constexpr StateClass all[] = {StateClass::GS, StateClass::CGS, StateClass::PUN,
                                       StateClass::CSGS, StateClass::PURE};
  return all[i % 5];
}

inline int modes_for(std::uint64_t i) { return 1 + static_cast<int>((i / 5) % 4); }

// Oracle for symplectic eigenvalues: moduli of the spectrum of iJS, each
// appearing twice, sorted descending and deduplicated pairwise.
RealVector sympl_eigs_oracle(const RealMatrix& s);

}  // namespace testing
