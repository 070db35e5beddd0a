#include "gqs/randgen.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace gqs {
namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Stream ids keep the pieces of one state independent of each other.
enum Stream : std::uint64_t {
  kUnitary = 1,
  kUnitaryLeft = 2,
  kUnitaryRight = 3,
  kSqueeze = 4,
  kSpectrum = 5,
  kNoise = 6,
  kMean = 7,
};

GenSpec with_seed_stream(const GenSpec& spec, std::uint64_t stream) {
  GenSpec s = spec;
  s.seed = mix(spec.seed ^ mix(stream * kGolden));
  return s;
}

ComplexMatrix haar_unitary(CounterRng& rng, int n) {
  ComplexMatrix g(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) g(i, j) = rng.complex_normal();
  const Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(n, n);
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    const Complex d = r(j, j);
    const double mag = std::abs(d);
    q.col(j) *= mag > 0.0 ? d / mag : Complex(1.0, 0.0);
  }
  return q;
}

}  // namespace

std::string_view to_string(StateClass c) {
  switch (c) {
    case StateClass::GS: return "gs";
    case StateClass::CGS: return "cgs";
    case StateClass::PUN: return "pun";
    case StateClass::CSGS: return "csgs";
    case StateClass::PURE: return "pure";
  }
  return "?";
}

std::optional<StateClass> parse_state_class(std::string_view name) {
  for (StateClass c : {StateClass::GS, StateClass::CGS, StateClass::PUN, StateClass::CSGS,
                       StateClass::PURE}) {
    if (name == to_string(c)) return c;
  }
  return std::nullopt;
}

void GenSpec::check() const {
  if (n < 1) throw Error(ErrorKind::Dimension, "GenSpec.n must be >= 1");
  if (!(scale >= 1.0) || !std::isfinite(scale)) {
    throw Error(ErrorKind::Dimension, "GenSpec.scale must be >= 1");
  }
  if (!(min_squeeze >= 1.0) || !std::isfinite(min_squeeze)) {
    throw Error(ErrorKind::Dimension, "GenSpec.min_squeeze must be >= 1");
  }
  if (!(mean_scale >= 0.0) || !std::isfinite(mean_scale)) {
    throw Error(ErrorKind::Dimension, "GenSpec.mean_scale must be >= 0");
  }
}

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream)
    : key_(mix(seed ^ mix(stream + kGolden))) {}

std::uint64_t CounterRng::next_u64() { return mix(key_ + (++counter_) * kGolden); }

double CounterRng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double CounterRng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double CounterRng::normal() {
  // 1 - u keeps the log argument in (0, 1].
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Complex CounterRng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return Complex(re, im) / std::sqrt(2.0);
}

ComplexMatrix random_unitary(const GenSpec& spec) {
  spec.check();
  CounterRng rng(spec.seed, kUnitary);
  return haar_unitary(rng, spec.n);
}

RealMatrix random_orthosymplectic(const GenSpec& spec) {
  return embed_complex(random_unitary(spec));
}

RealMatrix random_symplectic(const GenSpec& spec) {
  spec.check();
  const int n = spec.n;
  if (spec.identity_factors) return RealMatrix::Identity(2 * n, 2 * n);
  CounterRng left(spec.seed, kUnitaryLeft);
  CounterRng right(spec.seed, kUnitaryRight);
  CounterRng squeeze(spec.seed, kSqueeze);
  const RealMatrix o1 = embed_complex(haar_unitary(left, n));
  const RealMatrix o2 = embed_complex(haar_unitary(right, n));
  const double lo = std::log(spec.min_squeeze);
  const double hi = std::log(std::max(spec.scale, spec.min_squeeze));
  RealVector stretch(2 * n);
  for (int j = 0; j < n; ++j) {
    double r = squeeze.uniform(lo, hi);
    if (squeeze.uniform() < 0.5) r = -r;
    stretch(j) = std::exp(r);
    stretch(n + j) = std::exp(-r);
  }
  return o1 * stretch.asDiagonal() * o2;
}

RealMatrix random_psd(const GenSpec& spec) {
  spec.check();
  const int dim = 2 * spec.n;
  CounterRng rng(spec.seed, kNoise);
  RealMatrix g(dim, dim);
  for (int j = 0; j < dim; ++j)
    for (int i = 0; i < dim; ++i) g(i, j) = rng.normal();
  RealMatrix sigma = g.transpose() * g;
  Eigen::SelfAdjointEigenSolver<RealMatrix> es(sigma, Eigen::EigenvaluesOnly);
  sigma *= rng.uniform(spec.scale / 10.0, spec.scale) / es.eigenvalues().maxCoeff();
  return (sigma + sigma.transpose()) / 2.0;
}

GaussianState random_state(const GenSpec& spec) {
  spec.check();
  const int n = spec.n;
  const RealMatrix id = RealMatrix::Identity(2 * n, 2 * n);
  CounterRng spectrum(spec.seed, kSpectrum);
  CounterRng mean_rng(spec.seed, kMean);

  ComplexVector mean = ComplexVector::Zero(n);
  if (spec.mean_scale > 0.0) {
    for (int j = 0; j < n; ++j) {
      const double re = mean_rng.normal();
      const double im = mean_rng.normal();
      mean(j) = spec.mean_scale * Complex(re, im);
    }
  }

  RealMatrix cov;
  switch (spec.class_tag) {
    case StateClass::GS:
    case StateClass::PURE: {
      RealVector d(2 * n);
      for (int j = 0; j < n; ++j) {
        const double dj =
            spec.class_tag == StateClass::PURE ? 0.5 : spectrum.uniform(0.5, spec.scale);
        d(j) = dj;
        d(n + j) = dj;
      }
      // M^T (D + D) M for symplectic M is the covariance (L^{-1})^T (D + D) L^{-1}
      // with L = M^{-1}.
      const RealMatrix m = random_symplectic(with_seed_stream(spec, kSqueeze));
      cov = m.transpose() * d.asDiagonal() * m;
      break;
    }
    case StateClass::CGS: {
      const RealMatrix sigma = random_psd(spec);
      const RealMatrix j = standard_symplectic_form(n);
      cov = 0.5 * id + 2.0 * j.transpose() * sigma * j;
      break;
    }
    case StateClass::PUN: {
      RealVector x(n);
      for (int j = 0; j < n; ++j) x(j) = spectrum.uniform(0.5, spec.scale);
      const ComplexMatrix u = random_unitary(spec);
      cov = embed_complex(u * x.cast<Complex>().asDiagonal() * u.adjoint());
      break;
    }
    case StateClass::CSGS: {
      RealVector d(2 * n);
      for (int j = 0; j < n; ++j) {
        const double nj = spectrum.uniform(0.0, spec.scale);
        d(j) = 0.5 + 2.0 * nj;
        d(n + j) = d(j);
      }
      cov = d.asDiagonal();
      break;
    }
  }
  cov = ((cov + cov.transpose()) / 2.0).eval();
  return GaussianState(std::move(mean), std::move(cov));
}

}  // namespace gqs
