// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any fail.

#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>

#include "gqs/alambda.hpp"
#include "gqs/classical_rep.hpp"
#include "gqs/classify.hpp"
#include "gqs/document.hpp"
#include "gqs/error.hpp"
#include "gqs/williamson.hpp"
#include "oracle/fock_oracle.hpp"
#include "support.hpp"

using namespace gqs;
using namespace testing;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Records the first failure message and keeps going.
class Tally {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok) {
      ++failures_;
      if (first_.empty()) first_ = what;
    }
  }
  void max(double x) { worst_ = std::max(worst_, x); }
  double worst() const { return worst_; }
  Outcome done(const std::string& summary) const {
    Outcome o;
    o.pass = failures_ == 0;
    std::ostringstream ss;
    ss << summary;
    if (!o.pass) ss << "; " << failures_ << " failures, first: " << first_;
    o.detail = ss.str();
    return o;
  }

 private:
  int failures_ = 0;
  double worst_ = 0.0;
  std::string first_;
};

std::string sci(double x) {
  std::ostringstream ss;
  ss.precision(2);
  ss << std::scientific << x;
  return ss.str();
}

ComplexVector v1(Complex z) {
  ComplexVector v(1);
  v(0) = z;
  return v;
}

RealMatrix real_haar(CounterRng& rng, int dim) {
  RealMatrix g(dim, dim);
  for (int i = 0; i < g.size(); ++i) g.data()[i] = rng.normal();
  Eigen::HouseholderQR<RealMatrix> qr(g);
  RealMatrix q = qr.householderQ();
  const RealMatrix r = qr.matrixQR();
  for (int j = 0; j < dim; ++j) {
    if (r(j, j) < 0) q.col(j) *= -1.0;
  }
  return q;
}

Outcome criterion1() {
  Tally t;
  int inconsistent = 0, pun = 0;
  const Tolerances tol;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    GenSpec g = spec(seed + 100000, modes_for(seed), class_for(seed));
    g.mean_scale = seed % 2 ? 0.5 : 0.0;
    g.scale = 1.5 + static_cast<double>(seed % 4);
    const GaussianState s = random_state(g);
    const RealMatrix& c = s.cov();
    const double thr = tol.commutator_tol * (1.0 + c.norm());
    const bool commutator = commutator_residual(c) <= thr;
    const bool block =
        (embed_complex(extract_complex_projection(c)) - c).norm() <= thr;
    const ALambdaParams p = from_covariance(s, tol);
    Eigen::SelfAdjointEigenSolver<RealMatrix> es(
        0.5 * RealMatrix::Identity(c.rows(), c.rows()) + c, Eigen::EigenvaluesOnly);
    const double p_norm = 1.0 / es.eigenvalues().minCoeff();
    const bool a_zero = conjugate_linear_block(p.A).norm() <= thr * p_norm * p_norm / 4.0;
    bool gauge = true;
    try {
      gauge_certificate(s, tol);
    } catch (const Error&) {
      gauge = false;
    }
    t.require(commutator == block && block == a_zero && a_zero == gauge,
              "routes disagree at seed " + std::to_string(seed));
    try {
      const ClassificationReport r = classify(s, tol);
      t.require(r.is_pun == commutator, "classify disagrees at seed " + std::to_string(seed));
      pun += r.is_pun;
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::InconsistentClassification) ++inconsistent;
      t.require(false, std::string("classify threw ") + e.what());
    }
  }
  t.require(pun > 0 && pun < 1000, "sample lacks PUN or non-PUN states");
  return t.done("1000 states, " + std::to_string(pun) + " PUN, " +
                std::to_string(inconsistent) + " InconsistentClassification");
}

Outcome criterion2() {
  Tally t;
  double worst_normal = 0.0, worst_sympl = 0.0, max_cond = 0.0;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const int n = 1 + static_cast<int>(seed % 4);
    CounterRng rng(seed, 2002);
    const double cond = std::pow(10.0, rng.uniform(0.0, 6.0));
    RealVector lambda(2 * n);
    for (int i = 0; i < 2 * n; ++i) lambda(i) = std::exp(rng.uniform(0.0, std::log(cond)));
    lambda(0) = 1.0;
    lambda(2 * n - 1) = cond;
    const double scale = std::exp(rng.uniform(-3.0, 3.0));
    const RealMatrix q = real_haar(rng, 2 * n);
    RealMatrix s = scale * q * lambda.asDiagonal() * q.transpose();
    s = ((s + s.transpose()) / 2.0).eval();
    max_cond = std::max(max_cond, cond);
    try {
      const WilliamsonDecomposition w = williamson_decompose(s);
      RealVector dd(2 * n);
      dd << w.d, w.d;
      const RealMatrix j = standard_symplectic_form(n);
      const double normal =
          (w.L.transpose() * s * w.L - RealMatrix(dd.asDiagonal())).norm() / s.norm();
      const double sympl = (w.L.transpose() * j * w.L - j).norm();
      worst_normal = std::max(worst_normal, normal);
      worst_sympl = std::max(worst_sympl, sympl);
      t.require(normal <= 1e-9, "normal form residual " + sci(normal) + " at seed " +
                                    std::to_string(seed));
      t.require(sympl <= 1e-10, "symplectic residual " + sci(sympl) + " at seed " +
                                    std::to_string(seed) + " cond " + sci(cond));
    } catch (const Error& e) {
      t.require(false, e.what());
    }
  }
  return t.done("500 PD matrices up to cond " + sci(max_cond) + ", max normal-form " +
                sci(worst_normal) + " (rel), max symplectic " + sci(worst_sympl));
}

Outcome criterion3() {
  Tally t;
  double wu = 0, wc = 0, wd = 0;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const int n = 1 + static_cast<int>(seed % 4);
    CounterRng rng(seed, 3003);
    // H = V diag(x) V^dag with x in [0.05, 20]
    const ComplexMatrix v = random_unitary(spec(seed + 3000, n));
    RealVector x(n);
    for (int i = 0; i < n; ++i) x(i) = std::exp(rng.uniform(std::log(0.05), std::log(20.0)));
    const ComplexMatrix h = v * x.cast<Complex>().asDiagonal() * v.adjoint();
    RealMatrix s = embed_complex(h);
    s = ((s + s.transpose()) / 2.0).eval();
    try {
      const OrthosymplecticDiagonalization od = orthosymplectic_diagonalize(s);
      const double unit =
          (od.U.adjoint() * od.U - ComplexMatrix::Identity(n, n)).norm();
      const RealMatrix ur = embed_complex(od.U);
      RealVector dd(2 * n);
      dd << od.D, od.D;
      const double conj = (ur * s * ur.transpose() - RealMatrix(dd.asDiagonal())).norm();
      const double eig = (od.D - symplectic_eigenvalues(s)).norm();
      wu = std::max(wu, unit);
      wc = std::max(wc, conj);
      wd = std::max(wd, eig);
      t.require(unit <= 1e-12, "unitarity " + sci(unit));
      t.require(conj <= 1e-10, "conjugation " + sci(conj));
      t.require(eig <= 1e-10, "eigenvalue mismatch " + sci(eig));
    } catch (const Error& e) {
      t.require(false, e.what());
    }
  }
  return t.done("500 J-commuting PD matrices, max unitarity " + sci(wu) + ", conjugation " +
                sci(wc) + ", D vs symplectic eigenvalues " + sci(wd));
}

Outcome criterion4() {
  Tally t;
  double worst = 0, max_a = 0, max_l = 0;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    GenSpec g = spec(seed + 4000, modes_for(seed), class_for(seed));
    g.mean_scale = 1.0;
    const GaussianState s = random_state(g);
    try {
      const ALambdaParams p = from_covariance(s);
      const GaussianState back = to_covariance(p);
      const double cov_err = rel(back.cov(), s.cov());
      const double mean_err = (back.mean() - s.mean()).norm() / (1.0 + s.mean().norm());
      worst = std::max({worst, cov_err, mean_err});
      t.require(cov_err <= 1e-10 && mean_err <= 1e-10, "roundtrip " + sci(cov_err) + " / " +
                                                           sci(mean_err));
      const ParamReport r = validate_params(p.A, p.Lambda);
      max_a = std::max(max_a, r.normA);
      max_l = std::max(max_l, r.normLambda);
      t.require(r.normA < 0.5 && r.normLambda < 1.0, "parameter bounds violated");
    } catch (const Error& e) {
      t.require(false, e.what());
    }
  }
  return t.done("500 states, max roundtrip " + sci(worst) + ", max ||A|| " + std::to_string(max_a) +
                ", max ||Lambda|| " + std::to_string(max_l));
}

Outcome criterion5() {
  Tally t;
  const double ln2 = std::log(2.0);
  // thermal s = ln 2
  const double d = symplectic_eigenvalue_from_inverse_temperature(ln2);
  t.require(std::abs(d - 1.5) <= 1e-14, "d(ln 2) = " + std::to_string(d));
  const GaussianState th = state(d * RealMatrix::Identity(2, 2));
  const WilliamsonDecomposition w = williamson_decompose(th.cov());
  t.require(std::abs(w.d(0) - 1.5) <= 1e-14, "williamson d");
  const ThermalParameters tp = thermal_parameters(w.d);
  t.require(std::abs(tp.nbar(0) - 1.0) <= 1e-14, "nbar");
  t.require(std::abs(tp.s(0) - ln2) <= 1e-14, "s");
  const ALambdaParams p = from_covariance(th);
  t.require(std::abs(p.Lambda(0, 0) - 0.5) <= 1e-14 && std::abs(p.A(0, 0)) <= 1e-14, "Lambda");
  const double c = c_normalization(p.A, p.Lambda);
  t.require(std::abs(c - 0.5) <= 1e-14, "c");
  const Complex g = generating_function(p, v1(1.0), v1(1.0));
  t.require(std::abs(g - 0.5 * std::exp(0.5)) <= 1e-14, "G(1,1)");
  const Complex oracle =
      fock::oracle_generating_function(fock::thermal_truncated(ln2, 40), 1.0, 1.0);
  t.require(std::abs(g - oracle) <= 1e-8, "oracle G(1,1) differs by " + sci(std::abs(g - oracle)));

  // pure squeezed diag(1, 1/4)
  const GaussianState sq = state(diag2(1.0, 0.25));
  const ALambdaParams ps = from_covariance(sq);
  t.require(std::abs(ps.A(0, 0) + 1.0 / 6.0) <= 1e-14, "A = -1/6");
  t.require(std::abs(ps.Lambda(0, 0)) <= 1e-14, "Lambda = 0");
  t.require(std::abs(symplectic_eigenvalues(sq.cov())(0) - 0.5) <= 1e-14, "d = 1/2");

  // classical noise [[2,1],[1,1]]
  RealMatrix sigma(2, 2);
  sigma << 2, 1, 1, 1;
  const RealMatrix s = quantum_covariance({RealVector::Zero(2), sigma});
  t.require(rel(s, cgs_example_cov()) <= 1e-15, "S from Sigma");
  const ClassificationReport r = classify(state(s));
  t.require(r.is_gaussian && r.is_classical && !r.is_pun && !r.is_csgs, "CGS-not-PUN");
  return t.done("thermal d=1.5 nbar=1 Lambda=0.5 c=0.5 G(1,1)=" + std::to_string(g.real()) +
                " (oracle diff " + sci(std::abs(g - oracle)) + "); squeezed A=" +
                std::to_string(ps.A(0, 0).real()) + "; Sigma [[2,1],[1,1]] -> CGS not PUN");
}

Outcome criterion6() {
  Tally t;
  const Tolerances tol;
  double worst = 0.0;
  int rejected = 0, accepted = 0;
  // quantum_covariance output is always classical, including rank-deficient noise
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const int n = modes_for(seed);
    RealMatrix sigma = random_psd(spec(seed + 6000, n));
    if (seed % 3 == 0) {
      // drop rank: project out a random direction
      CounterRng rng(seed, 6);
      RealVector x(2 * n);
      for (int i = 0; i < 2 * n; ++i) x(i) = rng.normal();
      x.normalize();
      const RealMatrix proj = RealMatrix::Identity(2 * n, 2 * n) - x * x.transpose();
      sigma = proj * sigma * proj;
      sigma = ((sigma + sigma.transpose()) / 2.0).eval();
    }
    const GaussianState s = state(quantum_covariance({RealVector::Zero(2 * n), sigma}));
    t.require(is_classical(s, tol).ok, "quantum_covariance output not classical");
    // roundtrip
    const RealMatrix back = quantum_covariance(classical_covariance(s, tol));
    const double err = rel(back, s.cov());
    worst = std::max(worst, err);
    t.require(err <= 1e-12, "roundtrip " + sci(err));
  }
  // rejection boundary: shift boundary states across -tol and sample all classes
  auto expect = [&](const GaussianState& s) {
    const RealMatrix shifted = s.cov() - 0.5 * RealMatrix::Identity(s.cov().rows(), s.cov().rows());
    Eigen::SelfAdjointEigenSolver<RealMatrix> es(shifted, Eigen::EigenvaluesOnly);
    const bool should_reject = es.eigenvalues().minCoeff() < -tol.psd_tol * (1.0 + s.cov().norm());
    bool rejects = false;
    try {
      classical_covariance(s, tol);
    } catch (const Error& e) {
      rejects = e.kind() == ErrorKind::NotClassical;
      t.require(rejects, std::string("unexpected error ") + e.what());
    }
    t.require(rejects == should_reject, "rejection mismatch");
    rejected += rejects;
    accepted += !rejects;
  };
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    expect(random_state(spec(seed + 6500, modes_for(seed), class_for(seed))));
  }
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const int n = 2;
    // rank-3 noise: S - I/2 has a zero eigenvalue but S is strictly valid
    RealMatrix g(3, 4);
    CounterRng rng(seed, 66);
    for (int i = 0; i < g.size(); ++i) g.data()[i] = rng.normal();
    const RealMatrix sigma = g.transpose() * g / 4.0;
    const RealMatrix base = quantum_covariance({RealVector::Zero(2 * n), sigma});
    const double thr = tol.psd_tol * (1.0 + base.norm());
    for (double k : {-4.0, -1.5, -0.5, 0.5, 1.5}) {
      expect(state(base + k * thr * RealMatrix::Identity(4, 4)));
    }
  }
  return t.done("500 noise matrices classical, roundtrip max " + sci(worst) + "; " +
                std::to_string(rejected) + " rejected / " + std::to_string(accepted) +
                " accepted exactly at lambda_min(S - I/2) < -tol");
}

Outcome criterion7() {
  Tally t;
  const int order = 48;
  RealVector nodes(order), weights(order);
  {
    RealMatrix jm = RealMatrix::Zero(order, order);
    for (int i = 1; i < order; ++i) jm(i, i - 1) = jm(i - 1, i) = std::sqrt(double(i));
    Eigen::SelfAdjointEigenSolver<RealMatrix> es(jm);
    nodes = es.eigenvalues();
    weights = es.eigenvectors().row(0).array().square();
  }
  double worst = 0.0;
  for (std::uint64_t trial = 0; trial < 4; ++trial) {
    GenSpec g = spec(trial + 7000, 1, class_for(trial));
    g.mean_scale = 0.5;
    const GaussianState s = random_state(g);
    CounterRng rng(trial, 77);
    RealVector mu(2);
    mu << rng.normal(), rng.normal();
    const RealMatrix sigma = random_psd(spec(trial + 7100, 1));
    const ClassicalNoise noise{mu, sigma};
    const GaussianState avg = gaussian_average(s, noise);
    const Eigen::LLT<RealMatrix> llt(sigma);
    const RealMatrix chol = llt.matrixL();
    for (int probe = 0; probe < 5; ++probe) {
      const ComplexVector z = v1(1.2 * rng.complex_normal());
      Complex sum = 0.0;
      for (int i = 0; i < order; ++i) {
        for (int j = 0; j < order; ++j) {
          const Eigen::Vector2d u = mu + chol * Eigen::Vector2d(nodes(i), nodes(j));
          sum += weights(i) * weights(j) *
                 characteristic_function(displace(s, v1(Complex(u(0), u(1)))), z);
        }
      }
      const double err = std::abs(sum - characteristic_function(avg, z));
      worst = std::max(worst, err);
      t.require(err <= 1e-6, "quadrature mismatch " + sci(err));
    }
  }
  return t.done("20 probe points over 4 states, max |quadrature - closed form| " + sci(worst));
}

Outcome criterion8() {
  Tally t;
  struct Case {
    const char* name;
    GaussianState state;
    std::function<fock::TruncatedState(int)> oracle;
  };
  const double ln2 = std::log(2.0);
  const Case cases[] = {
      {"vacuum", GaussianState::vacuum(1), [](int c) { return fock::vacuum(c); }},
      {"coherent", state1(0.5 * RealMatrix::Identity(2, 2), 0.3),
       [](int c) { return fock::coherent_truncated(0.3, c); }},
      {"thermal", state(1.5 * RealMatrix::Identity(2, 2)),
       [ln2](int c) { return fock::thermal_truncated(ln2, c); }},
      {"squeezed", state(diag2(1.0, 0.25)),
       [](int c) { return fock::squeezed_vacuum_truncated(-1.0 / 6.0, c); }},
  };
  double worst = 0.0, worst_conv = 0.0;
  for (const Case& c : cases) {
    const ALambdaParams p = from_covariance(c.state);
    const fock::TruncatedState o40 = c.oracle(40), o80 = c.oracle(80);
    CounterRng rng(8, 8);
    for (int probe = 0; probe < 20; ++probe) {
      const Complex u = std::polar(std::sqrt(rng.uniform()), 2 * std::numbers::pi * rng.uniform());
      const Complex v = std::polar(std::sqrt(rng.uniform()), 2 * std::numbers::pi * rng.uniform());
      const Complex z = std::polar(std::sqrt(rng.uniform()), 2 * std::numbers::pi * rng.uniform());
      const Complex g = generating_function(p, v1(u), v1(v));
      const Complex chi = characteristic_function(c.state, v1(z));
      const Complex og = fock::oracle_generating_function(o40, u, v);
      const Complex ochi = fock::oracle_characteristic(o40, z);
      const double err = std::max(std::abs(g - og), std::abs(chi - ochi));
      const double conv = std::max(std::abs(og - fock::oracle_generating_function(o80, u, v)),
                                   std::abs(ochi - fock::oracle_characteristic(o80, z)));
      worst = std::max(worst, err);
      worst_conv = std::max(worst_conv, conv);
      t.require(err <= 1e-8, std::string(c.name) + " mismatch " + sci(err));
      t.require(conv <= 1e-12, std::string(c.name) + " cutoff change " + sci(conv));
    }
  }
  return t.done("4 states x 20 probes, max |closed form - oracle| " + sci(worst) +
                ", max cutoff 40->80 change " + sci(worst_conv));
}

Outcome criterion9() {
  Tally t;
  bool gs_gap = false, cgs_gap = false, pun_gap = false;
  int samples = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    for (StateClass c : {StateClass::GS, StateClass::CGS, StateClass::PUN, StateClass::CSGS,
                         StateClass::PURE}) {
      GenSpec g = spec(seed + 9000, modes_for(seed), c);
      if (c == StateClass::GS) g.min_squeeze = 2.0;
      const ClassificationReport r = classify(random_state(g));
      ++samples;
      t.require(r.is_gaussian, "generator produced an invalid state");
      t.require((!r.is_csgs || r.is_pun) && (!r.is_pun || r.is_classical) &&
                    r.is_pun == r.is_gauge_invariant,
                "implication chain broken");
      gs_gap = gs_gap || (r.is_gaussian && !r.is_classical);
      cgs_gap = cgs_gap || (r.is_classical && !r.is_pun);
      pun_gap = pun_gap || (r.is_pun && !r.is_csgs);
    }
  }
  t.require(gs_gap && cgs_gap && pun_gap, "missing strict-gap witness");
  int csgs_changes = 0, single_mode = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const int n = modes_for(seed);
    const GaussianState s = random_state(spec(seed + 9500, n, class_for(seed)));
    const ComplexMatrix u = random_unitary(spec(seed + 9600, n));
    const ClassificationReport a = classify(s), b = classify(apply_passive(s, u));
    t.require(a.is_gaussian == b.is_gaussian && a.is_classical == b.is_classical &&
                  a.is_pun == b.is_pun && a.is_gauge_invariant == b.is_gauge_invariant,
              "passive conjugation changed a flag at seed " + std::to_string(seed));
    if (n == 1) {
      ++single_mode;
      t.require(a.is_csgs == b.is_csgs, "single-mode CSGS flag changed");
    } else {
      csgs_changes += a.is_csgs != b.is_csgs;
    }
  }
  return t.done(std::to_string(samples) + " samples, witnesses GS\\CGS CGS\\PUN PUN\\CSGS " +
                (gs_gap && cgs_gap && pun_gap ? "found" : "MISSING") +
                "; 200 passive conjugations keep GS/CGS/PUN/gauge flags (CSGS kept on " +
                std::to_string(single_mode) + " single-mode samples; " +
                std::to_string(csgs_changes) + " multi-mode CSGS changes, a basis-dependent class)");
}

struct Proc {
  int code;
  std::string out;
};

Proc shell(const std::string& cmd) {
  Proc p{-1, {}};
  FILE* f = popen(cmd.c_str(), "r");
  if (!f) return p;
  char buf[4096];
  std::size_t k;
  while ((k = fread(buf, 1, sizeof buf, f)) > 0) p.out.append(buf, k);
  const int status = pclose(f);
  p.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return p;
}

Outcome criterion10() {
  Tally t;
  const std::string bin = GQS_BINARY;
  int pipelines = 0;
  for (const char* cls : {"gs", "cgs", "pun", "csgs", "pure"}) {
    for (int seed = 0; seed < 20; ++seed) {
      const int n = 1 + seed % 4;
      const std::string gen = bin + " random " + cls + " " + std::to_string(n) + " " +
                              std::to_string(seed) + " 1";
      const Proc r = shell(gen + " | " + bin + " classify 2>/dev/null");
      ++pipelines;
      t.require(r.code == 0, std::string("classify exit ") + std::to_string(r.code));
      doc::Json j;
      try {
        j = doc::Json::parse(r.out);
      } catch (const std::exception&) {
        t.require(false, "unparseable report");
        continue;
      }
      const doc::Json& f = j["flags"];
      const std::string c = cls;
      bool ok = f["gaussian"] == true;
      if (c == "cgs") ok = ok && f["classical"] == true;
      if (c == "pun") ok = ok && f["pun"] == true && f["gauge_invariant"] == true;
      if (c == "csgs") ok = ok && f["csgs"] == true && f["pun"] == true;
      if (c == "pure") {
        for (const auto& d : j["sympl_eigs"]) ok = ok && std::abs(d.get<double>() - 0.5) < 1e-9;
      }
      t.require(ok, c + " seed " + std::to_string(seed) + " flags do not match its class");

      // document roundtrip through the library must be value-exact
      const Proc g = shell(gen);
      const doc::Json sj = doc::Json::parse(g.out);
      const doc::StateDocument d = doc::state_from_json(sj);
      const std::string again = doc::state_to_json(d.state, d.label).dump();
      t.require(again == sj.dump(), "document roundtrip not exact: " + sj.dump() + " vs " + again);
    }
  }
  // exit-code contract
  const std::string vac = R"('{"n":1,"mean":[[0,0]],"cov":[[0.5,0],[0,0.5]]}')";
  const std::string bad = R"('{"n":1,"mean":[[0,0]],"cov":[[0.4,0],[0,0.4]]}')";
  const std::string trunc = R"('{"n":1,"mean":[[0,0]],"cov":[[0.5,0],')";
  const int ok = shell("echo " + vac + " | " + bin + " classify >/dev/null 2>&1").code;
  const int invalid = shell("echo " + bad + " | " + bin + " validate >/dev/null 2>&1").code;
  const int parse = shell("echo " + trunc + " | " + bin + " classify >/dev/null 2>&1").code;
  const int usage = shell(bin + " nonsense >/dev/null 2>&1").code;
  t.require(ok == 0, "valid input exit " + std::to_string(ok));
  t.require(invalid == 2, "invalid state exit " + std::to_string(invalid));
  t.require(parse == 1, "truncated input exit " + std::to_string(parse));
  t.require(usage == 1, "usage error exit " + std::to_string(usage));
  const Proc a = shell(bin + " random pun 2 42 5");
  const Proc b = shell(bin + " random pun 2 42 5");
  t.require(a.out == b.out && !a.out.empty(), "random output not reproducible");
  return t.done(std::to_string(pipelines) + " random|classify pipelines match their class; exit codes " +
                std::to_string(ok) + "/" + std::to_string(invalid) + "/" + std::to_string(parse) +
                " for valid/invalid/truncated; document roundtrip exact");
}

}  // namespace

int main() {
  const std::pair<const char*, Outcome (*)()> criteria[] = {
      {"PUN route agreement", criterion1},
      {"Williamson residual contract", criterion2},
      {"orthosymplectic diagonalization", criterion3},
      {"(A, Lambda) roundtrip and bounds", criterion4},
      {"pinned scalars", criterion5},
      {"classicality boundary", criterion6},
      {"averaging by quadrature", criterion7},
      {"Fock oracle agreement", criterion8},
      {"class hierarchy witnesses", criterion9},
      {"CLI end-to-end", criterion10},
  };
  int failed = 0;
  for (std::size_t i = 0; i < std::size(criteria); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("uncaught: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << "criterion " << (i + 1) << " [" << (o.pass ? "PASS" : "FAIL") << "] "
              << criteria[i].first << ": " << o.detail << std::endl;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all criteria passed")
            << std::endl;
  return failed ? 1 : 0;
}
