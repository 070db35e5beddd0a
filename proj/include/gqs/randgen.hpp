#pragma once

// Seeded generators for property suites. Every output is a pure function of
// its GenSpec.
//
// Random stream: "splitmix64-counter/1". With mix() the splitmix64 finalizer
// and g = 0x9E3779B97F4A7C15, stream (seed, id) has key
// mix(seed ^ mix(id + g)) and word k = 1, 2, ... is mix(key + k * g). Uniform
// doubles use the top 53 bits; normals use Box-Muller on two uniforms.
// Changing any of this changes every golden value downstream.

#include <cstdint>
#include <optional>
#include <string_view>

#include "gqs/gaussian_state.hpp"

namespace gqs {

enum class StateClass { GS, CGS, PUN, CSGS, PURE };

std::string_view to_string(StateClass c);
std::optional<StateClass> parse_state_class(std::string_view name);

struct GenSpec {
  std::uint64_t seed = 0;
  int n = 1;
  StateClass class_tag = StateClass::GS;
  // Eigenvalue spread: symplectic eigenvalues and photon numbers lie in
  // [1/2, scale] or [0, scale], squeezing singular values in [1/scale, scale].
  double scale = 2.0;
  // Lower bound on every squeezing factor e^{|r_j|} (GS and PURE only).
  double min_squeeze = 1.0;
  // Standard deviation of the real and imaginary parts of the mean; 0 gives
  // mean-zero states.
  double mean_scale = 0.0;
  // Debug: force O_1 = O_2 = I and r = 0 in random_symplectic.
  bool identity_factors = false;

  void check() const;
};

class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next_u64();
  double uniform();  // [0, 1)
  double uniform(double lo, double hi);
  double normal();
  Complex complex_normal();  // E|z|^2 = 1

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

ComplexMatrix random_unitary(const GenSpec& spec);
RealMatrix random_orthosymplectic(const GenSpec& spec);
RealMatrix random_symplectic(const GenSpec& spec);
GaussianState random_state(const GenSpec& spec);

/// Random PSD matrix G^T G scaled so its spectral norm is uniform in
/// [scale / 10, scale].
RealMatrix random_psd(const GenSpec& spec);

}  // namespace gqs
