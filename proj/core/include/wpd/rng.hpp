#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace wpd {

/// Seedable generator with a fully specified output stream.
///
/// The engine is std::mt19937_64 (its output sequence is fixed by the C++
/// standard). Uniform doubles take the top 53 bits of each draw; complex
/// Gaussians use the Box-Muller transform on two consecutive uniforms. No
/// std distribution is used, since their algorithms are implementation
/// defined and would break cross-platform reproducibility.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Standard complex normal: real and imaginary parts independent N(0, 1/2).
  std::complex<double> complex_normal();

  /// Standard real normal N(0, 1).
  double normal();

  std::uint64_t next_u64() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// SplitMix64 finalizer, used to derive independent per-sample seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index = 0);

}  // namespace wpd
