#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wpd/linalg.hpp"

namespace wpd {

/// rho = (I + r1 s1 + r2 s2 + r3 s3)/2. BlochOutOfBall if |r| > 1.
DensityMatrix bloch_qubit(double r1, double r2, double r3);

struct WernerData {
  DensityMatrix state;       // dimension n^2
  int n = 2;
  double m = 0.0;
  double p = 0.0;            // tr(W P_sym) = (1 + m)/2
  double lambda_sym = 0.0;   // 2p/(n^2 + n), multiplicity (n^2 + n)/2
  double lambda_asym = 0.0;  // 2(1 - p)/(n^2 - n), multiplicity (n^2 - n)/2
  double mu1 = 0.0;          // (m + 1)/(n^2 + n), n diagonal entries
  double mu2 = 0.0;          // (n - m)/(n^3 - n), n^2 - n diagonal entries
};

/// W = ((n - m) I + (n m - 1) F)/(n^3 - n) with F the flip operator.
/// BadParameters unless n >= 2 and 0 <= m <= 1.
WernerData werner(int n, double m);

/// Hilbert-Schmidt random state G G^H / tr(G G^H), G complex Gaussian.
DensityMatrix random_mixed(std::size_t dim, std::uint64_t seed);

/// Haar-random pure state.
DensityMatrix random_pure(std::size_t dim, std::uint64_t seed);

/// Haar-random unitary (QR of a Ginibre matrix with the phase fix).
Matrix random_unitary(std::size_t dim, std::uint64_t seed);

/// Random pure state whose amplitudes all have modulus 1/sqrt(dim).
DensityMatrix random_maximally_coherent(std::size_t dim, std::uint64_t seed);

/// Named states:
///   "maximally-mixed"    I/dim
///   "maximally-coherent" sum_jk e^{i(t_j - t_k)} |j><k| / dim, phases default 0
///   "basis"              |index><index|
///   "bell"               index 0..3 selects Phi+, Phi-, Psi+, Psi- (dim must be 4)
DensityMatrix named_state(std::string_view name, std::size_t dim, std::size_t index = 0,
                          std::span<const double> phases = {});

enum class StateKind { Bloch, Werner, RandomMixed, RandomPure, Named, File };

/// Declarative state description, as written on the command line:
///   bloch:0.3,0,0.4
///   werner:n=3,m=0.5
///   random:dim=4,seed=7          (random-mixed: and random-pure: also accepted)
///   named:bell | named:basis,dim=3,index=1 | named:maximally-coherent,dim=3,phases=0;0.5;1
///   file:state.json
struct StateSpec {
  StateKind kind = StateKind::Named;
  std::array<double, 3> bloch{};
  int werner_n = 2;
  double werner_m = 0.0;
  std::size_t dim = 2;
  std::uint64_t seed = 0;
  std::string name;
  std::size_t index = 0;
  std::vector<double> phases;
  std::string path;
};

/// ParseError for malformed text; parameter-range errors surface from build_state.
StateSpec parse_state_spec(std::string_view text);
std::string to_string(const StateSpec& spec);
DensityMatrix build_state(const StateSpec& spec);

}  // namespace wpd
