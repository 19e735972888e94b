#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "netalign/instance.hpp"

namespace netalign {

// Seedable generator with draws built from the raw mt19937_64 stream, so
// identical seeds give identical instances on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform in [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  bool bernoulli(double p) {
    if (p <= 0.0) return false;
    if (p >= 1.0) return true;
    return uniform() < p;
  }

 private:
  std::mt19937_64 gen_;
};

struct GridGenConfig {
  int k = 20;                          // grid side; |V_A| = k^2
  double noise_expected_degree = 0.0;  // n * p of the uniform L noise
  double q = 0.0;                      // perturbation strength
  int d = 0;                           // locality radius of the L noise
  double local_noise_p = 0.2;
  std::uint64_t seed = 0;

  void validate() const;
};

struct PowerLawGenConfig {
  int n = 400;
  double theta = 1.8;
  double noise_expected_degree = 0.0;
  double q = 0.0;
  double mean_degree = 2.0;
  std::uint64_t seed = 0;

  void validate() const;
};

struct GeneratedInstance {
  ProblemInstance instance;
  std::vector<int> truth;  // canonical edge indices of the planted matching
};

// Two perturbed copies of a k x k grid with a noisy candidate graph.
// Correct edges (i, i') carry weight 1, noise edges a uniform [0,1) weight.
// Perturbation adds u-v with probability min(1, q / dist^2) where dist is
// the Manhattan distance in the unperturbed grid; the distance-local noise
// likewise measures distances in the unperturbed grid.
GeneratedInstance gen_grid(const GridGenConfig& cfg);

// Chung-Lu pairs with rank-based expected degrees proportional to
// rank^(-1/(theta-1)), scaled to the configured mean degree, then perturbed
// with strength q (distances in the unperturbed sample, unreachable pairs
// skipped). No distance-local candidate noise.
GeneratedInstance gen_powerlaw(const PowerLawGenConfig& cfg);

}  // namespace netalign
