#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "fullgroup/bisection.hpp"
#include "fullgroup/steinberg.hpp"

namespace fullgroup {

/// Deterministic random source.  mt19937_64 has a fully specified output
/// sequence and next_below uses rejection sampling, so streams are identical
/// across platforms and standard libraries (std::uniform_int_distribution is
/// not portable).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform value in [0, n); n must be positive.
  std::uint64_t next_below(std::uint64_t n);

  /// True with probability num/den.
  bool chance(std::uint64_t num, std::uint64_t den) { return next_below(den) < num; }

 private:
  std::mt19937_64 engine_;
};

/// Small Gaussian-rational scalar: numerators in [-4, 4], denominators in
/// [1, 3], imaginary part present about a quarter of the time.  Never zero.
GaussianRational random_coefficient(Rng& rng);

/// Sparse element of the arrow-space algebra (about `terms` point masses).
SteinbergElement random_steinberg(const FiniteGroupoid& g, Rng& rng, int terms = 4);

/// Random linear combination of `terms` basis elements drawn from the given
/// full-bisection list.
GroupRingElement random_group_ring(const FiniteGroupoid& g,
                                   const std::vector<FullBisection>& basis, Rng& rng,
                                   int terms = 3);

}  // namespace fullgroup
