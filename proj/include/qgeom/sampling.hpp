#pragma once

// Seeded generators for parametrized states and the randomized comparison
// of the trigonometric mixed-state concurrence against the spin-flip oracle.

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "qgeom/states.hpp"

namespace qgeom {

// Per-sample seed: splitmix64 finalizer applied to the master seed and the
// sample index. Sample i always sees the same stream, whatever the sharding.
std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t index);

// Uniform double in [0, 1) built from the top 53 bits of the engine output,
// so the sequence does not depend on the standard library's distributions.
double uniform01(std::mt19937_64& rng);

// theta uniform in [0, pi], phi uniform in [0, 2 pi).
PureStateParams random_pure_params(std::mt19937_64& rng, Sector sector);

// 1-6 terms, each sector with probability 1/2, Dirichlet(1, ..., 1)
// weights from normalized exponentials.
Ensemble random_ensemble(std::mt19937_64& rng);

struct RandomComparison {
  std::size_t samples;
  double max_abs_diff;
  double mean_abs_diff;
  std::size_t worst_index;
  Ensemble worst;
};

// Draws `samples` ensembles (sample i seeded by derive_seed(seed, i)) and
// compares mixed_concurrence with wootters_concurrence. The work is split
// across `shards` threads; the result is identical for every shard count.
RandomComparison compare_random_ensembles(std::size_t samples, std::uint64_t seed,
                                          unsigned shards = 1);

}  // namespace qgeom
