#include "qgeom/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <optional>
#include <thread>

#include "qgeom/entanglement.hpp"
#include "qgeom/errors.hpp"

namespace qgeom {

namespace {

constexpr double kTwoToMinus53 = 0x1.0p-53;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t index) {
  return splitmix64(splitmix64(master_seed) ^ index);
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * kTwoToMinus53;
}

PureStateParams random_pure_params(std::mt19937_64& rng, Sector sector) {
  // Closed interval for theta: scale by 2^53 - 1 so pi itself is reachable.
  const double theta = std::numbers::pi * static_cast<double>(rng() >> 11) / (0x1.0p53 - 1.0);
  const double phi = 2.0 * std::numbers::pi * uniform01(rng);
  return PureStateParams(sector, theta, phi);
}

Ensemble random_ensemble(std::mt19937_64& rng) {
  const std::size_t count = 1 + static_cast<std::size_t>(uniform01(rng) * 6.0);
  std::vector<double> raw(count);
  std::vector<PureStateParams> params;
  params.reserve(count);
  double total = 0.0;
  for (std::size_t k = 0; k < count; ++k) {
    const Sector sector = (rng() >> 63) == 0 ? Sector::S0 : Sector::S1;
    params.push_back(random_pure_params(rng, sector));
    // Open interval (0, 1) keeps every weight strictly positive.
    const double u = (static_cast<double>(rng() >> 11) + 0.5) * kTwoToMinus53;
    raw[k] = -std::log(u);
    total += raw[k];
  }
  std::vector<EnsembleTerm> terms;
  terms.reserve(count);
  for (std::size_t k = 0; k < count; ++k) terms.push_back({raw[k] / total, params[k]});
  return Ensemble(std::move(terms));
}

RandomComparison compare_random_ensembles(std::size_t samples, std::uint64_t seed,
                                          unsigned shards) {
  if (samples == 0) throw DomainError("compare_random_ensembles: samples must be positive");
  shards = std::clamp<unsigned>(shards, 1, static_cast<unsigned>(std::min<std::size_t>(samples, 256)));

  std::vector<double> diffs(samples);
  std::vector<std::exception_ptr> failures(shards);
  const auto work = [&](unsigned shard) {
    try {
      for (std::size_t i = shard; i < samples; i += shards) {
        std::mt19937_64 rng(derive_seed(seed, i));
        const DensityMatrix rho = ensemble_density(random_ensemble(rng));
        diffs[i] = std::abs(mixed_concurrence(rho) - wootters_concurrence(rho));
      }
    } catch (...) {
      failures[shard] = std::current_exception();
    }
  };

  if (shards == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(shards);
    for (unsigned s = 0; s < shards; ++s) pool.emplace_back(work, s);
  }
  for (const auto& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }

  // Sequential reduction in index order keeps the sums schedule-independent.
  double sum = 0.0;
  std::size_t worst = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    sum += diffs[i];
    if (diffs[i] > diffs[worst]) worst = i;
  }
  std::mt19937_64 rng(derive_seed(seed, worst));
  return {samples, diffs[worst], sum / static_cast<double>(samples), worst, random_ensemble(rng)};
}

}  // namespace qgeom
