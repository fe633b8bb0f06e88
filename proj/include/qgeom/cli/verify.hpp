#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace qgeom::cli {

struct VerifyOptions {
  std::size_t theta_steps = 50;
  std::size_t phi_steps = 50;
  std::size_t samples = 10000;
  std::uint64_t seed = 42;
  // Threshold for the randomized mixed-state comparison.
  double tolerance = 1e-9;
  unsigned shards = 1;
};

struct PropertyCheck {
  std::string name;
  bool pass;
  double max_residual;
  double threshold;
  std::string detail;
};

// theta_k = pi k / (steps - 1), both endpoints included.
std::vector<double> theta_grid(std::size_t steps);
// phi_k = 2 pi k / steps over the periodic interval [0, 2 pi).
std::vector<double> phi_grid(std::size_t steps);

// Runs every named operator identity, closed form, and oracle comparison.
std::vector<PropertyCheck> run_verification(const VerifyOptions& options);

}  // namespace qgeom::cli
