#pragma once

#include <cstdint>
#include <numbers>
#include <span>
#include <vector>

#include "bhh/geometry.hpp"
#include "bhh/sampling.hpp"

namespace bhh {

enum class Improvement { none, zigzag4, permute_k };

struct HeuristicConfig {
  Improvement improvement = Improvement::none;
  int k = 6;  // tuple size for permute_k
  // Strip height is factor/sqrt(intensity); sqrt(3) matches the strip law
  // the tuple statistics are computed under.
  double strip_height_factor = std::numbers::sqrt3;
};

struct HeuristicRun {
  OpenPath path;
  double length = 0.0;
  long tuples_examined = 0;
  long tuples_improved = 0;
  double total_gain = 0.0;  // sum of per-tuple gains
};

// Serpentine strip tour: points are bucketed into horizontal strips of
// height factor/sqrt(intensity), sorted by x inside each strip (ties by y),
// traversed left-to-right and right-to-left alternately, and concatenated.
//
// With an improvement configured, each strip's x-ordered points are split
// into disjoint consecutive k-tuples starting at the strip's first point (up
// to k-1 leftovers per strip stay untouched), and every tuple is rerouted
// when its local move strictly wins. Points exactly on a strip boundary go
// to the lower strip.
HeuristicRun build_path(const SquareSample& sample, const HeuristicConfig& config);

struct RatioRow {
  double intensity = 0.0;
  double mean_ratio = 0.0;   // mean of length/sqrt(intensity) over runs
  double stddev = 0.0;       // sample standard deviation over runs
};

// Convergence table of the normalized tour length. Runs are independent
// substreams of the master seed ((intensity index) * runs + run), so the
// table is reproducible under any thread count.
std::vector<RatioRow> asymptotic_ratio(std::span<const double> intensities,
                                       int runs_per_intensity,
                                       const HeuristicConfig& config,
                                       std::uint64_t seed);

}  // namespace bhh
