#include "bhh/strip_heuristic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bhh/local_moves.hpp"
#include "bhh/parallel.hpp"

namespace bhh {

namespace {

std::size_t strip_index(double y, double height, std::size_t strips) {
  double idx = std::floor(y / height);
  // Exact boundary hits belong to the strip below.
  if (idx > 0.0 && y == idx * height) idx -= 1.0;
  if (idx < 0.0) idx = 0.0;
  const auto i = static_cast<std::size_t>(idx);
  return i < strips ? i : strips - 1;
}

void improve_strip(std::vector<Point2>& strip, const HeuristicConfig& config,
                   HeuristicRun& run) {
  const std::size_t k =
      config.improvement == Improvement::zigzag4
          ? 4
          : static_cast<std::size_t>(config.k);
  if (strip.size() < k) return;
  std::vector<Point2> scratch(k);
  for (std::size_t t = 0; t + k <= strip.size(); t += k) {
    const std::span<const Point2> tuple(strip.data() + t, k);
    ++run.tuples_examined;
    const TupleGain gain = config.improvement == Improvement::zigzag4
                               ? zigzag_eval(tuple)
                               : best_permutation_eval(tuple);
    if (!gain.improved) continue;
    ++run.tuples_improved;
    run.total_gain += gain.gain;
    for (std::size_t i = 0; i < k; ++i) {
      scratch[i] = tuple[static_cast<std::size_t>(gain.best_order[i])];
    }
    std::copy(scratch.begin(), scratch.end(), strip.begin() + t);
  }
}

}  // namespace

HeuristicRun build_path(const SquareSample& sample,
                        const HeuristicConfig& config) {
  if (sample.points.empty()) {
    throw std::invalid_argument("build_path: empty sample");
  }
  if (!(config.strip_height_factor > 0.0)) {
    throw std::invalid_argument("build_path: strip height factor must be positive");
  }
  if (config.improvement == Improvement::permute_k &&
      (config.k < 3 || config.k > static_cast<int>(max_permutation_points))) {
    throw std::invalid_argument("build_path: permute_k requires k in [3,8]");
  }

  const double sqrt_n = std::sqrt(sample.intensity);
  const double height = config.strip_height_factor / sqrt_n;
  const auto strips = static_cast<std::size_t>(
      std::max(1.0, std::ceil(sqrt_n / config.strip_height_factor)));

  std::vector<std::vector<Point2>> buckets(strips);
  for (const auto& p : sample.points) {
    buckets[strip_index(p.y, height, strips)].push_back(p);
  }

  HeuristicRun run;
  for (auto& bucket : buckets) {
    std::sort(bucket.begin(), bucket.end(), [](Point2 a, Point2 b) {
      return a.x != b.x ? a.x < b.x : a.y < b.y;
    });
    if (config.improvement != Improvement::none) {
      improve_strip(bucket, config, run);
    }
  }

  run.path.reserve(sample.points.size());
  for (std::size_t s = 0; s < strips; ++s) {
    if (s % 2 == 0) {
      run.path.insert(run.path.end(), buckets[s].begin(), buckets[s].end());
    } else {
      run.path.insert(run.path.end(), buckets[s].rbegin(), buckets[s].rend());
    }
  }
  run.length = path_length(run.path);
  return run;
}

std::vector<RatioRow> asymptotic_ratio(std::span<const double> intensities,
                                       int runs_per_intensity,
                                       const HeuristicConfig& config,
                                       std::uint64_t seed) {
  if (runs_per_intensity < 1) {
    throw std::invalid_argument("asymptotic_ratio: need at least 1 run");
  }
  for (const double n : intensities) {
    if (!(n >= 100.0)) {
      throw std::invalid_argument("asymptotic_ratio: intensities must be >= 100");
    }
  }

  const std::size_t runs = static_cast<std::size_t>(runs_per_intensity);
  std::vector<double> ratios(intensities.size() * runs);
  parallel_for(ratios.size(), [&](std::size_t idx) {
    const double intensity = intensities[idx / runs];
    const SquareSample sample = sample_square(intensity, seed, idx);
    const HeuristicRun run = build_path(sample, config);
    ratios[idx] = run.length / std::sqrt(intensity);
  });

  std::vector<RatioRow> table(intensities.size());
  for (std::size_t i = 0; i < intensities.size(); ++i) {
    RatioRow& row = table[i];
    row.intensity = intensities[i];
    double mean = 0.0;
    for (std::size_t r = 0; r < runs; ++r) mean += ratios[i * runs + r];
    mean /= static_cast<double>(runs);
    double ss = 0.0;
    for (std::size_t r = 0; r < runs; ++r) {
      const double d = ratios[i * runs + r] - mean;
      ss += d * d;
    }
    row.mean_ratio = mean;
    row.stddev = runs > 1 ? std::sqrt(ss / static_cast<double>(runs - 1)) : 0.0;
  }
  return table;
}

}  // namespace bhh
