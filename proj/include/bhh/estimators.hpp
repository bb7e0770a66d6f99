#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "bhh/geometry.hpp"
#include "bhh/parallel.hpp"
#include "bhh/sampling.hpp"

namespace bhh {

// Batch-means Monte-Carlo result. mean averages the per-batch means and
// batch_stddev is their sample standard deviation; conditioning_rate is the
// fraction of samples where the conditioning event held (1 when the
// statistic is unconditional). batches counts contributing batches: batches
// of a conditional statistic that saw no event are excluded.
struct Estimate {
  double mean = 0.0;
  double batch_stddev = 0.0;
  int batches = 0;
  long samples_per_batch = 0;
  std::uint64_t seed = 0;
  double conditioning_rate = 0.0;
};

// The tuple statistics the bounds pipeline needs. P_* are event
// probabilities, E_*_given_* conditional gains, product_* the unconditional
// clamped gains E[max(gain,0)] that feed the empirical upper bounds.
enum class Statistic {
  p_a,
  e_x_given_a,
  product_xa,
  p_b,
  p_c,
  e_z_given_c,
  product_zc,
};

std::string to_string(Statistic stat);
Statistic statistic_from_string(const std::string& name);

// Tuple size consumed by a statistic (4 for the zigzag family, 6 for the
// permutation family).
std::size_t statistic_tuple_size(Statistic stat);

namespace detail {

// Core batching engine. One substream per batch (StreamPurpose::strip_tuples,
// batch index), batches may run on any number of threads, and the combining
// pass walks batches in index order, so results are bit-identical for a
// fixed (seed, batches, samples_per_batch, statistic).
//
// Stat maps a tuple (points, gaps) to {in_event, value}; value contributes
// only when in_event is true. Unconditional statistics return in_event=true
// for every sample, which makes the batch mean sum/samples.
template <class Stat>
Estimate run_strip_batches(std::size_t tuple_size, Stat&& statistic,
                           int batches, long samples_per_batch,
                           std::uint64_t seed) {
  if (batches < 2) {
    throw std::invalid_argument("estimate: need at least 2 batches");
  }
  if (samples_per_batch < 1) {
    throw std::invalid_argument("estimate: need at least 1 sample per batch");
  }
  if (tuple_size < 2 || tuple_size > 8) {
    throw std::invalid_argument("estimate: tuple size must be in [2,8]");
  }

  struct BatchResult {
    double mean = 0.0;
    long events = 0;
  };
  std::vector<BatchResult> results(static_cast<std::size_t>(batches));

  parallel_for(static_cast<std::size_t>(batches), [&](std::size_t b) {
    StripTupleSampler sampler(tuple_size, seed, b);
    std::array<Point2, 8> pts;
    std::array<double, 7> gaps;
    const std::span<Point2> pts_span(pts.data(), tuple_size);
    const std::span<double> gaps_span(gaps.data(), tuple_size - 1);
    double sum = 0.0;
    long events = 0;
    for (long i = 0; i < samples_per_batch; ++i) {
      sampler.next(pts_span, gaps_span);
      const auto [in_event, value] = statistic(
          std::span<const Point2>(pts_span), std::span<const double>(gaps_span));
      if (in_event) {
        sum += value;
        ++events;
      }
    }
    results[b].events = events;
    results[b].mean = events > 0 ? sum / static_cast<double>(events) : 0.0;
  });

  std::vector<double> means;
  means.reserve(results.size());
  long total_events = 0;
  for (const auto& r : results) {
    total_events += r.events;
    if (r.events > 0) means.push_back(r.mean);
  }
  if (means.empty()) {
    throw std::runtime_error("estimate: no batch saw the conditioning event");
  }

  double mean = 0.0;
  for (const double m : means) mean += m;
  mean /= static_cast<double>(means.size());
  double ss = 0.0;
  for (const double m : means) ss += (m - mean) * (m - mean);
  const double stddev =
      means.size() > 1 ? std::sqrt(ss / static_cast<double>(means.size() - 1))
                       : 0.0;

  Estimate estimate;
  estimate.mean = mean;
  estimate.batch_stddev = stddev;
  estimate.batches = static_cast<int>(means.size());
  estimate.samples_per_batch = samples_per_batch;
  estimate.seed = seed;
  estimate.conditioning_rate =
      static_cast<double>(total_events) /
      (static_cast<double>(batches) * static_cast<double>(samples_per_batch));
  return estimate;
}

}  // namespace detail

// Batched estimate of one of the named tuple statistics under the strip
// tuple law (first point pinned at x = 0, exponential gaps, uniform
// ordinates). Statistics with the same seed see identical tuple streams.
Estimate estimate_event(Statistic stat, int batches, long samples_per_batch,
                        std::uint64_t seed);

// Same engine for a caller-supplied statistic over k-point strip tuples.
template <class Stat>
Estimate estimate_custom(std::size_t tuple_size, Stat&& statistic, int batches,
                         long samples_per_batch, std::uint64_t seed) {
  return detail::run_strip_batches(tuple_size, std::forward<Stat>(statistic),
                                   batches, samples_per_batch, seed);
}

}  // namespace bhh
