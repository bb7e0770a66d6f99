#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "bhh/geometry.hpp"
#include "bhh/rng.hpp"

namespace bhh {

// Ordered window of the intensity-1 Poisson process in the infinite strip of
// height sqrt(3). The first point is pinned at x = 0 (translation symmetry of
// the strip); subsequent abscissae grow by i.i.d. Exponential(sqrt(3)) gaps,
// and ordinates are i.i.d. uniform on [0, sqrt(3)].
struct StripSample {
  std::vector<Point2> points;  // sorted by x (strictly increasing a.s.)
  std::vector<double> gaps;    // gaps[i] = points[i+1].x - points[i].x
  std::uint64_t seed = 0;
};

// Poisson process on the unit square: N ~ Poisson(intensity) points, i.i.d.
// uniform on [0,1]^2.
struct SquareSample {
  std::vector<Point2> points;
  double intensity = 0.0;
  std::uint64_t seed = 0;
};

// k-point strip window; k >= 1. Deterministic in (k, seed).
StripSample sample_strip(std::size_t k, std::uint64_t seed);

// Unit-square Poisson sample. run_index selects a substream so that
// independent runs under one master seed stay reproducible regardless of
// scheduling.
SquareSample sample_square(double intensity, std::uint64_t seed,
                           std::uint64_t run_index = 0);

// Fixed-count variant: exactly `count` i.i.d. uniform points on [0,1]^2
// drawn from the given stream (the binomial counterpart of sample_square).
std::vector<Point2> sample_uniform_square(std::size_t count, RngStream& stream);

// Distances from the origin to its 1st/2nd/3rd nearest neighbour in a
// Poisson process of the given intensity, one triple per trial.
//
// Each trial throws points into the disc of radius 6/sqrt(pi*intensity)
// around the origin (rejection from the bounding square), so the expected
// count in the disc is 36 and the third neighbour escapes the disc with
// probability below 1e-12; such trials are redrawn.
std::vector<std::array<double, 3>> sample_knn_triples(double intensity,
                                                      std::uint64_t seed,
                                                      std::size_t trials,
                                                      std::uint64_t stream_index = 0);

// k-th nearest distance (k in {1,2,3}), one value per trial.
std::vector<double> sample_knn_distances(double intensity, int k,
                                         std::uint64_t seed,
                                         std::size_t trials);

// Streaming strip-tuple source for batched estimation: batch_index selects
// the substream, tuples within a batch are consecutive. Point and gap laws
// match sample_strip exactly.
class StripTupleSampler {
 public:
  StripTupleSampler(std::size_t k, std::uint64_t seed,
                    std::uint64_t batch_index);

  // Fills points[0..k) and gaps[0..k-1).
  void next(std::span<Point2> points, std::span<double> gaps);

  std::size_t tuple_size() const { return k_; }

 private:
  std::size_t k_;
  RngStream stream_;
};

// Writes "x,y" rows with a header line.
void write_points_csv(std::ostream& out, std::span<const Point2> points);

// Reads the format written by write_points_csv (header optional).
std::vector<Point2> read_points_csv(std::istream& in);

}  // namespace bhh
