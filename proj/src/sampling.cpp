#include "bhh/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace bhh {

namespace {

constexpr double kSqrt3 = std::numbers::sqrt3;

// Shared by sample_strip and StripTupleSampler so the two paths consume the
// stream identically: y1 first, then (gap, y) per additional point. The
// stored gap is the realized abscissa difference, so points[i+1].x -
// points[i].x == gaps[i] holds exactly.
void fill_strip(RngStream& stream, std::span<Point2> points,
                std::span<double> gaps) {
  points[0] = Point2{0.0, stream.uniform(0.0, kSqrt3)};
  for (std::size_t i = 1; i < points.size(); ++i) {
    const double x = points[i - 1].x + stream.exponential(kSqrt3);
    gaps[i - 1] = x - points[i - 1].x;
    points[i] = Point2{x, stream.uniform(0.0, kSqrt3)};
  }
}

}  // namespace

StripSample sample_strip(std::size_t k, std::uint64_t seed) {
  if (k == 0) {
    throw std::invalid_argument("sample_strip: k must be >= 1");
  }
  StripSample sample;
  sample.seed = seed;
  sample.points.resize(k);
  sample.gaps.resize(k - 1);
  RngStream stream(seed, stream_id(StreamPurpose::strip_tuples, 0));
  fill_strip(stream, sample.points, sample.gaps);
  return sample;
}

SquareSample sample_square(double intensity, std::uint64_t seed,
                           std::uint64_t run_index) {
  if (!(intensity > 0.0)) {
    throw std::invalid_argument("sample_square: intensity must be positive");
  }
  RngStream stream(seed, stream_id(StreamPurpose::square, run_index));
  SquareSample sample;
  sample.intensity = intensity;
  sample.seed = seed;
  const auto count = static_cast<std::size_t>(stream.poisson(intensity));
  sample.points = sample_uniform_square(count, stream);
  return sample;
}

std::vector<Point2> sample_uniform_square(std::size_t count,
                                          RngStream& stream) {
  std::vector<Point2> points(count);
  for (auto& p : points) {
    p.x = stream.uniform01();
    p.y = stream.uniform01();
  }
  return points;
}

std::vector<std::array<double, 3>> sample_knn_triples(
    double intensity, std::uint64_t seed, std::size_t trials,
    std::uint64_t stream_index) {
  if (!(intensity > 0.0)) {
    throw std::invalid_argument("sample_knn_triples: intensity must be positive");
  }
  // exp(-36)*(1 + 36 + 36^2/2) ~ 1.6e-13: fewer than 3 points in the disc is
  // below the 1e-12 budget, so the window never truncates the third distance.
  const double disc_mean = 36.0;
  const double radius = std::sqrt(disc_mean / (std::numbers::pi * intensity));
  RngStream stream(seed, stream_id(StreamPurpose::knn, stream_index));
  std::vector<std::array<double, 3>> out;
  out.reserve(trials);
  std::vector<double> dist;
  while (out.size() < trials) {
    const auto count = static_cast<std::size_t>(stream.poisson(disc_mean));
    if (count < 3) continue;  // probability ~1.6e-13; redraw
    dist.clear();
    for (std::size_t i = 0; i < count; ++i) {
      double x, y;
      do {
        x = stream.uniform(-radius, radius);
        y = stream.uniform(-radius, radius);
      } while (x * x + y * y > radius * radius);
      dist.push_back(std::sqrt(x * x + y * y));
    }
    std::partial_sort(dist.begin(), dist.begin() + 3, dist.end());
    out.push_back({dist[0], dist[1], dist[2]});
  }
  return out;
}

std::vector<double> sample_knn_distances(double intensity, int k,
                                         std::uint64_t seed,
                                         std::size_t trials) {
  if (k < 1 || k > 3) {
    throw std::invalid_argument("sample_knn_distances: k must be 1, 2 or 3");
  }
  const auto triples = sample_knn_triples(intensity, seed, trials);
  std::vector<double> out(triples.size());
  for (std::size_t i = 0; i < triples.size(); ++i) {
    out[i] = triples[i][static_cast<std::size_t>(k - 1)];
  }
  return out;
}

StripTupleSampler::StripTupleSampler(std::size_t k, std::uint64_t seed,
                                     std::uint64_t batch_index)
    : k_(k), stream_(seed, stream_id(StreamPurpose::strip_tuples, batch_index)) {
  if (k == 0) {
    throw std::invalid_argument("StripTupleSampler: k must be >= 1");
  }
}

void StripTupleSampler::next(std::span<Point2> points, std::span<double> gaps) {
  if (points.size() != k_ || gaps.size() + 1 != k_) {
    throw std::invalid_argument("StripTupleSampler::next: wrong span sizes");
  }
  fill_strip(stream_, points, gaps);
}

void write_points_csv(std::ostream& out, std::span<const Point2> points) {
  out << "x,y\n";
  out.precision(17);
  for (const auto& p : points) {
    out << p.x << ',' << p.y << '\n';
  }
}

std::vector<Point2> read_points_csv(std::istream& in) {
  std::vector<Point2> points;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.rfind("x,", 0) == 0 || line.rfind("x;", 0) == 0) continue;
    std::istringstream row(line);
    Point2 p;
    char comma = 0;
    if (!(row >> p.x >> comma >> p.y) || comma != ',') {
      throw std::invalid_argument("read_points_csv: malformed row '" + line + "'");
    }
    points.push_back(p);
  }
  return points;
}

}  // namespace bhh
