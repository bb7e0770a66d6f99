#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "bhh/geometry.hpp"
#include "bhh/rng.hpp"

using bhh::Point2;
using bhh::distance;
using bhh::path_length;

namespace {
constexpr double kSqrt3 = std::numbers::sqrt3;
}

TEST_CASE("distance basics") {
  CHECK(distance({0, 0}, {0, 0}) == 0.0);
  CHECK(distance({0, 0}, {3, 4}) == doctest::Approx(5.0).epsilon(1e-12));
  // strip-corner pair: sqrt(1/27 + 3)
  const double expected = std::sqrt(1.0 / 27.0 + 3.0);
  CHECK(distance({0, kSqrt3}, {kSqrt3 / 9.0, 0}) ==
        doctest::Approx(expected).epsilon(1e-12));
  CHECK(expected == doctest::Approx(1.742710).epsilon(1e-6));
}

TEST_CASE("distance symmetry and zero only at identity") {
  bhh::RngStream rng(7, 0);
  for (int i = 0; i < 1000; ++i) {
    const Point2 a{rng.uniform(-5, 5), rng.uniform(-5, 5)};
    const Point2 b{rng.uniform(-5, 5), rng.uniform(-5, 5)};
    CHECK(distance(a, b) == distance(b, a));
    if (!(a == b)) CHECK(distance(a, b) > 0.0);
  }
}

TEST_CASE("path_length examples") {
  CHECK(path_length(std::vector<Point2>{{0, 0}}) == 0.0);
  CHECK(path_length(std::vector<Point2>{{0, 0}, {1, 0}, {2, 0}, {3, 0}}) ==
        doctest::Approx(3.0).epsilon(1e-12));
  CHECK(path_length(std::vector<Point2>{{0, 0}, {0, 1}, {1, 1}, {1, 0}}) ==
        doctest::Approx(3.0).epsilon(1e-12));
  CHECK_THROWS_AS(path_length(std::vector<Point2>{}), std::invalid_argument);
}

TEST_CASE("path_length is additive at a shared endpoint") {
  const std::vector<Point2> a{{0, 0}, {1, 2}, {3, 1}};
  const std::vector<Point2> b{{3, 1}, {4, 4}, {0, 5}};
  std::vector<Point2> joined = a;
  joined.insert(joined.end(), b.begin() + 1, b.end());
  CHECK(path_length(joined) ==
        doctest::Approx(path_length(a) + path_length(b)).epsilon(1e-12));
}

TEST_CASE("triangle inequality on random triples") {
  bhh::RngStream rng(11, 0);
  for (int i = 0; i < 10000; ++i) {
    const Point2 a{rng.uniform(-1, 1), rng.uniform(-1, 1)};
    const Point2 b{rng.uniform(-1, 1), rng.uniform(-1, 1)};
    const Point2 c{rng.uniform(-1, 1), rng.uniform(-1, 1)};
    CHECK(distance(a, c) <= distance(a, b) + distance(b, c) + 1e-12);
  }
}

TEST_CASE("path_length invariant under reversal") {
  bhh::RngStream rng(13, 0);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Point2> path(1 + static_cast<std::size_t>(rng.next_u64() % 20));
    for (auto& p : path) p = {rng.uniform(0, 1), rng.uniform(0, 1)};
    std::vector<Point2> reversed(path.rbegin(), path.rend());
    CHECK(path_length(path) ==
          doctest::Approx(path_length(reversed)).epsilon(1e-12));
  }
}
