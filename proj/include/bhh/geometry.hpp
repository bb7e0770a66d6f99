#pragma once

#include <cmath>
#include <span>
#include <vector>

namespace bhh {

// A point in the plane, in rescaled intensity-1 coordinates. Coordinates are
// expected to be finite.
struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

inline bool operator==(Point2 a, Point2 b) { return a.x == b.x && a.y == b.y; }

inline double distance(Point2 a, Point2 b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return std::sqrt(dx * dx + dy * dy);
}

// An open path is a sequence of points visited in order.
using OpenPath = std::vector<Point2>;

// Sum of consecutive distances; 0 for a single point. Throws
// std::invalid_argument on an empty path.
double path_length(std::span<const Point2> path);

}  // namespace bhh
