#include "bhh/geometry.hpp"

#include <stdexcept>

namespace bhh {

double path_length(std::span<const Point2> path) {
  if (path.empty()) {
    throw std::invalid_argument("path_length: empty path");
  }
  double total = 0.0;
  for (std::size_t i = 1; i < path.size(); ++i) {
    total += distance(path[i - 1], path[i]);
  }
  return total;
}

}  // namespace bhh
