#include "bhh/tsp_oracle.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace bhh {

OracleResult solve_exact(std::span<const Point2> points, EndpointMode mode,
                         std::optional<std::pair<int, int>> endpoints) {
  const int n = static_cast<int>(points.size());
  if (n < 2) {
    throw std::invalid_argument("solve_exact: need at least 2 points");
  }
  if (n > max_oracle_points) {
    throw std::length_error("solve_exact: more than 14 points");
  }
  int start = -1;  // reconstruction origin (path front)
  int root = -1;   // DP root (path back)
  if (mode == EndpointMode::fixed_endpoints) {
    if (!endpoints) {
      throw std::invalid_argument("solve_exact: fixed mode needs endpoints");
    }
    start = endpoints->first;
    root = endpoints->second;
    if (start < 0 || start >= n || root < 0 || root >= n || start == root) {
      throw std::invalid_argument("solve_exact: bad endpoint indices");
    }
  } else if (endpoints) {
    throw std::invalid_argument("solve_exact: endpoints given in free mode");
  }

  std::vector<double> d(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      d[static_cast<std::size_t>(i) * n + j] = distance(points[i], points[j]);
    }
  }

  constexpr double inf = std::numeric_limits<double>::infinity();
  const std::size_t full = std::size_t{1} << n;
  // dp[mask][j]: shortest path covering exactly `mask`, ending at j (and by
  // metric symmetry, equally the shortest path starting at j).
  std::vector<double> dp(full * n, inf);
  if (mode == EndpointMode::fixed_endpoints) {
    dp[(std::size_t{1} << root) * n + root] = 0.0;
  } else {
    for (int j = 0; j < n; ++j) dp[(std::size_t{1} << j) * n + j] = 0.0;
  }

  for (std::size_t mask = 1; mask < full; ++mask) {
    for (int j = 0; j < n; ++j) {
      if (!(mask & (std::size_t{1} << j))) continue;
      const double base = dp[mask * n + j];
      if (base == inf) continue;
      for (int u = 0; u < n; ++u) {
        if (mask & (std::size_t{1} << u)) continue;
        const std::size_t next = mask | (std::size_t{1} << u);
        const double cand = base + d[static_cast<std::size_t>(j) * n + u];
        if (cand < dp[next * n + u]) dp[next * n + u] = cand;
      }
    }
  }

  const std::size_t all = full - 1;
  double best = inf;
  if (mode == EndpointMode::fixed_endpoints) {
    best = dp[all * n + start];
  } else {
    for (int j = 0; j < n; ++j) {
      if (dp[all * n + j] < best) {
        best = dp[all * n + j];
        start = j;
      }
    }
  }

  // Walk predecessors from the front; the DP recurrence guarantees at least
  // one successor with an exactly matching partial sum at every step.
  OracleResult result;
  result.mode = mode;
  result.length = best;
  result.order.reserve(n);
  result.order.push_back(start);
  std::size_t mask = all;
  int cur = start;
  while (result.order.size() < static_cast<std::size_t>(n)) {
    const std::size_t rest = mask ^ (std::size_t{1} << cur);
    int chosen = -1;
    for (int u = 0; u < n; ++u) {
      if (!(rest & (std::size_t{1} << u))) continue;
      if (dp[mask * n + cur] ==
          dp[rest * n + u] + d[static_cast<std::size_t>(cur) * n + u]) {
        chosen = u;
        break;
      }
    }
    if (chosen < 0) {
      throw std::logic_error("solve_exact: reconstruction failed");
    }
    result.order.push_back(chosen);
    mask = rest;
    cur = chosen;
  }

  if (mode == EndpointMode::free_endpoints) {
    std::vector<int> reversed(result.order.rbegin(), result.order.rend());
    if (reversed < result.order) result.order = std::move(reversed);
  }
  return result;
}

}  // namespace bhh
