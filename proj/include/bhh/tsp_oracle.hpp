#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "bhh/geometry.hpp"

namespace bhh {

// 2^n * n^2 work; beyond this the solver refuses rather than crawl.
inline constexpr int max_oracle_points = 14;

enum class EndpointMode { free_endpoints, fixed_endpoints };

struct OracleResult {
  double length = 0.0;
  std::vector<int> order;  // permutation of the input indices
  EndpointMode mode = EndpointMode::free_endpoints;
};

// Globally optimal open path through 2..14 points by dynamic programming
// over subsets. In fixed mode the path starts at endpoints->first and ends at
// endpoints->second. Ties between exactly equal optima are broken
// deterministically (free paths are additionally canonicalized so the
// lexicographically smaller orientation is returned).
//
// Throws std::invalid_argument for n < 2 or bad endpoints and
// std::length_error for n > 14.
OracleResult solve_exact(std::span<const Point2> points,
                         EndpointMode mode = EndpointMode::free_endpoints,
                         std::optional<std::pair<int, int>> endpoints = std::nullopt);

}  // namespace bhh
