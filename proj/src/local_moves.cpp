#include "bhh/local_moves.hpp"

#include <algorithm>
#include <array>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace bhh {

namespace {

constexpr double kSqrt3 = std::numbers::sqrt3;

void require_sorted_by_x(std::span<const Point2> p) {
  for (std::size_t i = 1; i < p.size(); ++i) {
    if (p[i].x < p[i - 1].x) {
      throw std::invalid_argument("tuple points must be sorted by x");
    }
  }
}

// Best interior order with endpoints fixed; writes the winner into `order`
// (identity on no strict improvement) and returns original minus best length.
double best_permutation_core(std::span<const Point2> p,
                             std::array<int, 8>* order) {
  const std::size_t k = p.size();
  if (k < 3) {
    throw std::invalid_argument("best_permutation_eval: need at least 3 points");
  }
  if (k > max_permutation_points) {
    throw std::invalid_argument("best_permutation_eval: more than 8 points");
  }
  require_sorted_by_x(p);

  double d[8][8];
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      d[i][j] = d[j][i] = distance(p[i], p[j]);
    }
  }

  std::array<int, 6> interior{};
  const std::size_t m = k - 2;
  std::iota(interior.begin(), interior.begin() + m, 1);

  double original = 0.0;
  for (std::size_t i = 1; i < k; ++i) original += d[i - 1][i];

  double best = original;
  std::array<int, 6> best_interior = interior;
  // next_permutation enumerates in lexicographic order starting from the
  // identity, so keeping strict improvements only already breaks ties toward
  // the smallest order.
  while (std::next_permutation(interior.begin(), interior.begin() + m)) {
    double len = d[0][interior[0]];
    for (std::size_t i = 1; i < m; ++i) len += d[interior[i - 1]][interior[i]];
    len += d[interior[m - 1]][k - 1];
    if (len < best) {
      best = len;
      best_interior = interior;
    }
  }

  if (order != nullptr) {
    (*order)[0] = 0;
    for (std::size_t i = 0; i < m; ++i) (*order)[i + 1] = best_interior[i];
    (*order)[k - 1] = static_cast<int>(k) - 1;
  }
  return original - best;
}

}  // namespace

double zigzag_signed_gain(std::span<const Point2> p) {
  if (p.size() != 4) {
    throw std::invalid_argument("zigzag_eval: need exactly 4 points");
  }
  require_sorted_by_x(p);
  const double kept = distance(p[0], p[1]) + distance(p[2], p[3]);
  const double rerouted = distance(p[0], p[2]) + distance(p[1], p[3]);
  return kept - rerouted;
}

TupleGain zigzag_eval(std::span<const Point2> p) {
  const double x = zigzag_signed_gain(p);
  TupleGain g;
  g.signed_gain = x;
  g.improved = x > 0.0;
  g.gain = g.improved ? x : 0.0;
  g.best_order = g.improved ? std::vector<int>{0, 2, 1, 3}
                            : std::vector<int>{0, 1, 2, 3};
  return g;
}

bool event_b_check(std::span<const Point2> points,
                   std::span<const double> gaps) {
  if (points.size() != 4 || gaps.size() != 3) {
    throw std::invalid_argument("event_b_check: need 4 points and 3 gaps");
  }
  constexpr double ninth = kSqrt3 / 9.0;
  constexpr double upper = 8.0 * kSqrt3 / 9.0;
  return gaps[0] <= ninth && gaps[1] <= ninth && gaps[2] <= ninth &&
         std::min(points[0].y, points[2].y) >= upper &&
         std::max(points[1].y, points[3].y) <= ninth;
}

TupleGain best_permutation_eval(std::span<const Point2> p) {
  std::array<int, 8> order{};
  const double x = best_permutation_core(p, &order);
  TupleGain g;
  g.signed_gain = x;
  g.improved = x > 0.0;
  g.gain = g.improved ? x : 0.0;
  g.best_order.assign(order.begin(), order.begin() + p.size());
  return g;
}

double best_permutation_signed_gain(std::span<const Point2> p) {
  return best_permutation_core(p, nullptr);
}

}  // namespace bhh
