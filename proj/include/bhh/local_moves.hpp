#pragma once

#include <span>
#include <vector>

#include "bhh/geometry.hpp"

namespace bhh {

// Exhaustive interior search is capped here; (k-2)! grows past usefulness.
inline constexpr std::size_t max_permutation_points = 8;

// Outcome of a local-improvement evaluation on a k-tuple.
//
// signed_gain is the raw length difference (original minus rerouted);
// improved requires a strictly positive difference (equality is a null event
// and counting it would record no-op swaps). best_order keeps the first and
// last tuple positions fixed.
struct TupleGain {
  bool improved = false;
  double gain = 0.0;
  double signed_gain = 0.0;
  std::vector<int> best_order;
};

// Zigzag test on 4 points ordered by x. The reroute (p1,p3,p2,p4) shares the
// middle edge with the original path, so the difference reduces to
// (|p1 p2| + |p3 p4|) - (|p1 p3| + |p2 p4|). Throws std::invalid_argument if
// the points are not sorted by x or the span is not 4 long.
TupleGain zigzag_eval(std::span<const Point2> p);

// Gain-only variant used in sampling loops (no best_order allocation).
double zigzag_signed_gain(std::span<const Point2> p);

// Structured sufficient condition for a zigzag: all three x-gaps at most
// sqrt(3)/9, the outer ordinates y1,y3 in the top ninth and the inner
// ordinates y2,y4 in the bottom ninth of the strip. Guarantees a gain of at
// least 3/4.
bool event_b_check(std::span<const Point2> points, std::span<const double> gaps);

// Best path through k points (3 <= k <= 8) with endpoints fixed, by
// exhaustive search over the (k-2)! interior orders. signed_gain >= 0 since
// the original order competes; ties resolve to the lexicographically
// smallest order.
TupleGain best_permutation_eval(std::span<const Point2> p);

double best_permutation_signed_gain(std::span<const Point2> p);

}  // namespace bhh
