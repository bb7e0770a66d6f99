#include "bhh/estimators.hpp"

#include <algorithm>
#include <cmath>

#include "bhh/local_moves.hpp"

namespace bhh {

std::string to_string(Statistic stat) {
  switch (stat) {
    case Statistic::p_a: return "P_A";
    case Statistic::e_x_given_a: return "E_X_given_A";
    case Statistic::product_xa: return "product_XA";
    case Statistic::p_b: return "P_B";
    case Statistic::p_c: return "P_C";
    case Statistic::e_z_given_c: return "E_Z_given_C";
    case Statistic::product_zc: return "product_ZC";
  }
  throw std::invalid_argument("unknown statistic");
}

Statistic statistic_from_string(const std::string& name) {
  for (const Statistic s :
       {Statistic::p_a, Statistic::e_x_given_a, Statistic::product_xa,
        Statistic::p_b, Statistic::p_c, Statistic::e_z_given_c,
        Statistic::product_zc}) {
    if (to_string(s) == name) return s;
  }
  throw std::invalid_argument("unknown statistic '" + name + "'");
}

std::size_t statistic_tuple_size(Statistic stat) {
  switch (stat) {
    case Statistic::p_a:
    case Statistic::e_x_given_a:
    case Statistic::product_xa:
    case Statistic::p_b:
      return 4;
    case Statistic::p_c:
    case Statistic::e_z_given_c:
    case Statistic::product_zc:
      return 6;
  }
  throw std::invalid_argument("unknown statistic");
}

Estimate estimate_event(Statistic stat, int batches, long samples_per_batch,
                        std::uint64_t seed) {
  using Tuple = std::span<const Point2>;
  using Gaps = std::span<const double>;
  switch (stat) {
    case Statistic::p_a:
      return estimate_custom(
          4,
          [](Tuple p, Gaps) {
            return std::pair(true, zigzag_signed_gain(p) > 0.0 ? 1.0 : 0.0);
          },
          batches, samples_per_batch, seed);
    case Statistic::e_x_given_a:
      return estimate_custom(
          4,
          [](Tuple p, Gaps) {
            const double x = zigzag_signed_gain(p);
            return std::pair(x > 0.0, x);
          },
          batches, samples_per_batch, seed);
    case Statistic::product_xa:
      return estimate_custom(
          4,
          [](Tuple p, Gaps) {
            return std::pair(true, std::max(zigzag_signed_gain(p), 0.0));
          },
          batches, samples_per_batch, seed);
    case Statistic::p_b:
      return estimate_custom(
          4,
          [](Tuple p, Gaps g) {
            return std::pair(true, event_b_check(p, g) ? 1.0 : 0.0);
          },
          batches, samples_per_batch, seed);
    case Statistic::p_c:
      return estimate_custom(
          6,
          [](Tuple p, Gaps) {
            return std::pair(true,
                             best_permutation_signed_gain(p) > 0.0 ? 1.0 : 0.0);
          },
          batches, samples_per_batch, seed);
    case Statistic::e_z_given_c:
      return estimate_custom(
          6,
          [](Tuple p, Gaps) {
            const double z = best_permutation_signed_gain(p);
            return std::pair(z > 0.0, z);
          },
          batches, samples_per_batch, seed);
    case Statistic::product_zc:
      return estimate_custom(
          6,
          [](Tuple p, Gaps) {
            // Z >= 0 by construction, so clamping is implicit.
            return std::pair(true, best_permutation_signed_gain(p));
          },
          batches, samples_per_batch, seed);
  }
  throw std::invalid_argument("unknown statistic");
}

}  // namespace bhh
