// Verification helpers shared by the unit and acceptance suites. Everything
// here is deliberately independent of the library's own numeric paths.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "bhh/geometry.hpp"

namespace testsupport {

// Two-sided Kolmogorov-Smirnov statistic of samples against a CDF.
inline double ks_statistic(std::vector<double> samples,
                           const std::function<double(double)>& cdf) {
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    d = std::max(d, f - static_cast<double>(i) / n);
    d = std::max(d, static_cast<double>(i + 1) / n - f);
  }
  return d;
}

// Pearson chi-square statistic over given bin counts/expectations.
inline double chi_square_statistic(std::span<const double> observed,
                                   std::span<const double> expected) {
  double chi2 = 0.0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    const double diff = observed[i] - expected[i];
    chi2 += diff * diff / expected[i];
  }
  return chi2;
}

// Upper quantile of the chi-square distribution via the Wilson-Hilferty cube
// approximation; good to a few percent, plenty for test thresholds.
inline double chi_square_quantile(double dof, double z_upper) {
  const double t = 1.0 - 2.0 / (9.0 * dof) + z_upper * std::sqrt(2.0 / (9.0 * dof));
  return dof * t * t * t;
}

// Exact rational arithmetic on int64 (small targets only).
struct Rational {
  long long num = 0;
  long long den = 1;

  constexpr Rational(long long n, long long d) : num(n), den(d) { reduce(); }

  constexpr void reduce() {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  constexpr Rational operator*(Rational o) const {
    return {num * o.num, den * o.den};
  }
  constexpr Rational operator+(Rational o) const {
    return {num * o.den + o.num * den, den * o.den};
  }
  constexpr bool operator==(Rational o) const {
    return num == o.num && den == o.den;
  }
  double value() const {
    return static_cast<double>(num) / static_cast<double>(den);
  }
};

// Brute-force shortest open path by full permutation enumeration; the
// independent reference for the subset-DP solver. Lexicographically first
// optimum, endpoints optionally pinned.
inline std::pair<double, std::vector<int>> brute_force_path(
    std::span<const bhh::Point2> points, int fixed_start = -1,
    int fixed_end = -1) {
  const int n = static_cast<int>(points.size());
  if (n < 2 || n > 10) {
    throw std::invalid_argument("brute_force_path: supports 2..10 points");
  }
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  double best = std::numeric_limits<double>::infinity();
  std::vector<int> best_order;
  do {
    if (fixed_start >= 0 && idx.front() != fixed_start) continue;
    if (fixed_end >= 0 && idx.back() != fixed_end) continue;
    double len = 0.0;
    for (int i = 1; i < n; ++i) {
      len += bhh::distance(points[idx[i - 1]], points[idx[i]]);
    }
    if (len < best) {
      best = len;
      best_order = idx;
    }
  } while (std::next_permutation(idx.begin(), idx.end()));
  return {best, best_order};
}

}  // namespace testsupport
