#include "bhh/densities.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bhh {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kSqrt3 = std::numbers::sqrt3;
}  // namespace

double density_f(double r, double intensity) {
  if (r < 0.0) return 0.0;
  const double a = kPi * intensity;
  return 2.0 * a * r * std::exp(-a * r * r);
}

double density_g(double r, double intensity) {
  if (r < 0.0) return 0.0;
  const double a = kPi * intensity;
  return 2.0 * a * a * r * r * r * std::exp(-a * r * r);
}

double density_h(double r1, double r2, double r3, double intensity) {
  if (!(r1 > 0.0 && r1 < r2 && r2 < r3)) return 0.0;
  const double two_a = 2.0 * kPi * intensity;
  return std::exp(-kPi * intensity * r3 * r3) * two_a * two_a * two_a * r1 *
         r2 * r3;
}

double bhh_edge_integrand(double z1, double z2) {
  return std::sqrt(z1 * z1 + z2 * z2) * std::exp(-kSqrt3 * z1) *
         (1.0 - z2 / kSqrt3);
}

double triangle_excess(double r1, double r2, double r3) {
  return 2.0 * r3 - 3.0 * r1 - 3.0 * r2;
}

CdfTable::CdfTable(double r_max, std::vector<double> cdf)
    : r_max_(r_max), cell_(r_max / static_cast<double>(cdf.size() - 1)),
      cdf_(std::move(cdf)) {
  if (cdf_.size() < 2) {
    throw std::invalid_argument("CdfTable: need at least two grid values");
  }
}

double CdfTable::operator()(double r) const {
  if (r <= 0.0) return 0.0;
  if (r >= r_max_) return 1.0;
  const double t = r / cell_;
  const auto i = static_cast<std::size_t>(t);
  const double w = t - static_cast<double>(i);
  return cdf_[i] + w * (cdf_[i + 1] - cdf_[i]);
}

CdfTable knn_distance_cdf(int k, double intensity, std::size_t cells) {
  if (k < 1 || k > 3) {
    throw std::invalid_argument("knn_distance_cdf: k must be 1, 2 or 3");
  }
  if (!(intensity > 0.0)) {
    throw std::invalid_argument("knn_distance_cdf: intensity must be positive");
  }
  if (cells < 16) {
    throw std::invalid_argument("knn_distance_cdf: grid too coarse");
  }
  const double a = kPi * intensity;
  // Marginal density of the k-th distance; for k = 3 the (r1,r2) integral of
  // h over 0 < r1 < r2 < r3 equals r3^4/8, giving a^3 r^5 exp(-a r^2).
  const auto pdf = [&](double r) {
    switch (k) {
      case 1: return density_f(r, intensity);
      case 2: return density_g(r, intensity);
      default: return a * a * a * r * r * r * r * r * std::exp(-a * r * r);
    }
  };
  const double r_max = std::sqrt(36.0 / a);  // tail mass < 1.6e-13
  const double cell = r_max / static_cast<double>(cells);
  std::vector<double> cdf(cells + 1, 0.0);
  // Cumulative Simpson per cell; the integrand is smooth.
  for (std::size_t i = 0; i < cells; ++i) {
    const double lo = cell * static_cast<double>(i);
    const double hi = lo + cell;
    const double mid = 0.5 * (lo + hi);
    cdf[i + 1] = cdf[i] + (cell / 6.0) * (pdf(lo) + 4.0 * pdf(mid) + pdf(hi));
  }
  // Remove the tiny discretization drift so the table ends exactly at 1.
  const double scale = 1.0 / cdf[cells];
  for (auto& v : cdf) v *= scale;
  return CdfTable(r_max, std::move(cdf));
}

}  // namespace bhh
