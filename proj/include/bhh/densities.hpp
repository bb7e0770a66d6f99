#pragma once

#include <cstddef>
#include <vector>

namespace bhh {

// Closed-form neighbour-distance densities for a planar Poisson process of
// the given intensity n, all with respect to a fixed reference point:
//
//   nearest:         f(r) = 2*pi*n*r * exp(-pi*n*r^2)
//   second nearest:  g(r) = 2*pi^2*n^2*r^3 * exp(-pi*n*r^2)
//   joint (1st,2nd,3rd): h(r1,r2,r3) = exp(-n*pi*r3^2) * (2*n*pi)^3 * r1*r2*r3
//                        on the ordered cone r1 < r2 < r3, else 0.
double density_f(double r, double intensity);
double density_g(double r, double intensity);
double density_h(double r1, double r2, double r3, double intensity);

enum class DensityKind { nearest_f, second_g, joint_h };

struct DensitySpec {
  DensityKind kind = DensityKind::nearest_f;
  double intensity = 1.0;
};

// Integrand of the strip edge-length constant:
//   sqrt(z1^2+z2^2) * exp(-sqrt(3) z1) * (1 - z2/sqrt(3)).
double bhh_edge_integrand(double z1, double z2);

// Path-length excess forced by the isolated-triangle configuration:
// 2*r3 - 3*r1 - 3*r2 (nonnegative on r3 >= r1 + 2*r2, r1 <= r2).
double triangle_excess(double r1, double r2, double r3);

// Piecewise-linear CDF lookup table on a uniform grid.
class CdfTable {
 public:
  CdfTable(double r_max, std::vector<double> cdf);

  // F(r); clamped to [0,1] outside the tabulated range.
  double operator()(double r) const;

  double r_max() const { return r_max_; }

 private:
  double r_max_;
  double cell_;
  std::vector<double> cdf_;
};

// CDF of the k-th nearest-neighbour distance (k in {1,2,3}) obtained by
// numerically integrating the closed-form density (for k = 3, the marginal of
// h; its inner double integral over r1 < r2 < r3 reduces analytically to
// r3^4/8, leaving a 1-D cumulative quadrature). Tail above r_max ~ 6/sqrt(pi n)
// is below 1e-12 and is clamped to 1.
CdfTable knn_distance_cdf(int k, double intensity, std::size_t cells = 4096);

}  // namespace bhh
