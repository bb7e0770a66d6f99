#pragma once

#include <functional>
#include <utility>

#include "bhh/densities.hpp"

namespace bhh {

struct QuadratureResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  long evaluations = 0;
};

// Adaptive Gauss-Kronrod (15-point panels, recursive bisection) on [a,b].
QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b, double abs_tol);

// The strip-constant double integral
//   2 * int_0^inf int_0^sqrt(3) sqrt(z1^2+z2^2) e^(-sqrt(3) z1) (1 - z2/sqrt(3)) dz2 dz1
// evaluated by nested adaptive panels. The z1 tail is cut at 30, where the
// integrand is below 3e-23. Absolute error <= 1e-8 (the classically quoted
// 0.92037 is off by ~8e-4; see the bounds report).
QuadratureResult bhh_constant();

// P(r3 > r1 + 2*r2) under the joint law h: the triple integral
//   int_0^inf int_{r1}^inf int_{r1+2 r2}^inf h(r1,r2,r3) dr3 dr2 dr1.
// The r3 integral has the closed antiderivative
//   int_c^inf e^(-a r^2) r dr = e^(-a c^2)/(2a),   a = pi*intensity,
// leaving a 2-D nested adaptive integral. Scale-invariant in the intensity.
QuadratureResult triangle_probability(double intensity);

// Conditional expected excess (324/7) * E[(2 r3 - 3 r1 - 3 r2) ; r3 > r1+2r2],
// normalized by sqrt(intensity) to the dimensionless constant. The r3 step
// uses int_c^inf r^2 e^(-a r^2) dr = c e^(-a c^2)/(2a) + sqrt(pi) erfc(sqrt(a) c)/(4 a^(3/2)).
QuadratureResult triangle_gain(double intensity);

// (E nearest distance, E second-nearest distance) =
// (1/(2 sqrt n), 3/(4 sqrt n)); evaluated to 1e-10 absolute.
std::pair<double, double> knn_expectations(double intensity);

// P(B) = (1 - e^(-1/3))^3 / 6561: three gap factors 1 - e^(-1/3) and the two
// ordinate factors 1/81 each.
double event_b_probability();

// Total mass of the given density (integrates its full domain numerically;
// should be 1 within 1e-9).
QuadratureResult density_normalization(const DensitySpec& spec);

}  // namespace bhh
