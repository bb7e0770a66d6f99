#include "bhh/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bhh {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt3 = std::numbers::sqrt3;

using Kernel = boost::math::quadrature::gauss_kronrod<double, 15>;

// Adaptive GK15 with an evaluation counter shared across nesting levels.
double adaptive(const std::function<double(double)>& f, double a, double b,
                double tol, double* err, long* evals) {
  auto counted = [&](double x) {
    ++*evals;
    return f(x);
  };
  return Kernel::integrate(counted, a, b, 17, tol, err);
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b, double abs_tol) {
  if (!(abs_tol > 0.0)) {
    throw std::invalid_argument("integrate_adaptive: tolerance must be positive");
  }
  QuadratureResult r;
  r.value = adaptive(f, a, b, abs_tol, &r.abs_error_estimate, &r.evaluations);
  return r;
}

QuadratureResult bhh_constant() {
  // z1 tail: integrand <= (z1 + sqrt(3)) e^(-sqrt(3) z1), below 3e-23 at 30.
  constexpr double z1_cut = 30.0;
  QuadratureResult r;
  long evals = 0;
  double outer_err = 0.0;
  const auto outer = [&](double z1) {
    double inner_err = 0.0;
    return adaptive([&](double z2) { return bhh_edge_integrand(z1, z2); }, 0.0,
                    kSqrt3, 1e-13, &inner_err, &evals);
  };
  const double value =
      2.0 * adaptive(outer, 0.0, z1_cut, 1e-11, &outer_err, &evals);
  r.value = value;
  // Outer estimate plus the inner tolerance swept over the outer measure.
  r.abs_error_estimate = 2.0 * outer_err + 2.0 * z1_cut * 1e-13;
  r.evaluations = evals;
  return r;
}

QuadratureResult triangle_probability(double intensity) {
  if (!(intensity > 0.0)) {
    throw std::invalid_argument("triangle_probability: intensity must be positive");
  }
  const double a = kPi * intensity;
  // After the exact r3 step the integrand is 4 a^2 r1 r2 e^(-a (r1+2 r2)^2).
  // Cut both radial variables at 4/sqrt(intensity): the discarded mass is
  // below e^(-16 pi) ~ 1.5e-22.
  const double cut = 4.0 / std::sqrt(intensity);
  QuadratureResult r;
  long evals = 0;
  double outer_err = 0.0;
  const auto outer = [&](double r1) {
    double inner_err = 0.0;
    return adaptive(
        [&](double r2) {
          const double c = r1 + 2.0 * r2;
          return 4.0 * a * a * r1 * r2 * std::exp(-a * c * c);
        },
        r1, r1 + cut, 1e-14, &inner_err, &evals);
  };
  r.value = adaptive(outer, 0.0, cut, 1e-12, &outer_err, &evals);
  r.abs_error_estimate = outer_err + cut * 1e-14;
  r.evaluations = evals;
  return r;
}

QuadratureResult triangle_gain(double intensity) {
  if (!(intensity > 0.0)) {
    throw std::invalid_argument("triangle_gain: intensity must be positive");
  }
  const double a = kPi * intensity;
  const double sqrt_a = std::sqrt(a);
  const double cut = 4.0 / std::sqrt(intensity);
  QuadratureResult r;
  long evals = 0;
  double outer_err = 0.0;
  const auto outer = [&](double r1) {
    double inner_err = 0.0;
    return adaptive(
        [&](double r2) {
          const double c = r1 + 2.0 * r2;
          const double gauss = 4.0 * a * a * r1 * r2 * (r2 - r1) *
                               std::exp(-a * c * c);
          const double tail = 4.0 * std::sqrt(kPi) * a * sqrt_a * r1 * r2 *
                              std::erfc(sqrt_a * c);
          return gauss + tail;
        },
        r1, r1 + cut, 1e-14, &inner_err, &evals);
  };
  const double raw = adaptive(outer, 0.0, cut, 1e-12, &outer_err, &evals);
  r.value = (324.0 / 7.0) * raw * std::sqrt(intensity);
  r.abs_error_estimate = (324.0 / 7.0) * std::sqrt(intensity) *
                         (outer_err + cut * 1e-14);
  r.evaluations = evals;
  return r;
}

std::pair<double, double> knn_expectations(double intensity) {
  if (!(intensity > 0.0)) {
    throw std::invalid_argument("knn_expectations: intensity must be positive");
  }
  const double cut = 8.0 / std::sqrt(intensity);
  long evals = 0;
  double err = 0.0;
  const double nearest = adaptive(
      [&](double r) { return r * density_f(r, intensity); }, 0.0, cut, 1e-13,
      &err, &evals);
  const double second = adaptive(
      [&](double r) { return r * density_g(r, intensity); }, 0.0, cut, 1e-13,
      &err, &evals);
  return {nearest, second};
}

double event_b_probability() {
  const double gap_factor = 1.0 - std::exp(-1.0 / 3.0);
  return gap_factor * gap_factor * gap_factor / 6561.0;
}

QuadratureResult density_normalization(const DensitySpec& spec) {
  if (!(spec.intensity > 0.0)) {
    throw std::invalid_argument("density_normalization: intensity must be positive");
  }
  const double n = spec.intensity;
  QuadratureResult r;
  long evals = 0;
  double err = 0.0;
  switch (spec.kind) {
    case DensityKind::nearest_f:
      r.value = adaptive([&](double x) { return density_f(x, n); }, 0.0,
                         8.0 / std::sqrt(n), 1e-12, &err, &evals);
      r.abs_error_estimate = err;
      break;
    case DensityKind::second_g:
      r.value = adaptive([&](double x) { return density_g(x, n); }, 0.0,
                         8.0 / std::sqrt(n), 1e-12, &err, &evals);
      r.abs_error_estimate = err;
      break;
    case DensityKind::joint_h: {
      // Exact r3 step: int_{r2}^inf h dr3 = (2 a)^2 r1 r2 e^(-a r2^2).
      const double a = kPi * n;
      const double cut = 6.0 / std::sqrt(n);
      double outer_err = 0.0;
      const auto outer = [&](double r1) {
        double inner_err = 0.0;
        return adaptive(
            [&](double r2) {
              return 4.0 * a * a * r1 * r2 * std::exp(-a * r2 * r2);
            },
            r1, cut, 1e-14, &inner_err, &evals);
      };
      r.value = adaptive(outer, 0.0, cut, 1e-12, &outer_err, &evals);
      r.abs_error_estimate = outer_err + cut * 1e-14;
      break;
    }
  }
  r.evaluations = evals;
  return r;
}

}  // namespace bhh
