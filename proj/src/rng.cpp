#include "bhh/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace bhh {

namespace {

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9u;
constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85u;

inline std::array<std::uint32_t, 4> philox_round(
    const std::array<std::uint32_t, 4>& c,
    const std::array<std::uint32_t, 2>& k) {
  const std::uint64_t p0 = static_cast<std::uint64_t>(kPhiloxM0) * c[0];
  const std::uint64_t p1 = static_cast<std::uint64_t>(kPhiloxM1) * c[2];
  const auto lo0 = static_cast<std::uint32_t>(p0);
  const auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
  const auto lo1 = static_cast<std::uint32_t>(p1);
  const auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
  return {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
}

}  // namespace

std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key) {
  for (int round = 0; round < 10; ++round) {
    if (round > 0) {
      key[0] += kPhiloxW0;
      key[1] += kPhiloxW1;
    }
    counter = philox_round(counter, key);
  }
  return counter;
}

std::uint64_t stream_id(StreamPurpose purpose, std::uint64_t index) {
  if (index >= (std::uint64_t{1} << 56)) {
    throw std::invalid_argument("stream index exceeds 2^56");
  }
  return (static_cast<std::uint64_t>(purpose) << 56) | index;
}

std::uint64_t RngStream::next_u64() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  const std::array<std::uint32_t, 4> counter = {
      static_cast<std::uint32_t>(position_),
      static_cast<std::uint32_t>(position_ >> 32),
      static_cast<std::uint32_t>(stream_),
      static_cast<std::uint32_t>(stream_ >> 32)};
  const auto block = philox4x32(counter, key_);
  ++position_;
  spare_ = block[2] | (static_cast<std::uint64_t>(block[3]) << 32);
  have_spare_ = true;
  return block[0] | (static_cast<std::uint64_t>(block[1]) << 32);
}

double RngStream::uniform01() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::uniform(double a, double b) {
  return a + (b - a) * uniform01();
}

double RngStream::exponential(double rate) {
  // Midpoint offset keeps the uniform in (0,1): the result is finite and
  // strictly positive (at most ~37.4/rate).
  const double u = (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  return -std::log(u) / rate;
}

double log_gamma(double x) {
  // Zhang & Jin style Stirling expansion; below 7 the argument is raised by
  // recurrence gamma(x) = gamma(x+1)/x.
  static constexpr double coeff[10] = {
      8.333333333333333e-02, -2.777777777777778e-03, 7.936507936507937e-04,
      -5.952380952380952e-04, 8.417508417508418e-04, -1.917526917526918e-03,
      6.410256410256410e-03, -2.955065359477124e-02, 1.796443723688307e-01,
      -1.392432216905900e+00};
  if (x == 1.0 || x == 2.0) return 0.0;
  double shift = 0.0;
  double x0 = x;
  while (x0 <= 7.0) {
    shift -= std::log(x0);
    x0 += 1.0;
  }
  const double inv2 = 1.0 / (x0 * x0);
  double series = coeff[9];
  for (int i = 8; i >= 0; --i) series = series * inv2 + coeff[i];
  const double half_log_2pi = 0.9189385332046727;
  return shift + series / x0 + half_log_2pi + (x0 - 0.5) * std::log(x0) - x0;
}

std::int64_t RngStream::poisson(double mean) {
  if (!(mean > 0.0)) {
    throw std::invalid_argument("poisson mean must be positive");
  }
  if (mean < 10.0) {
    // Knuth's product-of-uniforms inversion.
    const double limit = std::exp(-mean);
    double product = 1.0;
    std::int64_t count = -1;
    do {
      product *= uniform01();
      ++count;
    } while (product > limit);
    return count;
  }
  // PTRD transformed rejection (Hormann 1993), exact for all means >= 10.
  const double sqrt_mean = std::sqrt(mean);
  const double log_mean = std::log(mean);
  const double b = 0.931 + 2.53 * sqrt_mean;
  const double a = -0.059 + 0.02483 * b;
  const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
  const double v_r = 0.9277 - 3.6224 / (b - 2.0);
  for (;;) {
    const double u = uniform01() - 0.5;
    const double v = uniform01();
    const double us = 0.5 - std::fabs(u);
    const auto k =
        static_cast<std::int64_t>(std::floor((2.0 * a / us + b) * u + mean + 0.43));
    if (us >= 0.07 && v <= v_r) return k;
    if (k < 0 || (us < 0.013 && v > us)) continue;
    const double lhs = std::log(v) + std::log(inv_alpha) - std::log(a / (us * us) + b);
    const double rhs = -mean + static_cast<double>(k) * log_mean -
                       log_gamma(static_cast<double>(k) + 1.0);
    if (lhs <= rhs) return k;
  }
}

}  // namespace bhh
