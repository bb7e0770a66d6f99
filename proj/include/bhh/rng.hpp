#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace bhh {

// Philox4x32-10 block cipher (Salmon et al., SC'11 "Parallel random numbers:
// as easy as 1, 2, 3"). Counter-based: the n-th output block is a pure
// function of (key, counter), so any position in any stream can be generated
// without sequencing through predecessors.
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key);

// Substream namespaces. A stream id is (purpose << 56) | index, so distinct
// subsystems never consume overlapping portions of the counter space for the
// same master seed.
enum class StreamPurpose : std::uint64_t {
  generic = 0,
  strip_tuples = 1,   // strip-window point tuples (one substream per batch)
  square = 2,         // unit-square Poisson samples (one substream per run)
  knn = 3,            // nearest-neighbour disc experiments
  heuristic = 4,      // reserved for heuristic-internal randomness
};

std::uint64_t stream_id(StreamPurpose purpose, std::uint64_t index);

// One independent random stream, identified by (seed, stream).
//
// Derivation: master seed -> Philox key; stream id -> counter words 2..3;
// the block position -> counter words 0..1. Each block yields two 64-bit
// outputs. Streams with distinct ids are statistically independent, and a
// fixed (seed, stream, position) always reproduces the same value, on any
// thread, in any order.
class RngStream {
 public:
  using result_type = std::uint64_t;

  RngStream(std::uint64_t seed, std::uint64_t stream)
      : key_{static_cast<std::uint32_t>(seed),
             static_cast<std::uint32_t>(seed >> 32)},
        stream_(stream) {}

  std::uint64_t next_u64();

  // Uniform on [0,1) with 53 random bits.
  double uniform01();

  // Uniform on [a,b).
  double uniform(double a, double b);

  // Exponential with the given rate; strictly positive (the underlying
  // uniform is offset to the open interval (0,1)).
  double exponential(double rate);

  // Poisson with the given mean. Inversion by multiplication below mean 10,
  // Hormann's PTRD transformed rejection above.
  std::int64_t poisson(double mean);

  // UniformRandomBitGenerator interface.
  std::uint64_t operator()() { return next_u64(); }
  static constexpr std::uint64_t min() { return 0; }
  static constexpr std::uint64_t max() {
    return std::numeric_limits<std::uint64_t>::max();
  }

 private:
  std::array<std::uint32_t, 2> key_;
  std::uint64_t stream_ = 0;
  std::uint64_t position_ = 0;
  std::uint64_t spare_ = 0;
  bool have_spare_ = false;
};

// log(Gamma(x)) for x > 0 without touching global state (std::lgamma may
// write the C signgam global, which is unsafe under concurrent batches).
// Stirling series with argument recurrence, accurate to ~1e-14.
double log_gamma(double x);

}  // namespace bhh
