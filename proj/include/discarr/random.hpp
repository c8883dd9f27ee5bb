#pragma once

#include "discarr/rational.hpp"

#include <cstdint>
#include <random>
#include <stdexcept>

namespace discarr {

/// Seeded integer sampler. Bounded draws use rejection on the raw 64-bit
/// stream, so a seed produces the same sequence on every platform.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw std::invalid_argument("Sampler::uniform: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(engine_());
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return lo + static_cast<std::int64_t>(x % span);
  }

  /// Uniform in [-box, box] \ {0}.
  std::int64_t nonzero(std::int64_t box) {
    if (box < 1) throw std::invalid_argument("Sampler::nonzero: box must be positive");
    std::int64_t x;
    do {
      x = uniform(-box, box);
    } while (x == 0);
    return x;
  }

  Vector integer_vector(std::size_t len, std::int64_t box) {
    Vector v(len);
    for (auto& x : v) x = Rational(static_cast<long>(uniform(-box, box)));
    return v;
  }

  /// Derives an independent child seed; used to give each pipeline stage its
  /// own stream.
  std::uint64_t fork() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace discarr
