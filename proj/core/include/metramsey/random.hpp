#pragma once

#include <cstdint>
#include <random>

#include "metramsey/scalar.hpp"

namespace metramsey {

/// splitmix64 finalizer; used to derive independent seeds from one seed.
[[nodiscard]] std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// The single randomness source of the library: std::mt19937_64 seeded with
/// splitmix64(seed). Bounded draws use rejection sampling on raw engine output,
/// so streams are identical across standard libraries.
class Rng {
public:
  static constexpr const char* kName = "mt19937_64(splitmix64(seed))";

  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform integer in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform integer in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);
  bool coin() { return (engine_() >> 63) != 0; }
  /// Uniform rational p/den with p in [-den, den].
  Scalar unit_rational(std::int64_t den);

private:
  std::mt19937_64 engine_;
};

} // namespace metramsey
