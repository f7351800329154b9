#pragma once

#include <array>
#include <cstdint>

namespace sylvester {

/// Philox4x32-10 block function (Salmon et al., "Parallel random numbers:
/// as easy as 1, 2, 3").
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key) noexcept;

/// Counter-based random stream: draw k of trial t is a pure function of
/// (seed, t, k), so results do not depend on how trials are scheduled.
class CounterStream {
 public:
  CounterStream(std::uint64_t seed, std::uint64_t trial) noexcept : seed_(seed), trial_(trial) {}

  std::uint64_t next_u64() noexcept;

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() noexcept { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound) noexcept;

  std::uint64_t draws() const noexcept { return draw_; }

 private:
  std::uint64_t seed_;
  std::uint64_t trial_;
  std::uint64_t draw_ = 0;
};

}  // namespace sylvester
