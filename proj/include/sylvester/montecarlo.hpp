#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>

#include "sylvester/random.hpp"
#include "sylvester/restriction.hpp"

namespace sylvester {

/// A binomial proportion estimate.
struct Estimate {
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;

  double mean() const noexcept {
    return trials == 0 ? 0.0 : static_cast<double>(successes) / static_cast<double>(trials);
  }
  /// sqrt(p(1-p)/trials) at the observed p.
  double standard_error() const noexcept;
  /// |mean - target| <= sigmas * sqrt(target(1-target)/trials).
  bool within(double target, double sigmas) const noexcept;
};

struct SampleReport {
  int n = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::array<std::uint64_t, 4> class_counts{};  // indexed by QuadClass

  Estimate reentrant() const noexcept { return {trials, class_counts[0]}; }
};

/// Uniform k-subset of {1..n} (Floyd's algorithm).
WireSubset sample_subset(int n, int k, CounterStream& rng);

/// Runs fn(acc, trial) for trial in [0, trials) split into contiguous blocks
/// over `workers` threads, then folds the per-thread accumulators with +=.
template <class Acc, class Fn>
Acc parallel_trials(std::uint64_t trials, int workers, Fn fn);

/// Trials of (uniform word of R(w0), uniform 4-subset). Trial t uses
/// CounterStream(seed, t), so the result does not depend on `workers`.
SampleReport monte_carlo_probability(int n, std::uint64_t trials, std::uint64_t seed, int workers = 1);

/// `class,count,fraction` rows for the four classes.
std::string sample_csv(const SampleReport& report);

/// Fixed-point decimal with '.' separator regardless of locale.
std::string format_fixed(double value, int digits);

}  // namespace sylvester

#include "sylvester/detail/parallel.hpp"
