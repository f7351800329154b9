#include "sylvester/montecarlo.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>

#include "sylvester/errors.hpp"
#include "sylvester/tableaux.hpp"

namespace sylvester {

namespace {

struct ClassTally {
  std::array<std::uint64_t, 4> counts{};
  ClassTally& operator+=(const ClassTally& o) {
    for (int c = 0; c < 4; ++c) counts[c] += o.counts[c];
    return *this;
  }
};

}  // namespace

double Estimate::standard_error() const noexcept {
  if (trials == 0) return 0.0;
  const double p = mean();
  return std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
}

bool Estimate::within(double target, double sigmas) const noexcept {
  const double sigma = std::sqrt(target * (1.0 - target) / static_cast<double>(trials));
  return std::abs(mean() - target) <= sigmas * sigma;
}

WireSubset sample_subset(int n, int k, CounterStream& rng) {
  std::set<int> chosen;
  for (int j = n - k; j < n; ++j) {
    const int t = static_cast<int>(rng.below(static_cast<std::uint64_t>(j) + 1));
    chosen.insert(chosen.contains(t) ? j : t);
  }
  std::vector<int> values;
  for (int v : chosen) values.push_back(v + 1);
  return WireSubset(n, std::move(values));
}

SampleReport monte_carlo_probability(int n, std::uint64_t trials, std::uint64_t seed, int workers) {
  if (n < 4) throw InvalidArgument("monte_carlo_probability needs n >= 4");
  if (trials == 0) throw InvalidArgument("trials must be positive");
  const auto tally = parallel_trials<ClassTally>(trials, workers, [&](ClassTally& acc, std::uint64_t t) {
    CounterStream rng(seed, t);
    const ReducedWord w = sample_uniform_word(n, rng);
    const WireSubset s = sample_subset(n, 4, rng);
    ++acc.counts[static_cast<int>(classify(restrict(w, s)))];
  });
  SampleReport report;
  report.n = n;
  report.trials = trials;
  report.seed = seed;
  report.class_counts = tally.counts;
  return report;
}

std::string format_fixed(double value, int digits) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed, digits);
  return ec == std::errc{} ? std::string(buf, ptr) : std::string("nan");
}

std::string sample_csv(const SampleReport& report) {
  std::string out = "class,count,fraction\n";
  for (QuadClass c : kQuadClasses) {
    const auto count = report.class_counts[static_cast<int>(c)];
    out += std::string(to_string(c)) + ',' + std::to_string(count) + ',' +
           format_fixed(static_cast<double>(count) / static_cast<double>(report.trials), 6) + '\n';
  }
  return out;
}

}  // namespace sylvester
