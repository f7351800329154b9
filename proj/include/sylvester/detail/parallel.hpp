#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace sylvester {

template <class Acc, class Fn>
Acc parallel_trials(std::uint64_t trials, int workers, Fn fn) {
  const auto threads = static_cast<std::uint64_t>(std::max(workers, 1));
  std::vector<Acc> partial(threads);
  std::vector<std::exception_ptr> errors(threads);
  {
    std::vector<std::jthread> pool;
    for (std::uint64_t t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        const std::uint64_t begin = trials * t / threads;
        const std::uint64_t end = trials * (t + 1) / threads;
        try {
          for (std::uint64_t trial = begin; trial < end; ++trial) fn(partial[t], trial);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  Acc total{};
  for (auto& p : partial) total += p;
  return total;
}

}  // namespace sylvester
