#pragma once

// Exhaustive pair counting over R(w0) x (4-subsets), split over word
// prefixes for parallel and resumable runs.

#include <array>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sylvester/core.hpp"
#include "sylvester/restriction.hpp"

namespace sylvester {

/// Counts for the words below one prefix. Fragments merge by addition.
struct CountFragment {
  std::uint64_t words = 0;
  std::array<std::uint64_t, 4> class_pairs{};  // indexed by QuadClass
  std::vector<std::uint64_t> histogram;        // words by reentrant-subset count

  std::uint64_t reentrant_pairs() const noexcept { return class_pairs[0]; }
  void merge(const CountFragment& other);

  friend bool operator==(const CountFragment&, const CountFragment&) = default;
};

struct PairCountReport {
  int n = 0;
  BigInt total_words = 0;
  BigInt total_pairs = 0;
  BigInt reentrant_pairs = 0;
  std::array<BigInt, 4> class_pairs{};
  std::map<int, BigInt> per_word_histogram;
  /// False when resumed from a checkpoint lacking histogram columns.
  bool histogram_complete = true;

  /// reentrant_pairs / total_pairs in lowest terms.
  std::pair<BigInt, BigInt> probability() const;

  friend bool operator==(const PairCountReport&, const PairCountReport&) = default;
};

/// On-disk progress of an exact run.
///
///   #sylvester-ckpt v1 n=<n> depth=<d>
///   prefix<TAB>words<TAB>reentrant_pairs<TAB>c1<TAB>c2<TAB>c3[<TAB>histogram]
///
/// The optional histogram column reads "k:count,k:count". A trailing line
/// without a newline is treated as torn and dropped.
struct Checkpoint {
  int n = 0;
  int prefix_depth = 0;
  std::map<std::string, CountFragment> completed;
  bool histograms_present = true;
  /// Bytes up to the end of the last complete line.
  std::uintmax_t valid_bytes = 0;

  static std::optional<Checkpoint> load(const std::filesystem::path& path);
  static std::string header(int n, int depth);
  static std::string record(const std::string& prefix_key, const CountFragment& f);
};

struct ExactOptions {
  int workers = 1;
  std::optional<std::filesystem::path> checkpoint;
  /// Defaults to the smallest depth with at least 8 x workers prefixes, or
  /// the depth stored in an existing checkpoint.
  std::optional<int> prefix_depth;
  /// Upper bound on |R(w0)| * C(n,4); above it the run throws ResourceLimit.
  double work_budget = 1e11;
  /// Called after each prefix completes (from a worker thread). Returning
  /// false stops the run with Interrupted once in-flight prefixes finish.
  std::function<bool(std::size_t completed)> on_progress;
};

/// Throws ResourceLimit, CheckpointMismatch or Interrupted.
PairCountReport exact_probability(int n, const ExactOptions& options = {});

/// Pair counts per QuadClass, indexed by class.
std::array<BigInt, 4> class_pair_counts(int n, const ExactOptions& options = {});

/// Exact counts for the words extending one prefix, single-threaded.
CountFragment count_prefix(int n, const ReducedWord& prefix);

int default_prefix_depth(int n, int workers);

/// Key used for a prefix in checkpoint files; "." for the empty prefix.
std::string prefix_key(const ReducedWord& prefix);

/// `n,total_words,...,probability_den` header plus one data row.
std::string report_csv(const PairCountReport& report);

}  // namespace sylvester
