#pragma once

// Restriction of a wiring diagram to a subset of strands, and the
// classification of the induced S_4 words.

#include <array>
#include <span>
#include <string_view>
#include <vector>

#include "sylvester/core.hpp"

namespace sylvester {

/// A strictly increasing subset of {1..n} with at least two elements.
class WireSubset {
 public:
  /// Throws InvalidSubset on unsorted, repeated or out-of-range values.
  WireSubset(int n, std::vector<int> values);

  /// Parses "1,2,3,4".
  static WireSubset parse(int n, std::string_view text);

  int n() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(values_.size()); }
  std::span<const int> values() const noexcept { return values_; }
  bool contains(int value) const noexcept;

 private:
  int n_;
  std::vector<int> values_;
};

/// Induced word on the strands in `subset`: each crossing of two subset
/// strands at position i emits the number of subset strands at positions
/// <= i. Throws NotFullWord.
ReducedWord restrict(const ReducedWord& word, const WireSubset& subset);

/// Orbits of R(w0 in S_4) under <reversal, flip>. The three convex orbits
/// are ordered by their lexicographically smallest member.
enum class QuadClass : int { Reentrant = 0, C1 = 1, C2 = 2, C3 = 3 };

inline constexpr std::array<QuadClass, 4> kQuadClasses = {QuadClass::Reentrant, QuadClass::C1,
                                                          QuadClass::C2, QuadClass::C3};

std::string_view to_string(QuadClass c) noexcept;

/// The four members of a class, sorted.
std::vector<ReducedWord> class_members(QuadClass c);

/// Throws NotFullWord unless v is a full reduced word at n = 4.
QuadClass classify(const ReducedWord& v);

/// True iff v is one of s1s2s3s2s1s2, s3s2s1s2s3s2, s2s1s2s3s2s1, s2s3s2s1s2s3.
bool is_reentrant(const ReducedWord& v);

/// Number of 4-subsets S with restrict(word, S) reentrant.
int reentrant_subset_count(const ReducedWord& word);

/// All k-subsets of {1..n} in lexicographic order.
std::vector<WireSubset> all_subsets(int n, int k);

}  // namespace sylvester
