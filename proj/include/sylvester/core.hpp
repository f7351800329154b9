#pragma once

// Permutations of {1..n}, words in the adjacent transpositions s_i, and
// exhaustive enumeration of the reduced words of the long word w0.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sylvester {

using BigInt = boost::multiprecision::cpp_int;

/// Number of letters in a reduced word for w0 in S_n.
constexpr int long_word_length(int n) noexcept { return n * (n - 1) / 2; }

/// A permutation in one-line notation: image()[p] is the value at position p+1.
class Permutation {
 public:
  /// Identity on {1..n}.
  explicit Permutation(int n);
  /// Throws ParseError unless `image` is a bijection on {1..n}.
  explicit Permutation(std::vector<int> image);

  static Permutation long_word(int n);

  int size() const noexcept { return static_cast<int>(image_.size()); }
  std::span<const int> image() const noexcept { return image_; }

  /// Value at 1-based position `pos`.
  int at(int pos) const { return image_.at(static_cast<std::size_t>(pos - 1)); }

  /// True when applying s_letter increases length by one.
  bool has_ascent(int letter) const noexcept {
    return image_[letter - 1] < image_[letter];
  }

  /// Right multiplication by s_letter: swaps positions letter and letter+1.
  void apply(int letter) noexcept { std::swap(image_[letter - 1], image_[letter]); }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> image_;
};

/// A word s_{letters[0]} s_{letters[1]} ... in S_n. Letters are 1-based.
struct ReducedWord {
  int n = 0;
  std::vector<int> letters;

  std::size_t size() const noexcept { return letters.size(); }

  friend bool operator==(const ReducedWord&, const ReducedWord&) = default;
  friend auto operator<=>(const ReducedWord&, const ReducedWord&) = default;
};

/// One strand crossing of a wiring diagram; the pair is stored with a < b.
struct Crossing {
  int time = 0;
  int a = 0;
  int b = 0;
  int position = 0;

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// Product of the letters applied left to right to the identity.
Permutation product(const ReducedWord& word);

/// True iff the word has length n(n-1)/2, every step is an ascent, and
/// the product is w0.
bool is_reduced_word_for_long_word(const ReducedWord& word);

/// Throws NotFullWord unless is_reduced_word_for_long_word(word).
void require_full_word(const ReducedWord& word);

/// |R(w0)| via the hook length formula for the staircase (n-1, ..., 1).
BigInt count_reduced_words(int n);

/// Reading the word right to left.
ReducedWord reversal(const ReducedWord& word);

/// Letter i becomes n-i.
ReducedWord flip(const ReducedWord& word);

/// Value pairs swapped at each letter. Throws NotFullWord.
std::vector<Crossing> word_to_crossings(const ReducedWord& word);

/// Digit string for n <= 10 ("232123"), comma-separated integers otherwise.
std::string to_string(const ReducedWord& word);

/// Accepts either format; letters must lie in {1..n-1}, else ParseError.
ReducedWord parse_word(int n, std::string_view text);

/// Infers n from the word length, which must be n(n-1)/2 for some n >= 2.
ReducedWord parse_full_word(std::string_view text);

/// Lexicographic depth-first stream of all full reduced words for w0 that
/// extend a prefix. Single consumer.
class ReducedWordStream {
 public:
  /// Throws InvalidPrefix if the prefix has a non-ascent step.
  ReducedWordStream(int n, ReducedWord prefix);
  explicit ReducedWordStream(int n) : ReducedWordStream(n, ReducedWord{n, {}}) {}

  std::optional<ReducedWord> next();

 private:
  bool advance();
  void undo_last();

  int n_;
  std::size_t base_;
  std::size_t full_;
  Permutation perm_;
  ReducedWord word_;
  std::vector<int> cursor_;
  bool started_ = false;
  bool done_ = false;
};

/// Materializes a ReducedWordStream. Meant for small n.
std::vector<ReducedWord> enumerate_words(int n, const ReducedWord& prefix);
std::vector<ReducedWord> enumerate_words(int n);

/// All reduced prefixes of w0 of exactly `depth` letters, in lexicographic order.
std::vector<ReducedWord> reduced_prefixes(int n, int depth);

}  // namespace sylvester
