#include "sylvester/core.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "sylvester/errors.hpp"

namespace sylvester {

Permutation::Permutation(int n) : image_(static_cast<std::size_t>(n)) {
  std::iota(image_.begin(), image_.end(), 1);
}

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size() + 1, false);
  for (int v : image_) {
    if (v < 1 || v > size() || seen[v]) throw ParseError("not a permutation of 1..n");
    seen[v] = true;
  }
}

Permutation Permutation::long_word(int n) {
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.rbegin(), image.rend(), 1);
  return Permutation(std::move(image));
}

Permutation product(const ReducedWord& word) {
  Permutation p(word.n);
  for (int letter : word.letters) {
    if (letter < 1 || letter >= word.n) throw ParseError("letter out of range");
    p.apply(letter);
  }
  return p;
}

bool is_reduced_word_for_long_word(const ReducedWord& word) {
  if (word.n < 1 || static_cast<int>(word.size()) != long_word_length(word.n)) return false;
  Permutation p(word.n);
  for (int letter : word.letters) {
    if (letter < 1 || letter >= word.n || !p.has_ascent(letter)) return false;
    p.apply(letter);
  }
  // n(n-1)/2 ascents from the identity can only end at w0; checked anyway.
  return p == Permutation::long_word(word.n);
}

void require_full_word(const ReducedWord& word) {
  if (!is_reduced_word_for_long_word(word)) {
    throw NotFullWord("'" + to_string(word) + "' is not a reduced word for w0 in S_" +
                      std::to_string(word.n));
  }
}

BigInt count_reduced_words(int n) {
  if (n <= 2) return 1;
  const int cells = long_word_length(n);
  BigInt numerator = 1;
  for (int k = 2; k <= cells; ++k) numerator *= k;
  // Cell (r, c) of the staircase has arm = leg = n-2-r-c.
  BigInt hooks = 1;
  for (int r = 0; r < n - 1; ++r)
    for (int c = 0; c < n - 1 - r; ++c) hooks *= 2 * (n - 2 - r - c) + 1;
  return numerator / hooks;
}

ReducedWord reversal(const ReducedWord& word) {
  ReducedWord out{word.n, {word.letters.rbegin(), word.letters.rend()}};
  return out;
}

ReducedWord flip(const ReducedWord& word) {
  ReducedWord out{word.n, word.letters};
  for (int& letter : out.letters) letter = word.n - letter;
  return out;
}

std::vector<Crossing> word_to_crossings(const ReducedWord& word) {
  require_full_word(word);
  std::vector<Crossing> out;
  out.reserve(word.size());
  Permutation p(word.n);
  int time = 0;
  for (int letter : word.letters) {
    const int x = p.at(letter);
    const int y = p.at(letter + 1);
    out.push_back({++time, std::min(x, y), std::max(x, y), letter});
    p.apply(letter);
  }
  return out;
}

std::string to_string(const ReducedWord& word) {
  std::string out;
  const bool compact = word.n <= 10;
  for (std::size_t k = 0; k < word.letters.size(); ++k) {
    if (!compact && k > 0) out += ',';
    out += std::to_string(word.letters[k]);
  }
  return out;
}

ReducedWord parse_word(int n, std::string_view text) {
  ReducedWord word{n, {}};
  auto check = [&](int letter) {
    if (letter < 1 || letter >= n)
      throw ParseError("letter " + std::to_string(letter) + " outside 1.." + std::to_string(n - 1));
    word.letters.push_back(letter);
  };
  if (text.find(',') == std::string_view::npos) {
    for (char ch : text) {
      if (ch < '0' || ch > '9') throw ParseError("bad character in word '" + std::string(text) + "'");
      check(ch - '0');
    }
    return word;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(',', start), text.size());
    const std::string_view token = text.substr(start, end - start);
    int letter = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), letter);
    if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty())
      throw ParseError("bad letter '" + std::string(token) + "'");
    check(letter);
    start = end + 1;
  }
  return word;
}

ReducedWord parse_full_word(std::string_view text) {
  const std::size_t length =
      text.find(',') == std::string_view::npos
          ? text.size()
          : static_cast<std::size_t>(std::count(text.begin(), text.end(), ',')) + 1;
  int n = 2;
  while (static_cast<std::size_t>(long_word_length(n)) < length) ++n;
  if (static_cast<std::size_t>(long_word_length(n)) != length || length == 0)
    throw NotFullWord("length " + std::to_string(length) + " is not n(n-1)/2");
  ReducedWord word = parse_word(n, text);
  require_full_word(word);
  return word;
}

ReducedWordStream::ReducedWordStream(int n, ReducedWord prefix)
    : n_(n),
      base_(prefix.size()),
      full_(static_cast<std::size_t>(long_word_length(n))),
      perm_(n),
      word_{n, {}} {
  if (prefix.n != n) throw InvalidPrefix("prefix belongs to a different S_n");
  for (int letter : prefix.letters) {
    if (letter < 1 || letter >= n || !perm_.has_ascent(letter))
      throw InvalidPrefix("'" + to_string(prefix) + "' is not a reduced prefix");
    perm_.apply(letter);
  }
  word_ = std::move(prefix);
}

void ReducedWordStream::undo_last() {
  perm_.apply(word_.letters.back());
  word_.letters.pop_back();
}

// Moves to the next leaf; cursor_ holds the last letter tried at each depth
// below the prefix.
bool ReducedWordStream::advance() {
  while (!cursor_.empty()) {
    int& tried = cursor_.back();
    int letter = tried + 1;
    while (letter < n_ && !perm_.has_ascent(letter)) ++letter;
    if (letter < n_) {
      tried = letter;
      perm_.apply(letter);
      word_.letters.push_back(letter);
      if (word_.size() == full_) return true;
      cursor_.push_back(0);
      continue;
    }
    cursor_.pop_back();
    if (cursor_.empty()) return false;
    undo_last();
  }
  return false;
}

std::optional<ReducedWord> ReducedWordStream::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    if (base_ == full_) {
      done_ = true;
      return word_;
    }
    cursor_.push_back(0);
  } else {
    undo_last();
  }
  if (advance()) return word_;
  done_ = true;
  return std::nullopt;
}

std::vector<ReducedWord> enumerate_words(int n, const ReducedWord& prefix) {
  std::vector<ReducedWord> out;
  ReducedWordStream stream(n, prefix);
  while (auto w = stream.next()) out.push_back(std::move(*w));
  return out;
}

std::vector<ReducedWord> enumerate_words(int n) { return enumerate_words(n, ReducedWord{n, {}}); }

std::vector<ReducedWord> reduced_prefixes(int n, int depth) {
  std::vector<ReducedWord> level{ReducedWord{n, {}}};
  for (int d = 0; d < depth; ++d) {
    std::vector<ReducedWord> next;
    for (const auto& w : level) {
      const Permutation p = product(w);
      for (int letter = 1; letter < n; ++letter) {
        if (!p.has_ascent(letter)) continue;
        ReducedWord child = w;
        child.letters.push_back(letter);
        next.push_back(std::move(child));
      }
    }
    level = std::move(next);
  }
  return level;
}

}  // namespace sylvester
