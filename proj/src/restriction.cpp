#include "sylvester/restriction.hpp"

#include <algorithm>
#include <charconv>
#include <string>
#include <utility>

#include "sylvester/errors.hpp"

namespace sylvester {

namespace {

struct QuadEntry {
  std::string_view word;
  QuadClass cls;
};

constexpr QuadEntry kQuadTable[] = {
#include "quad_classes.inc"
};

}  // namespace

WireSubset::WireSubset(int n, std::vector<int> values) : n_(n), values_(std::move(values)) {
  if (values_.size() < 2 || static_cast<int>(values_.size()) > n)
    throw InvalidSubset("subset size must lie in 2..n");
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (values_[k] < 1 || values_[k] > n)
      throw InvalidSubset("value " + std::to_string(values_[k]) + " outside 1.." + std::to_string(n));
    if (k > 0 && values_[k] <= values_[k - 1])
      throw InvalidSubset("values must be strictly increasing");
  }
}

WireSubset WireSubset::parse(int n, std::string_view text) {
  std::vector<int> values;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(',', start), text.size());
    const std::string_view token = text.substr(start, end - start);
    int v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
      throw InvalidSubset("bad subset element '" + std::string(token) + "'");
    values.push_back(v);
    start = end + 1;
  }
  return WireSubset(n, std::move(values));
}

bool WireSubset::contains(int value) const noexcept {
  return std::binary_search(values_.begin(), values_.end(), value);
}

ReducedWord restrict(const ReducedWord& word, const WireSubset& subset) {
  require_full_word(word);
  if (subset.n() != word.n) throw InvalidSubset("subset and word disagree on n");

  std::vector<bool> member(static_cast<std::size_t>(word.n) + 1, false);
  for (int v : subset.values()) member[v] = true;

  Permutation p(word.n);
  ReducedWord out{subset.size(), {}};
  out.letters.reserve(static_cast<std::size_t>(long_word_length(subset.size())));
  for (int letter : word.letters) {
    if (member[p.at(letter)] && member[p.at(letter + 1)]) {
      int rank = 0;
      for (int pos = 1; pos <= letter; ++pos) rank += member[p.at(pos)] ? 1 : 0;
      out.letters.push_back(rank);
    }
    p.apply(letter);
  }
  return out;
}

std::string_view to_string(QuadClass c) noexcept {
  switch (c) {
    case QuadClass::Reentrant: return "REENTRANT";
    case QuadClass::C1: return "C1";
    case QuadClass::C2: return "C2";
    case QuadClass::C3: return "C3";
  }
  return "?";
}

std::vector<ReducedWord> class_members(QuadClass c) {
  std::vector<ReducedWord> out;
  for (const auto& e : kQuadTable)
    if (e.cls == c) out.push_back(parse_word(4, e.word));
  std::sort(out.begin(), out.end());
  return out;
}

QuadClass classify(const ReducedWord& v) {
  if (v.n != 4) throw NotFullWord("classification needs a word of w0 in S_4");
  require_full_word(v);
  const std::string key = to_string(v);
  for (const auto& e : kQuadTable)
    if (e.word == key) return e.cls;
  throw NotFullWord("'" + key + "' missing from the class table");
}

bool is_reentrant(const ReducedWord& v) { return classify(v) == QuadClass::Reentrant; }

std::vector<WireSubset> all_subsets(int n, int k) {
  std::vector<WireSubset> out;
  if (k < 2 || k > n) return out;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) idx[j] = j + 1;
  for (;;) {
    out.emplace_back(n, idx);
    int j = k - 1;
    while (j >= 0 && idx[j] == n - k + j + 1) --j;
    if (j < 0) break;
    ++idx[j];
    for (int t = j + 1; t < k; ++t) idx[t] = idx[t - 1] + 1;
  }
  return out;
}

int reentrant_subset_count(const ReducedWord& word) {
  require_full_word(word);
  int count = 0;
  for (const auto& s : all_subsets(word.n, 4))
    if (is_reentrant(restrict(word, s))) ++count;
  return count;
}

}  // namespace sylvester
