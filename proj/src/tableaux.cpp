#include "sylvester/tableaux.hpp"

#include <algorithm>
#include <string>

#include "sylvester/errors.hpp"

namespace sylvester {

namespace {

int row_length(int n, int r) { return n - 1 - r; }

bool has_staircase_shape(const StaircaseTableau& t) {
  if (t.n < 2 || static_cast<int>(t.rows.size()) != t.n - 1) return false;
  for (int r = 0; r < t.n - 1; ++r)
    if (static_cast<int>(t.rows[r].size()) != row_length(t.n, r)) return false;
  return true;
}

// Insertion tableau of every reduced word of w0: cell (r, c) holds r+c+1.
RaggedArray staircase_insertion_tableau(int n) {
  RaggedArray p(static_cast<std::size_t>(n - 1));
  for (int r = 0; r < n - 1; ++r)
    for (int c = 0; c < row_length(n, r); ++c) p[r].push_back(r + c + 1);
  return p;
}

}  // namespace

bool is_standard(const StaircaseTableau& t) {
  if (!has_staircase_shape(t)) return false;
  const int cells = long_word_length(t.n);
  std::vector<bool> seen(static_cast<std::size_t>(cells) + 1, false);
  for (int r = 0; r < t.n - 1; ++r) {
    for (int c = 0; c < row_length(t.n, r); ++c) {
      const int v = t.rows[r][c];
      if (v < 1 || v > cells || seen[v]) return false;
      seen[v] = true;
      if (c > 0 && t.rows[r][c - 1] >= v) return false;
      if (r > 0 && t.rows[r - 1][c] >= v) return false;
    }
  }
  return true;
}

RaggedArray hook_lengths(int n) {
  RaggedArray hooks(static_cast<std::size_t>(std::max(n - 1, 0)));
  for (int r = 0; r < n - 1; ++r) {
    for (int c = 0; c < row_length(n, r); ++c) {
      const int arm = row_length(n, r) - 1 - c;
      int leg = 0;
      for (int below = r + 1; below < n - 1 && row_length(n, below) > c; ++below) ++leg;
      hooks[r].push_back(arm + leg + 1);
    }
  }
  return hooks;
}

StaircaseTableau sample_tableau(int n, CounterStream& rng) {
  StaircaseTableau t{n, RaggedArray(static_cast<std::size_t>(n - 1))};
  std::vector<int> len(static_cast<std::size_t>(n - 1));
  for (int r = 0; r < n - 1; ++r) {
    len[r] = row_length(n, r);
    t.rows[r].assign(static_cast<std::size_t>(len[r]), 0);
  }
  int rows = n - 1;

  for (int m = long_word_length(n); m >= 1; --m) {
    // Uniform cell of the remaining shape.
    auto k = static_cast<int>(rng.below(static_cast<std::uint64_t>(m)));
    int r = 0;
    while (k >= len[r]) k -= len[r++];
    int c = k;

    // Walk to a corner through uniformly chosen hook cells.
    for (;;) {
      const int arm = len[r] - 1 - c;
      int leg = 0;
      while (r + 1 + leg < rows && len[r + 1 + leg] > c) ++leg;
      if (arm + leg == 0) break;
      const auto u = static_cast<int>(rng.below(static_cast<std::uint64_t>(arm + leg)));
      if (u < arm) {
        c += 1 + u;
      } else {
        r += 1 + (u - arm);
      }
    }
    t.rows[r][c] = m;
    if (--len[r] == 0) --rows;
  }
  return t;
}

StaircaseTableau word_to_tableau(const ReducedWord& word) {
  require_full_word(word);
  const int n = word.n;
  RaggedArray insertion;
  RaggedArray recording;
  int step = 0;
  for (int letter : word.letters) {
    ++step;
    int x = letter;
    std::size_t r = 0;
    for (;; ++r) {
      if (r == insertion.size()) {
        insertion.emplace_back();
        recording.emplace_back();
      }
      auto& row = insertion[r];
      auto above = std::upper_bound(row.begin(), row.end(), x);
      if (above == row.end()) {
        row.push_back(x);
        recording[r].push_back(step);
        break;
      }
      // Edelman-Greene special case: x and x+1 both present, row unchanged.
      if (*above == x + 1 && above != row.begin() && *(above - 1) == x) {
        x = x + 1;
        continue;
      }
      std::swap(*above, x);
    }
  }
  StaircaseTableau t{n, std::move(recording)};
  if (!has_staircase_shape(t) || insertion != staircase_insertion_tableau(n))
    throw NotFullWord("insertion did not produce the staircase tableau");
  return t;
}

ReducedWord tableau_to_word(const StaircaseTableau& t) {
  if (!is_standard(t)) throw MalformedTableau("not a standard staircase tableau");
  const int n = t.n;
  const int cells = long_word_length(n);

  std::vector<int> row_of(static_cast<std::size_t>(cells) + 1);
  for (int r = 0; r < n - 1; ++r)
    for (int v : t.rows[r]) row_of[v] = r;

  RaggedArray insertion = staircase_insertion_tableau(n);
  ReducedWord word{n, std::vector<int>(static_cast<std::size_t>(cells))};
  for (int m = cells; m >= 1; --m) {
    const int r = row_of[m];
    // m is the largest remaining entry, so it sits at the end of its row.
    int y = insertion[r].back();
    insertion[r].pop_back();
    for (int up = r - 1; up >= 0; --up) {
      auto& row = insertion[up];
      auto at = std::lower_bound(row.begin(), row.end(), y);
      if (at != row.end() && *at == y) {
        // Reverse of the special case: y-1 and y both present.
        y = y - 1;
        continue;
      }
      if (at == row.begin()) throw MalformedTableau("reverse insertion left the staircase");
      std::swap(*(at - 1), y);
    }
    word.letters[m - 1] = y;
  }
  return word;
}

ReducedWord sample_uniform_word(int n, CounterStream& rng) {
  if (n < 2) return ReducedWord{n, {}};
  return tableau_to_word(sample_tableau(n, rng));
}

}  // namespace sylvester
