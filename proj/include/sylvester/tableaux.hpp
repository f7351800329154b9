#pragma once

// Staircase standard Young tableaux and the Edelman-Greene correspondence
// with reduced words of w0. This is the uniform sampler over R(w0).

#include <vector>

#include "sylvester/core.hpp"
#include "sylvester/random.hpp"

namespace sylvester {

using RaggedArray = std::vector<std::vector<int>>;

/// A filling of the staircase shape (n-1, n-2, ..., 1); row r has n-1-r cells.
struct StaircaseTableau {
  int n = 0;
  RaggedArray rows;

  friend bool operator==(const StaircaseTableau&, const StaircaseTableau&) = default;
  friend auto operator<=>(const StaircaseTableau&, const StaircaseTableau&) = default;
};

/// Shape check plus strict increase along rows and down columns, with the
/// entries forming {1..n(n-1)/2}.
bool is_standard(const StaircaseTableau& t);

/// arm + leg + 1 for every cell of the staircase.
RaggedArray hook_lengths(int n);

/// Uniform staircase SYT by the Greene-Nijenhuis-Wilf hook walk.
StaircaseTableau sample_tableau(int n, CounterStream& rng);

/// Edelman-Greene recording tableau. Throws NotFullWord.
StaircaseTableau word_to_tableau(const ReducedWord& word);

/// Inverse of word_to_tableau by reverse Edelman-Greene insertion against
/// the fixed staircase insertion tableau. Throws MalformedTableau.
ReducedWord tableau_to_word(const StaircaseTableau& t);

/// tableau_to_word(sample_tableau(n, rng)).
ReducedWord sample_uniform_word(int n, CounterStream& rng);

}  // namespace sylvester
