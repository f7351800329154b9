#include <gtest/gtest.h>

#include <map>
#include <set>

#include "oracles.hpp"
#include "sylvester/errors.hpp"
#include "sylvester/restriction.hpp"

using namespace sylvester;

namespace {

const ReducedWord kStaircase5{5, {1, 2, 1, 3, 2, 1, 4, 3, 2, 1}};

ReducedWord w4(std::vector<int> letters) { return {4, std::move(letters)}; }

// n + 1 - a for every a in the subset, sorted.
WireSubset mirror(const WireSubset& s) {
  std::vector<int> values;
  for (int v : s.values()) values.push_back(s.n() + 1 - v);
  std::sort(values.begin(), values.end());
  return WireSubset(s.n(), values);
}

}  // namespace

TEST(WireSubset, Validation) {
  EXPECT_NO_THROW(WireSubset(5, {1, 3, 4, 5}));
  EXPECT_THROW(WireSubset(4, {1, 2, 2, 4}), InvalidSubset);
  EXPECT_THROW(WireSubset(4, {2, 1}), InvalidSubset);
  EXPECT_THROW(WireSubset(4, {1, 5}), InvalidSubset);
  EXPECT_THROW(WireSubset(4, {1}), InvalidSubset);
  EXPECT_THROW(WireSubset::parse(4, "1,x"), InvalidSubset);
  EXPECT_EQ(WireSubset::parse(6, "2,4,6").size(), 3);
}

TEST(Restrict, Examples) {
  EXPECT_EQ(restrict(w4({2, 3, 2, 1, 2, 3}), WireSubset(4, {1, 2, 3, 4})), w4({2, 3, 2, 1, 2, 3}));
  EXPECT_EQ(restrict(kStaircase5, WireSubset(5, {1, 2, 3, 4})), w4({1, 2, 1, 3, 2, 1}));
  EXPECT_EQ(restrict(kStaircase5, WireSubset(5, {1, 3, 4, 5})), w4({1, 2, 1, 3, 2, 1}));
}

TEST(Restrict, Errors) {
  EXPECT_THROW(restrict(ReducedWord{5, {1, 2, 1}}, WireSubset(5, {1, 2, 3, 4})), NotFullWord);
  EXPECT_THROW(restrict(kStaircase5, WireSubset(4, {1, 2, 3, 4})), InvalidSubset);
}

TEST(Restrict, AgreesWithLocalOrderOracleExhaustively) {
  for (const auto& word : enumerate_words(5)) {
    for (int k = 2; k <= 5; ++k) {
      for (const auto& s : all_subsets(5, k)) {
        const auto v = restrict(word, s);
        ASSERT_TRUE(is_reduced_word_for_long_word(v));
        ASSERT_EQ(v, oracle::local_order_restrict(word, {s.values().begin(), s.values().end()}));
      }
    }
  }
}

TEST(Restrict, RandomWordsAtLargerN) {
  // Random full words via random ascent walks; the walk need not be uniform.
  for (std::uint64_t t = 0; t < 300; ++t) {
    CounterStream rng(4, t);
    const int n = 6 + static_cast<int>(rng.below(5));
    Permutation p(n);
    ReducedWord word{n, {}};
    while (static_cast<int>(word.size()) < long_word_length(n)) {
      std::vector<int> ascents;
      for (int i = 1; i < n; ++i)
        if (p.has_ascent(i)) ascents.push_back(i);
      const int letter = ascents[rng.below(ascents.size())];
      p.apply(letter);
      word.letters.push_back(letter);
    }
    const auto subsets = all_subsets(n, 4);
    const auto& s = subsets[rng.below(subsets.size())];
    const auto v = restrict(word, s);
    ASSERT_TRUE(is_reduced_word_for_long_word(v));
    ASSERT_EQ(v, oracle::local_order_restrict(word, {s.values().begin(), s.values().end()}));
  }
}

TEST(Classify, FixtureMatchesOrbitClosure) {
  const auto orbits = oracle::quad_orbits();
  ASSERT_EQ(orbits.size(), 4u);
  std::set<QuadClass> labels;
  for (const auto& orbit : orbits) {
    ASSERT_EQ(orbit.size(), 4u);
    const QuadClass c = classify(w4(*orbit.begin()));
    labels.insert(c);
    std::vector<ReducedWord> members;
    for (const auto& v : orbit) {
      EXPECT_EQ(classify(w4(v)), c);
      members.push_back(w4(v));
    }
    EXPECT_EQ(class_members(c), members);
  }
  EXPECT_EQ(labels.size(), 4u);
}

TEST(Classify, CanonicalLabels) {
  for (const auto& v : oracle::reentrant_words()) EXPECT_EQ(classify(w4(v)), QuadClass::Reentrant);
  EXPECT_EQ(classify(w4({1, 2, 3, 2, 1, 2})), QuadClass::Reentrant);
  EXPECT_EQ(classify(w4({1, 2, 1, 3, 2, 1})), QuadClass::C1);
  EXPECT_EQ(classify(w4({1, 3, 2, 1, 3, 2})), QuadClass::C2);
  EXPECT_EQ(classify(w4({1, 3, 2, 3, 1, 2})), QuadClass::C3);
  // Convex orbits are ordered by their smallest member.
  EXPECT_LT(class_members(QuadClass::C1).front(), class_members(QuadClass::C2).front());
  EXPECT_LT(class_members(QuadClass::C2).front(), class_members(QuadClass::C3).front());
}

TEST(Classify, ReversalAndFlipInvariant) {
  for (const auto& v : enumerate_words(4)) {
    EXPECT_EQ(classify(reversal(v)), classify(v));
    EXPECT_EQ(classify(flip(v)), classify(v));
  }
}

TEST(Classify, Errors) {
  EXPECT_THROW(classify(w4({1, 1, 2, 2, 3, 3})), NotFullWord);
  EXPECT_THROW(classify(kStaircase5), NotFullWord);
}

TEST(IsReentrant, Examples) {
  EXPECT_TRUE(is_reentrant(w4({2, 3, 2, 1, 2, 3})));
  EXPECT_FALSE(is_reentrant(w4({1, 2, 1, 3, 2, 1})));
  EXPECT_TRUE(is_reentrant(w4({2, 1, 2, 3, 2, 1})));
  int count = 0;
  for (const auto& v : enumerate_words(4)) {
    EXPECT_EQ(is_reentrant(v), oracle::reentrant_words().count(v.letters) == 1);
    count += is_reentrant(v) ? 1 : 0;
  }
  EXPECT_EQ(count, 4);
}

TEST(ReentrantSubsetCount, Examples) {
  EXPECT_EQ(reentrant_subset_count(kStaircase5), 0);
  for (const auto& v : enumerate_words(4)) EXPECT_EQ(reentrant_subset_count(v), is_reentrant(v) ? 1 : 0);
}

TEST(ReentrantSubsetCount, HistogramAtN5) {
  std::map<int, int> histogram;
  for (const auto& word : enumerate_words(5)) ++histogram[reentrant_subset_count(word)];
  EXPECT_EQ(histogram, (std::map<int, int>{{0, 328}, {2, 400}, {4, 40}}));
}

TEST(Symmetry, CountInvariantUnderReversalAndFlip) {
  for (const auto& word : enumerate_words(5)) {
    const int c = reentrant_subset_count(word);
    EXPECT_EQ(reentrant_subset_count(reversal(word)), c);
    EXPECT_EQ(reentrant_subset_count(flip(word)), c);
  }
}

TEST(Symmetry, RestrictionEquivariance) {
  for (const auto& word : enumerate_words(5)) {
    for (int k = 2; k <= 5; ++k) {
      for (const auto& s : all_subsets(5, k)) {
        // Both maps relabel wire a as n + 1 - a.
        ASSERT_EQ(restrict(reversal(word), mirror(s)), reversal(restrict(word, s)));
        ASSERT_EQ(restrict(flip(word), mirror(s)), flip(restrict(word, s)));
      }
    }
  }
}

TEST(Symmetry, ReversalDoesNotFixTheSubset) {
  // Reading right to left, the wire starting at a is the one that ended at a.
  const ReducedWord w{5, {1, 2, 1, 3, 2, 4, 1, 3, 2, 1}};
  const WireSubset s(5, {1, 2, 3, 5});
  EXPECT_EQ(reversal(restrict(w, s)), w4({1, 2, 3, 1, 2, 1}));
  EXPECT_EQ(restrict(reversal(w), s), w4({1, 2, 1, 3, 2, 1}));
  EXPECT_EQ(restrict(reversal(w), mirror(s)), reversal(restrict(w, s)));
}
