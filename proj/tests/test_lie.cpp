#include "ctoda/lie.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace ctoda;

namespace {
std::set<std::pair<int, int>> edges(std::initializer_list<std::pair<int, int>> e) { return {e.begin(), e.end()}; }
}  // namespace

TEST(Cartan, SimplyLacedA2) {
  auto c = cartan(Family::A, 2);
  EXPECT_EQ(c.C, (std::vector<std::vector<int>>{{2, -1}, {-1, 2}}));
  EXPECT_EQ(c.d, (std::vector<int>{1, 1}));
}

TEST(Cartan, C2MatchesAmalgamatedBlock) {
  auto c = cartan(Family::C, 2);
  EXPECT_EQ(c.C, (std::vector<std::vector<int>>{{2, -2}, {-1, 2}}));
  EXPECT_EQ(c.d, (std::vector<int>{1, 2}));
}

TEST(Cartan, BLongRootsCarryTwo) {
  // alpha_1 long, alpha_2 short in B2
  auto c = cartan(Family::B, 2);
  EXPECT_EQ(c.C, (std::vector<std::vector<int>>{{2, -1}, {-2, 2}}));
  EXPECT_EQ(c.d, (std::vector<int>{2, 1}));
}

TEST(Cartan, SymmetrizableForAllFamilies) {
  for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E6, Family::E7, Family::E8, Family::F4,
                   Family::G2}) {
    int hi = is_classical(f) ? 7 : min_rank(f);
    for (int r = min_rank(f); r <= hi; ++r) {
      auto c = cartan(f, r);
      for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= r; ++j) EXPECT_EQ(c.dd(i) * c(i, j), c.dd(j) * c(j, i)) << family_name(f) << r;
    }
  }
}

TEST(Cartan, RejectsBadRanks) {
  EXPECT_THROW(cartan(Family::D, 2), param_error);
  EXPECT_THROW(cartan(Family::G2, 3), param_error);
  EXPECT_THROW(cartan(Family::A, 0), param_error);
  EXPECT_THROW(parse_family("H4"), param_error);
  EXPECT_EQ(parse_family("E7"), Family::E7);
}

TEST(Coxeter, OrientationOfA5Word) {
  auto c = cartan(Family::A, 5);
  auto o = orientation_from_coxeter({1, 4, 3, 2, 5}, c);
  EXPECT_EQ(o.edges, edges({{1, 2}, {3, 2}, {4, 3}, {4, 5}}));
}

TEST(Coxeter, WordOfD5Orientation) {
  auto c = cartan(Family::D, 5);
  DynkinOrientation o{c, edges({{1, 2}, {3, 2}, {4, 3}, {3, 5}})};
  EXPECT_EQ(coxeter_from_orientation(o), (Word{1, 4, 3, 2, 5}));
}

TEST(Coxeter, LinearAndReversedChains) {
  for (int r = 1; r <= 6; ++r) {
    auto c = cartan(Family::A, r);
    DynkinOrientation o{c, {}};
    for (int i = 1; i < r; ++i) o.edges.insert({i, i + 1});
    EXPECT_EQ(coxeter_from_orientation(o), standard_coxeter(r));
    Word rev = standard_coxeter(r);
    std::reverse(rev.begin(), rev.end());
    for (auto [a, b] : orientation_from_coxeter(rev, c).edges) EXPECT_GT(a, b);
  }
}

TEST(Coxeter, RoundTripOverAllWords) {
  for (Family f : {Family::A, Family::B, Family::C, Family::D})
    for (int r = min_rank(f); r <= 4; ++r) {
      auto c = cartan(f, r);
      Word w = standard_coxeter(r);
      do {
        auto o = orientation_from_coxeter(w, c);
        EXPECT_EQ(orientation_from_coxeter(coxeter_from_orientation(o), c), o);
        EXPECT_TRUE(same_coxeter_element(coxeter_from_orientation(o), w, c));
      } while (std::next_permutation(w.begin(), w.end()));
      EXPECT_EQ(all_coxeter_elements(c).size(), std::size_t(1) << dynkin_edges(c).size());
    }
}

TEST(Coxeter, SourcesAndSinks) {
  auto c = cartan(Family::A, 3);
  Word w{2, 1, 3};
  EXPECT_TRUE(is_source(w, 2, c));
  EXPECT_TRUE(is_sink(w, 1, c));
  EXPECT_EQ(move_to_front({1, 3, 2}, 3, c), (Word{3, 1, 2}));
  EXPECT_THROW(move_to_front(w, 1, c), param_error);
  EXPECT_THROW(move_to_back(w, 2, c), param_error);
}

TEST(DoubleWord, UnmixedAndPositions) {
  auto w = unmixed_word({1, 2}, {1, 2});
  EXPECT_EQ(w.entries, (std::vector<int>{-1, -2, 1, 2}));
  EXPECT_EQ(unmixed_word({1, 2}, {2, 1}).entries, (std::vector<int>{-1, -2, 2, 1}));
  EXPECT_EQ(w.first(1), 1);
  EXPECT_EQ(w.second(1), 3);
  EXPECT_EQ(w.first(2), 2);
  EXPECT_EQ(w.second(2), 4);
  EXPECT_EQ(w.eps(1), -1);
  EXPECT_TRUE(w.unmixed());
  DoubleReducedWord m{{1, -1, -2, 2}};
  EXPECT_FALSE(m.unmixed());
  EXPECT_EQ(m.eps(1), 1);
  EXPECT_EQ(m.eps(2), -1);
}

TEST(DoubleWord, ShufflesCount) {
  // C(2r, r) interleavings
  EXPECT_EQ(all_shuffles({1, 2}, {1, 2}).size(), 6u);
  EXPECT_EQ(all_shuffles({1, 2, 3}, {3, 2, 1}).size(), 20u);
  for (auto& w : all_shuffles({1, 2, 3}, {3, 2, 1})) {
    EXPECT_EQ(w.u(), (Word{1, 2, 3}));
    EXPECT_EQ(w.v(), (Word{3, 2, 1}));
  }
}
