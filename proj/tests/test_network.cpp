#include "ctoda/network.hpp"

#include <gtest/gtest.h>

using namespace ctoda;

namespace {
int count(const std::string& s, const std::string& needle) {
  int n = 0;
  for (std::size_t p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
  return n;
}
}  // namespace

TEST(Network, FigureTopologies) {
  FactorizationPoint one3{{1, 1, 1}, {1, 1, 1}};
  auto sl4 = build_network(Family::A, 3, DoubleReducedWord{{-1, -2, -3, 1, 3, 2}}, one3);
  EXPECT_EQ(sl4.vertices.size(), 20u);
  EXPECT_EQ(sl4.edges.size(), 22u);
  FactorizationPoint one2{{1, 1}, {1, 1}};
  auto so5 = build_cc_network(Family::B, 2, one2);
  EXPECT_EQ(so5.vertices.size(), 26u);
  EXPECT_EQ(so5.edges.size(), 31u);
  EXPECT_EQ(so5.levels, 5);
}

TEST(Network, PathSumsEqualChipProducts) {
  RatGen rg(21);
  for (Family f : {Family::A, Family::B, Family::C, Family::D})
    for (int r = min_rank(f); r <= 4; ++r) {
      auto c = cartan(f, r);
      auto cox = all_coxeter_elements(c);
      for (int n = 0; n < 3; ++n) {
        auto fp = random_point(r, rg);
        auto w = unmixed_word(cox[n % cox.size()], cox[(n * 7 + 1) % cox.size()]);
        EXPECT_EQ(path_sum_matrix(build_network(f, r, w, fp)), element(f, r, w, fp)) << family_name(f) << r;
      }
    }
}

TEST(Network, SO5AdmissibleTriplesAndWeights) {
  Q t1 = 3, t2 = 5, c1 = 7, c2 = 11;
  auto net = build_cc_network(Family::B, 2, {{c1, c2}, {t1, t2}});
  auto tr = admissible_triples(net);
  EXPECT_EQ(tr.count({5, 1, 1}), 0u);
  ASSERT_EQ(tr.count({3, 2, 4}), 1u);
  EXPECT_EQ(path_weight(net, {3, 2, 4}), QSqrt2(Q(0), c2 * c2 * t2 * t2 / t1));
  auto pairs = admissible_pairs(net);
  ASSERT_EQ(pairs.count({5, 4}), 1u);
  EXPECT_EQ(pairs.at({5, 4}).weight, QSqrt2(c1 * t1 / (t2 * t2)));
}

TEST(Network, TypeAPairs) {
  RatGen rg(8);
  for (int r = 1; r <= 5; ++r) {
    auto fp = random_point(r, rg);
    auto pairs = admissible_pairs(build_cc_network(Family::A, r, fp));
    std::set<std::pair<int, int>> want, got;
    for (int i = 1; i <= r + 1; ++i) want.insert({i, i});
    for (int j = 1; j <= r; ++j) want.insert({j + 1, j});
    for (auto& [k, p] : pairs) got.insert(k);
    EXPECT_EQ(got, want);
    for (int i = 1; i <= r + 1; ++i) {
      Q num = i <= r ? fp.t[i - 1] : Q(1), den = i > 1 ? fp.t[i - 2] : Q(1);
      EXPECT_EQ(pairs.at({i, i}).weight, QSqrt2(num / den));
    }
  }
}

TEST(Network, TypeDPairsIncludeHubPaths) {
  for (int r = 3; r <= 5; ++r) {
    auto pairs = admissible_pairs(build_cc_network(Family::D, r, {std::vector<Q>(r, Q(1)), std::vector<Q>(r, Q(1))}));
    EXPECT_EQ(pairs.count({r + 1, r - 1}), 1u);
    EXPECT_EQ(pairs.count({r + 2, r}), 1u);
    EXPECT_EQ(pairs.count({r + 2, r - 1}), 1u);
  }
}

TEST(Network, LgvEqualsCharPoly) {
  RatGen rg(13);
  for (Family f : {Family::A, Family::B, Family::C, Family::D})
    for (int r = min_rank(f); r <= 4; ++r) {
      auto fp = random_point(r, rg);
      auto w = standard_coxeter(r);
      auto fc = char_poly_coeffs(element(f, r, unmixed_word(w, w), fp));
      auto net = build_cc_network(f, r, fp);
      auto paths = all_paths(net);
      for (int j = 0; j <= net.levels; ++j) EXPECT_EQ(lgv_f(net, j, paths), fc[j]) << family_name(f) << r << " j=" << j;
      // first coefficient is the sum over admissible pairs
      QSqrt2 s(0);
      for (auto& [k, p] : admissible_pairs(net)) s += p.weight;
      EXPECT_EQ(s, fc[1]);
    }
}

TEST(Network, NoMixedFamiliesInTypesAC) {
  RatGen rg(17);
  for (Family f : {Family::A, Family::C})
    for (int r = min_rank(f); r <= 4; ++r) {
      auto net = build_cc_network(f, r, random_point(r, rg));
      auto paths = all_paths(net);
      int mixed = 0;
      for (int j = 1; j <= net.levels; ++j)
        for (auto& I : subsets(net.levels, j))
          for_each_family(net, paths, I, [&](const PathFamily& fam) { mixed += is_mixed(fam); });
      EXPECT_EQ(mixed, 0) << family_name(f) << r;
    }
}

TEST(Network, DotOutput) {
  FactorizationPoint one{{1, 1}, {1, 1}};
  auto net = build_cc_network(Family::B, 2, one);
  auto dot = emit_dot(net);
  EXPECT_EQ(count(dot, "fillcolor="), 26);
  EXPECT_EQ(count(dot, " -> "), 31);
  EXPECT_EQ(dot, emit_dot(build_cc_network(Family::B, 2, one)));
  EXPECT_THROW(emit_dot(ChipNetwork{}), param_error);
}
