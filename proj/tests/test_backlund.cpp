#include "ctoda/backlund.hpp"
#include "ctoda/qsystem.hpp"

#include <gtest/gtest.h>

using namespace ctoda;

namespace {
std::vector<std::pair<Family, int>> classical_upto(int hi) {
  std::vector<std::pair<Family, int>> v;
  for (Family f : {Family::A, Family::B, Family::C, Family::D})
    for (int r = min_rank(f); r <= hi; ++r) v.push_back({f, r});
  return v;
}
bool same(const FactorizationPoint& a, const FactorizationPoint& b) { return a.t == b.t && a.c == b.c; }

// every valid move from every Coxeter pair
template <class F>
void each_move(const CartanData& c, F&& visit) {
  auto cox = all_coxeter_elements(c);
  for (auto& u : cox)
    for (auto& v : cox)
      for (int k = 1; k <= c.rank; ++k)
        for (auto which : {MoveCase::source_u, MoveCase::sink_v})
          if (can_flip({u, v}, k, (int)which, c)) visit(make_move({u, v}, k, which, c));
}
}  // namespace

TEST(Rho, A1UnitPoint) {
  auto c = cartan(Family::A, 1);
  auto m = make_move({{1}, {1}}, 1, MoveCase::source_u, c);
  auto out = rho_tau(m, {{1}, {1}}, c);
  EXPECT_EQ(out.t[0], 2);
  EXPECT_EQ(out.c[0], qfrac(1, 4));
}

TEST(Rho, MoveTargets) {
  auto c = cartan(Family::A, 3);
  auto m = make_move({{2, 1, 3}, {1, 2, 3}}, 2, MoveCase::source_u, c);
  EXPECT_EQ(m.source.u.front(), 2);
  EXPECT_EQ(m.target.u, (Word{1, 3, 2}));
  EXPECT_EQ(m.target.v, m.source.v);
  EXPECT_THROW(make_move({{2, 1, 3}, {1, 2, 3}}, 3, MoveCase::source_u, c), param_error);
  auto n = make_move({{1, 2, 3}, {1, 2, 3}}, 3, MoveCase::sink_v, c);
  EXPECT_EQ(n.target.v, (Word{3, 1, 2}));
  EXPECT_THROW(make_move({{1, 2, 3}, {1, 2, 3}}, 2, MoveCase::source_u, c), param_error);
}

TEST(Rho, InverseUndoesForward) {
  RatGen rg(1);
  for (auto [f, r] : classical_upto(4)) {
    auto c = cartan(f, r);
    each_move(c, [&](const BDMove& m) {
      auto fp = random_point(r, rg);
      EXPECT_TRUE(same(rho_tau(inverse_move(m), rho_tau(m, fp, c), c), fp)) << m.name();
    });
  }
}

TEST(Rho, ClosedFormMatchesRefactorization) {
  RatGen rg(2);
  for (auto [f, r] : classical_upto(4)) {
    auto c = cartan(f, r);
    each_move(c, [&](const BDMove& m) {
      auto fp = random_point(r, rg);
      EXPECT_TRUE(same(rho_tau(m, fp, c), rho_tau_refactor(m, fp, c))) << family_name(f) << r << " " << m.name();
    });
  }
  for (Family f : {Family::G2, Family::F4}) {
    auto c = cartan(f, min_rank(f));
    each_move(c, [&](const BDMove& m) {
      auto fp = random_point(c.rank, rg);
      EXPECT_TRUE(same(rho_tau(m, fp, c), rho_tau_refactor(m, fp, c))) << family_name(f) << " " << m.name();
    });
  }
}

TEST(Rho, PreservesTraces) {
  RatGen rg(3);
  for (auto [f, r] : classical_upto(3)) {
    auto c = cartan(f, r);
    each_move(c, [&](const BDMove& m) {
      auto fp = random_point(r, rg);
      auto rows = verify_preservation(m, fp, f, r);
      EXPECT_TRUE(all_equal(rows)) << family_name(f) << r << " " << m.name();
      EXPECT_EQ((int)rows.size(), defining_dim(f, r) + 1 + (int)spin_reps(f).size());
    });
  }
}

TEST(Conjugation, FullCycleAndInverse) {
  RatGen rg(4);
  for (auto [f, r] : classical_upto(3)) {
    auto c = cartan(f, r);
    auto cox = all_coxeter_elements(c);
    for (auto& w : all_shuffles(cox.front(), cox.back())) {
      CellPoint cp{w, rg.vec(r), rg.vec(r)};
      auto x = conjugation_move(cp, Direction::forward, c);
      EXPECT_EQ(x.t, cp.t);
      EXPECT_EQ(conjugation_move(x, Direction::inverse, c), cp);
      for (int k = 1; k < 2 * r; ++k) x = conjugation_move(x, Direction::forward, c);
      EXPECT_EQ(x, cp);
    }
  }
}

TEST(Conjugation, MatchesMatrixConjugation) {
  RatGen rg(5);
  for (auto [f, r] : classical_upto(3)) {
    auto c = cartan(f, r);
    auto g = generators(f, r);
    auto cox = all_coxeter_elements(c);
    for (auto& w : all_shuffles(cox.back(), cox.front())) {
      CellPoint cp{w, rg.vec(r), rg.vec(r)};
      auto a = cell_letter_params(cp);
      int i1 = w.entries[0];
      // D E_{i1}(a) Y = E_{i1}(b) D Y  ~  D Y E_{i1}(b)
      std::vector<Q> t = cp.t;
      Q b = a[0];
      for (int i = 1; i <= r; ++i) b *= qpow(t[i - 1], (i1 > 0 ? 1 : -1) * c(i, std::abs(i1)));
      GMatrix X = chip_D(g, t);
      for (int p = 1; p < w.size(); ++p) X = X * chip_E(g, w.entries[p], QSqrt2(a[p]));
      X = X * chip_E(g, i1, QSqrt2(b));
      EXPECT_TRUE(diagonally_conjugate(X, cell_matrix(g, conjugation_move(cp, Direction::forward, c))));
    }
  }
}

TEST(LocalSwap, MatchesMatrices) {
  RatGen rg(6);
  for (auto [f, r] : classical_upto(3)) {
    auto c = cartan(f, r);
    auto g = generators(f, r);
    auto cox = all_coxeter_elements(c);
    for (auto& w : all_shuffles(cox.front(), cox.back())) {
      CellPoint cp{w, rg.vec(r), rg.vec(r)};
      for (int l = 1; l < w.size(); ++l) {
        if (w.entries[l - 1] != -w.entries[l]) continue;
        auto s = refactor_swap(cp, l, c);
        EXPECT_TRUE(diagonally_conjugate(cell_matrix(g, cp), cell_matrix(g, s)));
        EXPECT_EQ(refactor_swap(s, l, c), cp);
      }
    }
  }
  CellPoint bad{unmixed_word({1, 2}, {1, 2}), {1, 1}, {1, 1}};
  EXPECT_THROW(refactor_swap(bad, 1, cartan(Family::A, 2)), param_error);
}

TEST(LocalSwap, RefactorizationIdentity) {
  RatGen rg(7);
  for (auto [f, r] : classical_upto(5)) {
    auto g = generators(f, r);
    for (int i = 1; i <= r; ++i) EXPECT_TRUE(refactorization_identity(g, i, rg(), rg()));
  }
}

TEST(CellPoint, UnmixedRoundTrip) {
  RatGen rg(8);
  for (auto [f, r] : classical_upto(4)) {
    auto c = cartan(f, r);
    auto g = generators(f, r);
    auto w = unmixed_word(standard_coxeter(r), standard_coxeter(r));
    auto fp = random_point(r, rg);
    auto cp = cell_from_unmixed(w, fp, c);
    EXPECT_TRUE(diagonally_conjugate(cell_matrix(g, cp), element(g, w, fp)));
    EXPECT_TRUE(same(unmixed_from_cell(cp, c), fp));
  }
}

TEST(FactorizationMap, RoutesAgreeAndFollowQSystem) {
  RatGen rg(9);
  std::vector<std::pair<Family, int>> cases = classical_upto(5);
  cases.push_back({Family::G2, 2});
  cases.push_back({Family::F4, 4});
  cases.push_back({Family::E6, 6});
  for (auto [f, r] : cases) {
    auto c = cartan(f, r);
    auto s = random_state(r, rg);
    auto fp = factorization_from_state(s, c);
    auto a = factorization_map(fp, c);
    EXPECT_TRUE(same(a, factorization_map_refactor(fp, c))) << family_name(f) << r;
    EXPECT_TRUE(same(a, factorization_from_state(qsystem_step(s, c), c))) << family_name(f) << r;
    EXPECT_FALSE(same(a, fp));
    for (auto& w : all_coxeter_elements(c)) {
      auto p = random_point(r, rg);
      EXPECT_TRUE(same(factorization_map(p, c, w), factorization_map_refactor(p, c, w)));
    }
  }
}

TEST(FactorizationMap, PreservesTraces) {
  RatGen rg(10);
  for (auto [f, r] : classical_upto(4)) {
    auto fp = random_point(r, rg);
    EXPECT_TRUE(all_equal(verify_factorization_map(fp, f, r))) << family_name(f) << r;
  }
}

TEST(FactorList, NormalForm) {
  auto c = cartan(Family::A, 1);
  // E_1(2) E_{-1}(3) = 7^{h} E_{-1}(21) E_1(2/7), then the torus passes E_{-1}
  auto fs = normal_form({fE(1, 2), fE(-1, 3)}, c);
  ASSERT_EQ(fs.size(), 3u);
  EXPECT_EQ(fs[0].kind, Factor::E);
  EXPECT_EQ(fs[0].idx, -1);
  EXPECT_EQ(fs[0].a, qfrac(3, 7));
  EXPECT_EQ(fs[1].kind, Factor::T);
  EXPECT_EQ(fs[1].t[0], 7);
  EXPECT_EQ(fs[2].idx, 1);
  EXPECT_EQ(fs[2].a, qfrac(2, 7));
}
