#include "ctoda/chiprep.hpp"

#include <gtest/gtest.h>

using namespace ctoda;

namespace {
const std::vector<std::pair<Family, int>>& small_classical() {
  static const std::vector<std::pair<Family, int>> v{{Family::A, 1}, {Family::A, 2}, {Family::A, 4}, {Family::B, 2},
                                                     {Family::B, 3}, {Family::B, 4}, {Family::C, 2}, {Family::C, 3},
                                                     {Family::C, 4}, {Family::D, 3}, {Family::D, 4}, {Family::D, 5}};
  return v;
}
QSqrt2 sqrt2(const Q& a) { return QSqrt2(Q(0), a); }
}  // namespace

TEST(Chips, DefiningDimensions) {
  EXPECT_EQ(defining_dim(Family::A, 3), 4);
  EXPECT_EQ(defining_dim(Family::B, 3), 7);
  EXPECT_EQ(defining_dim(Family::C, 3), 6);
  EXPECT_EQ(defining_dim(Family::D, 4), 8);
}

TEST(Chips, TypeAUnipotent) {
  auto E = chip_E(Family::A, 3, 2, QSqrt2(qfrac(3, 5)));
  GMatrix want = GMatrix::identity(4);
  want(1, 2) = QSqrt2(qfrac(3, 5));
  EXPECT_EQ(E, want);
  EXPECT_EQ(chip_E(Family::A, 3, -2, QSqrt2(qfrac(3, 5))), want.transpose());
}

TEST(Chips, TypeBShortRootChip) {
  int r = 3;
  Q a = qfrac(2, 7);
  auto E = chip_E(Family::B, r, r, QSqrt2(a));
  EXPECT_EQ(E(r - 1, r), sqrt2(a));
  EXPECT_EQ(E(r, r + 1), sqrt2(a));
  EXPECT_EQ(E(r - 1, r + 1), QSqrt2(a * a));
}

TEST(Chips, OneParameterSubgroups) {
  RatGen rg(3);
  for (auto [f, r] : small_classical()) {
    auto g = generators(f, r);
    for (int i = 1; i <= r; ++i)
      for (int s : {1, -1}) {
        Q a = rg(), b = rg();
        EXPECT_EQ(chip_E(g, s * i, QSqrt2(a)) * chip_E(g, s * i, QSqrt2(b)), chip_E(g, s * i, QSqrt2(a + b)));
        EXPECT_TRUE(preserves_form(f, r, chip_E(g, s * i, QSqrt2(a))));
      }
  }
}

TEST(Chips, CartanRelations) {
  for (auto [f, r] : small_classical()) {
    auto g = generators(f, r);
    auto c = cartan(f, r);
    for (int i = 1; i <= r; ++i) {
      GMatrix h(g.dim);
      for (int p = 0; p < g.dim; ++p) h(p, p) = QSqrt2(Q(g.h[i][p]));
      EXPECT_EQ(g.pos[i] * g.neg[i] - g.neg[i] * g.pos[i], h);
      for (int j = 1; j <= r; ++j) {
        EXPECT_EQ(h * g.pos[j] - g.pos[j] * h, g.pos[j] * QSqrt2(Q(c(i, j))));
        if (i != j) EXPECT_EQ(g.pos[i] * g.neg[j], g.neg[j] * g.pos[i]);
      }
    }
  }
}

TEST(Chips, TorusDiagonals) {
  for (auto [f, r] : small_classical()) EXPECT_EQ(chip_D(f, r, std::vector<Q>(r, Q(1))), GMatrix::identity(defining_dim(f, r)));
  Q t1 = 3, t2 = 5;
  auto D = chip_D(Family::B, 2, {t1, t2});
  std::vector<Q> want{t1, t2 * t2 / t1, 1, t1 / (t2 * t2), 1 / t1};
  for (int p = 0; p < 5; ++p) EXPECT_EQ(D(p, p), QSqrt2(want[p]));
  std::vector<Q> t{2, 3, 5, 7};
  auto D4 = chip_D(Family::D, 4, t);
  std::vector<Q> want4{t[0], t[1] / t[0], t[2] * t[3] / t[1], t[3] / t[2], t[2] / t[3], t[1] / (t[2] * t[3]), t[0] / t[1], 1 / t[0]};
  for (int p = 0; p < 8; ++p) EXPECT_EQ(D4(p, p), QSqrt2(want4[p])) << p;
}

TEST(Chips, TorusCommutation) {
  RatGen rg(11);
  for (auto [f, r] : small_classical()) {
    auto g = generators(f, r);
    auto c = cartan(f, r);
    for (int i = 1; i <= r; ++i)
      for (int k = 1; k <= r; ++k)
        for (int s : {1, -1}) {
          Q t = rg(), a = rg();
          EXPECT_EQ(coroot(g, i, t) * chip_E(g, s * k, QSqrt2(a)),
                    chip_E(g, s * k, QSqrt2(a * qpow(t, s * c(i, k)))) * coroot(g, i, t));
        }
  }
}

TEST(Element, UnipotentWhenTorusTrivial) {
  auto g = generators(Family::C, 3);
  FactorizationPoint fp{{2, 3, 5}, {1, 1, 1}};
  auto w = unmixed_word({1, 2, 3}, {2, 1, 3});
  GMatrix m = GMatrix::identity(g.dim);
  for (int x : w.entries) m = m * chip_E(g, x, QSqrt2(x < 0 ? Q(1) : fp.c[x - 1]));
  EXPECT_EQ(element(g, w, fp), m);
}

TEST(Element, UnimodularAndFormPreserving) {
  RatGen rg(2);
  for (auto [f, r] : small_classical()) {
    auto fp = random_point(r, rg);
    auto w = standard_coxeter(r);
    auto m = element(f, r, unmixed_word(w, w), fp);
    auto fc = char_poly_coeffs(m);
    EXPECT_EQ(fc.back(), QSqrt2(1));
    EXPECT_EQ(fc.front(), QSqrt2(1));
    EXPECT_TRUE(preserves_form(f, r, m));
  }
}

TEST(Element, RejectsMixedWordsAndBadPoints) {
  auto g = generators(Family::A, 2);
  FactorizationPoint fp{{1, 1}, {1, 1}};
  EXPECT_THROW(element(g, DoubleReducedWord{{1, -1, -2, 2}}, fp), param_error);
  EXPECT_THROW(check_positive({{1, -1}, {1, 1}}, 2), param_error);
}

TEST(Hamiltonians, TypeAIsTruncation) {
  std::vector<Q> f{1, 7, 9, 2, 1};
  auto H = hamiltonian_H_from_f(Family::A, 3, f);
  EXPECT_EQ(H, (std::vector<Q>{7, 9, 2}));
}

TEST(Hamiltonians, TypeCEvenIndexSums) {
  Q a = qfrac(2, 3), b = 5;
  std::vector<Q> f{1, a, b, a, 1};
  auto H = hamiltonian_H_from_f(Family::C, 2, f);
  EXPECT_EQ(H[1], 1 + b);
}

TEST(Spin, UnipotentTrace) {
  for (int r = 2; r <= 6; ++r) {
    FactorizationPoint fp{std::vector<Q>(r, Q(0)), std::vector<Q>(r, Q(1))};
    EXPECT_EQ(spin_element(spin_basis(Family::B, r, SpinRep::spin), fp).trace(), Q(1 << r));
  }
  for (int r = 3; r <= 6; ++r)
    for (auto which : spin_reps(Family::D)) {
      FactorizationPoint fp{std::vector<Q>(r, Q(0)), std::vector<Q>(r, Q(1))};
      EXPECT_EQ(spin_element(spin_basis(Family::D, r, which), fp).trace(), Q(1 << (r - 1)));
    }
}

TEST(Spin, PhiMovesLastIndex) {
  auto sb = spin_basis(Family::B, 3, SpinRep::spin);
  std::vector<int> I{1, 2, 3};
  ASSERT_TRUE(sb.in_plus(I, 3));
  EXPECT_EQ(sb.phi(I, 3), (std::vector<int>{1, 2, 5}));
}

TEST(Spin, TraceFormulaMatchesMatrices) {
  RatGen rg(4);
  for (Family f : {Family::B, Family::D})
    for (int r = min_rank(f); r <= 7; ++r)
      for (auto which : spin_reps(f)) {
        auto sb = spin_basis(f, r, which);
        for (int n = 0; n < 3; ++n) {
          auto fp = random_point(r, rg);
          EXPECT_EQ(spin_trace_formula(sb, fp), spin_element(sb, fp).trace()) << family_name(f) << r;
        }
      }
}
