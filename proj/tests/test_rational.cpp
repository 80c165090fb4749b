#include "ctoda/matrix.hpp"
#include "ctoda/qsqrt2.hpp"
#include "ctoda/rational.hpp"

#include <gtest/gtest.h>

using namespace ctoda;

TEST(Rational, PqRoundTrip) {
  EXPECT_EQ(to_pq(Q(3)), "3/1");
  EXPECT_EQ(to_pq(qfrac(-6, 4)), "-3/2");
  for (auto s : {"1/1", "-7/3", "0/1", "1000/999"}) EXPECT_EQ(to_pq(parse_q(s)), s);
  EXPECT_EQ(parse_q("4/6"), qfrac(2, 3));
  EXPECT_THROW(parse_q("1/0"), param_error);
  EXPECT_THROW(parse_q("abc"), param_error);
  EXPECT_THROW(parse_q(""), param_error);
}

TEST(Rational, PowersAndRoots) {
  EXPECT_EQ(qpow(qfrac(2, 3), 3), qfrac(8, 27));
  EXPECT_EQ(qpow(qfrac(2, 3), -2), qfrac(9, 4));
  EXPECT_EQ(qpow(Q(5), 0), 1);
  EXPECT_EQ(exact_sqrt(qfrac(9, 49)).value(), qfrac(3, 7));
  EXPECT_FALSE(exact_sqrt(Q(2)).has_value());
  EXPECT_FALSE(exact_sqrt(Q(-4)).has_value());
}

TEST(Rational, GeneratorRange) {
  RatGen a(42), b(42);
  for (int i = 0; i < 500; ++i) {
    Q x = a();
    EXPECT_EQ(x, b());
    EXPECT_GT(x, 0);
    EXPECT_LE(x, 1000);
    EXPECT_GE(x, qfrac(1, 1000));
  }
}

TEST(QSqrt2, Arithmetic) {
  QSqrt2 r2(Q(0), Q(1));
  EXPECT_EQ(r2 * r2, QSqrt2(2));
  QSqrt2 x(qfrac(1, 2), qfrac(-3, 4));
  EXPECT_EQ(x * x.inverse(), QSqrt2(1));
  EXPECT_EQ(qpow(x, 3) * qpow(x, -3), QSqrt2(1));
  EXPECT_TRUE(QSqrt2(7).is_rational());
  EXPECT_FALSE(x.is_rational());
}

TEST(QSqrt2, StringRoundTrip) {
  for (auto x : {QSqrt2(qfrac(1, 2), qfrac(-3, 4)), QSqrt2(Q(0), Q(5)), QSqrt2(qfrac(-2, 7)), QSqrt2(Q(1), Q(1))})
    EXPECT_EQ(parse_qsqrt2(x.str()), x) << x.str();
  EXPECT_EQ(QSqrt2(qfrac(1, 2), qfrac(3, 4)).str(), "1/2+3/4√2");
}

TEST(Matrix, CharPolyOfIdentity) {
  auto f = char_poly_coeffs(QMatrix::identity(4));
  ASSERT_EQ(f.size(), 5u);
  std::vector<Q> want{1, 4, 6, 4, 1};
  EXPECT_EQ(f, want);
}

TEST(Matrix, CharPolyCoefficientsAreElementarySymmetric) {
  // upper triangular: f_j = e_j(diagonal)
  QMatrix m(3);
  m(0, 0) = 2, m(1, 1) = 3, m(2, 2) = 5, m(0, 2) = 7, m(0, 1) = -1;
  auto f = char_poly_coeffs(m);
  std::vector<Q> want{1, 10, 31, 30};
  EXPECT_EQ(f, want);
}

TEST(Matrix, InverseAndRank) {
  QMatrix m(3);
  m(0, 0) = 2, m(0, 1) = 1, m(1, 1) = 3, m(2, 0) = 1, m(2, 2) = 4;
  EXPECT_EQ(m * inverse(m), QMatrix::identity(3));
  EXPECT_EQ(rank(m), 3);
  QMatrix s(2);
  s(0, 0) = 1, s(0, 1) = 2, s(1, 0) = 2, s(1, 1) = 4;
  EXPECT_EQ(rank(s), 1);
}

TEST(Matrix, DiagonalConjugacy) {
  QMatrix m(3);
  m(0, 1) = 2, m(1, 2) = 3, m(2, 0) = 5, m(1, 1) = 7;
  QMatrix d(3);
  d(0, 0) = 2, d(1, 1) = qfrac(1, 3), d(2, 2) = 5;
  EXPECT_TRUE(diagonally_conjugate(m, QMatrix(d * m * inverse(d))));
  QMatrix n = m;
  n(1, 1) = 8;
  EXPECT_FALSE(diagonally_conjugate(m, n));
}
