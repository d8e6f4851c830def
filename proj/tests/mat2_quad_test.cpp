#include <gtest/gtest.h>

#include <random>

#include "bpj/mat2.hpp"
#include "bpj/quad.hpp"

using namespace bpj;

TEST(ParityTest, Values) {
  EXPECT_EQ(parity(0), 0);
  EXPECT_EQ(parity(1), 1);
  EXPECT_EQ(parity(8), 0);
  EXPECT_TRUE(Parity::of(7).odd());
  EXPECT_EQ(Parity::of(7).complement(), 0);
  EXPECT_THROW(parity(-1), std::domain_error);
}

TEST(Mat2Test, Determinants) {
  EXPECT_EQ(det(Mat2::identity()), Rational(1));
  EXPECT_EQ(det(Mat2{1, 1, 1, 0}), Rational(-1));
  EXPECT_EQ(det(Mat2{4, 2, 2, 2}), Rational(4));
}

TEST(Mat2Test, ScaleAndProduct) {
  EXPECT_EQ(Rational(2) * Mat2::identity(), (Mat2{2, 0, 0, 2}));
  const Mat2 f{1, 1, 1, 0};
  EXPECT_EQ(f * f, (Mat2{2, 1, 1, 1}));
  EXPECT_EQ(mat2_pow(f, 10), (Mat2{89, 55, 55, 34}));
  EXPECT_EQ(mat2_pow(f, 0), Mat2::identity());
}

TEST(Mat2Test, LinearCombination) {
  const Mat2 m = mat2_linear_combination({{2, Mat2::identity()}, {Rational(-1, 2), Mat2{2, 4, 6, 8}}});
  EXPECT_EQ(m, (Mat2{1, -2, -3, -2}));
}

TEST(Mat2Test, Str) { EXPECT_EQ((Mat2{Rational(3, 2), 1, Rational(1, 2), 0}).str(), "[[3/2,1],[1/2,0]]"); }

TEST(Mat2PropertyTest, DeterminantIsMultiplicative) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 5);
  auto r = [&] { return Rational(num(rng), den(rng)); };
  for (int i = 0; i < 500; ++i) {
    const Mat2 m{r(), r(), r(), r()};
    const Mat2 n{r(), r(), r(), r()};
    ASSERT_EQ(det(m * n), det(m) * det(n));
  }
}

TEST(QuadNumTest, RootSquaredIsDiscriminant) {
  const QuadNum s = QuadNum::root(7);
  EXPECT_EQ(quad_pow(s, 2), QuadNum::constant(7, 7));
}

TEST(QuadNumTest, ZeroPowerIsOne) {
  const QuadNum u(Rational(3, 4), -5, -3);
  EXPECT_EQ(quad_pow(u, 0), QuadNum::constant(1, -3));
}

TEST(QuadNumTest, AlphaSquaredAtUnitParams) {
  // a = b = 1: D = 9, alpha = 1/2 + (1/2) sqrt 9, alpha^2 = ab alpha + 2ab.
  const QuadNum alpha(Rational(1, 2), Rational(1, 2), 9);
  const QuadNum sq = quad_pow(alpha, 2);
  EXPECT_EQ(sq, alpha + Rational(2));
  // Formal value 5/2 + (1/2) sqrt 9 evaluates to 4.
  EXPECT_EQ(sq.rat() + sq.coeff() * 3, Rational(4));
}

TEST(QuadNumTest, MismatchedDiscriminantThrows) {
  const QuadNum u(1, 1, 2);
  const QuadNum v(1, 1, 3);
  EXPECT_THROW(u + v, DiscriminantMismatch);
  EXPECT_THROW(u * v, DiscriminantMismatch);
}

TEST(QuadNumTest, InverseAndZeroDivisors) {
  const QuadNum u(2, 1, 5);
  EXPECT_EQ(u * u.inverse(), QuadNum::constant(1, 5));
  // In Q[t]/(t^2 - 9), 3 - t has zero norm.
  EXPECT_THROW(QuadNum(3, -1, 9).inverse(), std::domain_error);
}

TEST(QuadNumPropertyTest, ConjugationIsMultiplicative) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> num(-12, 12);
  std::uniform_int_distribution<long> den(1, 6);
  auto r = [&] { return Rational(num(rng), den(rng)); };
  for (int i = 0; i < 300; ++i) {
    const Rational d = r();
    const QuadNum u(r(), r(), d);
    const QuadNum v(r(), r(), d);
    ASSERT_EQ((u * v).conj(), u.conj() * v.conj());
  }
}

TEST(QuadNumPropertyTest, PowMatchesIteratedProduct) {
  std::mt19937 rng(13);
  std::uniform_int_distribution<long> num(-5, 5);
  std::uniform_int_distribution<long> den(1, 4);
  for (int i = 0; i < 40; ++i) {
    const Rational d(num(rng), den(rng));
    const QuadNum u(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), d);
    QuadNum acc = QuadNum::constant(1, d);
    for (unsigned k = 0; k <= 16; ++k) {
      ASSERT_EQ(quad_pow(u, k), acc) << "k=" << k;
      acc *= u;
    }
  }
}
