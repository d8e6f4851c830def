#include <gtest/gtest.h>

#include "bpj/matrix_seq.hpp"
#include "bpj/scalar_seq.hpp"
#include "test_grid.hpp"

using namespace bpj;

namespace {

const BiParams kTwoOne{2, 1};

}  // namespace

TEST(TermRecurrenceTest, InitialMatrices) {
  EXPECT_EQ(term_recurrence(kTwoOne, 0), Mat2::identity());
  EXPECT_EQ(term_recurrence(kTwoOne, 1), (Mat2{1, 1, 1, 0}));
  const BiParams p{3, 5};
  EXPECT_EQ(term_recurrence(p, 1), (Mat2{5, Rational(10, 3), 1, 0}));
}

// Symbolic J2..J6 instantiated at (2, 1).
TEST(TermRecurrenceTest, ListedMatricesAtTwoOne) {
  EXPECT_EQ(term_recurrence(kTwoOne, 2), (Mat2{4, 2, 2, 2}));
  EXPECT_EQ(term_recurrence(kTwoOne, 3), (Mat2{6, 4, 4, 2}));
  EXPECT_EQ(term_recurrence(kTwoOne, 4), (Mat2{20, 12, 12, 8}));
  // a^2b^3+8ab^2+12b, 2ab^3+12b^2+8b/a; a^2b^2+6ab+4, 2ab^2+8b
  EXPECT_EQ(term_recurrence(kTwoOne, 5), (Mat2{32, 20, 20, 12}));
  // a^3b^3+10a^2b^2+24ab+8, 2a^2b^3+16ab^2+24b; a^3b^2+8a^2b+12a, 2a^2b^2+12ab+8
  EXPECT_EQ(term_recurrence(kTwoOne, 6), (Mat2{104, 64, 64, 40}));
}

TEST(TermRecurrenceTest, SymbolicJ2AndJ4AtOtherPoints) {
  for (const auto& p : fixtures::small_grid()) {
    const Rational& a = p.a();
    const Rational& b = p.b();
    const Rational& ab = p.ab();
    EXPECT_EQ(term_recurrence(p, 2), (Mat2{ab + 2, Rational(2) * b, a, 2}));
    EXPECT_EQ(term_recurrence(p, 4), (Mat2{ab * ab + Rational(6) * ab + 4, Rational(2) * ab * b + Rational(8) * b,
                                           a * ab + Rational(4) * a, Rational(2) * ab + 4}));
  }
}

TEST(TermRecurrenceTest, VectorFormMatchesSingleTerms) {
  const BiParams p{-2, 3};
  const std::vector<Mat2> terms = terms_recurrence(p, 40);
  ASSERT_EQ(terms.size(), 40U);
  for (long n = 0; n < 40; ++n) EXPECT_EQ(terms[static_cast<std::size_t>(n)], term_recurrence(p, n));
  EXPECT_TRUE(terms_recurrence(p, 0).empty());
}

TEST(TermRecurrenceTest, RejectsNegativeIndex) { EXPECT_THROW(term_recurrence(kTwoOne, -1), IndexOutOfDomain); }

TEST(TermClosedTest, Examples) {
  EXPECT_EQ(term_closed(kTwoOne, 0), Mat2::identity());
  EXPECT_EQ(term_closed(kTwoOne, 3), (Mat2{6, 4, 4, 2}));
  EXPECT_EQ(term_closed(BiParams(1, 1), 3), (Mat2{5, 6, 3, 2}));
}

TEST(TermBinetTest, Examples) {
  EXPECT_EQ(term_binet(kTwoOne, 0), Mat2::identity());
  EXPECT_EQ(term_binet(kTwoOne, 2), (Mat2{4, 2, 2, 2}));
  // Independent rational oracle: J7 at (1, 2).
  EXPECT_EQ(term_binet(BiParams(1, 2), 7), (Mat2{336, 416, 104, 128}));
  EXPECT_EQ(term_recurrence(BiParams(1, 2), 7), (Mat2{336, 416, 104, 128}));
}

TEST(TermBinetTest, DegenerateDiscriminant) {
  const BiParams degenerate{2, -4};
  ASSERT_TRUE(degenerate.disc().is_zero());
  EXPECT_THROW(term_binet(degenerate, 3), DegenerateDiscriminant);
  EXPECT_THROW(binet_coeffs(degenerate, 3), DegenerateDiscriminant);
  // Other routes still work there.
  EXPECT_EQ(term_closed(degenerate, 9), term_recurrence(degenerate, 9));
  EXPECT_EQ(term_fast(degenerate, 9), term_recurrence(degenerate, 9));
}

TEST(BinetCoeffsTest, SelectorMatrices) {
  const BiParams p{3, 5};
  const BinetCoeffs even = binet_coeffs(p, 4);
  EXPECT_EQ(even.a_numerator, (Mat2{-2, Rational(2) * p.b(), p.a(), Rational(-2) - p.ab()}));
  EXPECT_EQ(even.b_numerator, Mat2::identity());
  EXPECT_EQ(even.a_scaled, even.a_numerator * p.ab().pow(-2));
  EXPECT_EQ(even.b_scaled, even.b_numerator * p.ab().pow(-3));

  const BinetCoeffs odd = binet_coeffs(p, 5);
  EXPECT_EQ(odd.a_numerator, (Mat2{0, Rational(2) * p.b() / p.a(), 1, -p.b()}));
  EXPECT_EQ(odd.a_numerator, generator_matrix(p) - p.b() * Mat2::identity());
  EXPECT_EQ(odd.b_numerator, Mat2::scalar(p.b()));
}

TEST(BinetCoeffsTest, Roots) {
  const BinetCoeffs c = binet_coeffs(BiParams(1, 1), 0);
  EXPECT_EQ(c.alpha, QuadNum(Rational(1, 2), Rational(1, 2), 9));
  EXPECT_EQ(c.beta, QuadNum(Rational(1, 2), Rational(-1, 2), 9));
  EXPECT_EQ(c.alpha - c.beta, QuadNum::root(9));
}

TEST(TermFastTest, Examples) {
  EXPECT_EQ(term_fast(kTwoOne, 0), Mat2::identity());
  EXPECT_EQ(term_fast(kTwoOne, 6), term_recurrence(kTwoOne, 6));
  EXPECT_EQ(term_fast(BiParams(1, 1), 4096), term_recurrence(BiParams(1, 1), 4096));
}

TEST(DetClosedTest, Examples) {
  EXPECT_EQ(det_closed(kTwoOne, 0), Rational(1));
  EXPECT_EQ(det_closed(kTwoOne, 4), Rational(16));
  EXPECT_EQ(det_closed(kTwoOne, 5), Rational(-16));
  const BiParams p{3, 7};
  EXPECT_EQ(det_closed(p, 5), Rational(-32) * Rational(7, 3));
  EXPECT_EQ(det(term_recurrence(BiParams(-2, 3), 5)), Rational(48));
  EXPECT_EQ(det_closed(BiParams(-2, 3), 5), Rational(48));
}

TEST(MatrixSeqPropertyTest, FourWayAgreement) {
  std::vector<BiParams> points = fixtures::small_grid();
  for (const auto& p : fixtures::odd_points()) points.push_back(p);
  for (const auto& p : points) {
    const std::vector<Mat2> terms = terms_recurrence(p, 97);
    for (long n = 0; n <= 96; ++n) {
      const Mat2& rec = terms[static_cast<std::size_t>(n)];
      ASSERT_EQ(term_closed(p, n), rec) << p.str() << " n=" << n;
      ASSERT_EQ(term_fast(p, n), rec) << p.str() << " n=" << n;
      if (!p.disc().is_zero()) ASSERT_EQ(term_binet(p, n), rec) << p.str() << " n=" << n;
    }
  }
}

TEST(MatrixSeqPropertyTest, DeterminantMatchesClosedForm) {
  for (const auto& p : fixtures::small_grid()) {
    const std::vector<Mat2> terms = terms_recurrence(p, 129);
    for (long n = 0; n <= 128; ++n) {
      ASSERT_EQ(det(terms[static_cast<std::size_t>(n)]), det_closed(p, n)) << p.str() << " n=" << n;
    }
  }
}

TEST(MatrixSeqPropertyTest, TermsCommute) {
  for (const auto& p : {BiParams(2, 1), BiParams(-3, 2), BiParams(Rational(1, 2), 3)}) {
    const std::vector<Mat2> terms = terms_recurrence(p, 33);
    for (const auto& x : terms) {
      for (const auto& y : terms) ASSERT_EQ(x * y, y * x);
    }
  }
}

TEST(MatrixSeqPropertyTest, LowerLeftIsJacobsthalTerm) {
  for (const auto& p : fixtures::small_grid()) {
    const std::vector<Mat2> terms = terms_recurrence(p, 257);
    for (long n = 0; n <= 256; ++n) {
      ASSERT_EQ(terms[static_cast<std::size_t>(n)].e21, scalar_term(SeqKind::BpJacobsthal, p, n));
    }
  }
}
