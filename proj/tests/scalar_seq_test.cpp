#include <gtest/gtest.h>

#include <thread>

#include "bpj/scalar_seq.hpp"
#include "test_grid.hpp"

using namespace bpj;

namespace {

const BiParams kTwoOne{2, 1};

std::vector<Rational> first_six(SeqKind kind, const BiParams& p) {
  std::vector<Rational> out;
  for (int n = 0; n < 6; ++n) out.push_back(scalar_term(kind, p, n));
  return out;
}

std::vector<Rational> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

}  // namespace

// Hand expansions at (a, b) = (2, 3):
//   jhat:   0, 1, a, ab+2, a^2 b+4a, a^2 b^2+6ab+4
//   jlucas: 2, a, ab+4, a^2 b+6a, a^2 b^2+8ab+8, a^3 b^2+10 a^2 b+20a
//   fib:    0, 1, a, ab+1, a^2 b+2a, a^2 b^2+3ab+1
//   lucas:  2, a, ab+2, a^2 b+3a, a^2 b^2+4ab+2, a^3 b^2+5 a^2 b+5a
TEST(ScalarSeqTest, CoefficientParityTable) {
  const BiParams p{2, 3};
  EXPECT_EQ(first_six(SeqKind::BpJacobsthal, p), ints({0, 1, 2, 8, 20, 76}));
  EXPECT_EQ(first_six(SeqKind::BpJacobsthalLucas, p), ints({2, 2, 10, 24, 92, 232}));
  EXPECT_EQ(first_six(SeqKind::BpFibonacci, p), ints({0, 1, 2, 7, 16, 55}));
  EXPECT_EQ(first_six(SeqKind::BpLucas, p), ints({2, 2, 8, 18, 62, 142}));
}

TEST(ScalarSeqTest, SecondTermIsA) {
  for (const auto& p : fixtures::small_grid()) {
    EXPECT_EQ(scalar_term(SeqKind::BpJacobsthal, p, 2), p.a()) << p.str();
  }
}

TEST(ScalarSeqTest, PaperAnchors) {
  EXPECT_EQ(scalar_term(SeqKind::BpJacobsthal, kTwoOne, 5), Rational(20));
  EXPECT_EQ(scalar_term(SeqKind::BpJacobsthal, kTwoOne, -1), Rational(1, 2));
  EXPECT_EQ(scalar_term(SeqKind::BpJacobsthalLucas, kTwoOne, 3), Rational(16));
}

TEST(ScalarSeqTest, NegativeIndexDomain) {
  EXPECT_THROW(scalar_term(SeqKind::BpJacobsthal, kTwoOne, -2), IndexOutOfDomain);
  EXPECT_THROW(scalar_term(SeqKind::BpJacobsthalLucas, kTwoOne, -1), IndexOutOfDomain);
  EXPECT_THROW(scalar_term(SeqKind::BpFibonacci, kTwoOne, -1), IndexOutOfDomain);
  EXPECT_THROW(scalar_term_fast(SeqKind::BpJacobsthal, kTwoOne, -1), IndexOutOfDomain);
}

TEST(ScalarSeqTest, BackwardExtensionIsConsistent) {
  // j1 = b j0 + 2 j(-1) must reproduce 1 for every b.
  for (const auto& p : fixtures::small_grid()) {
    const Rational j1 = step_coefficient(SeqKind::BpJacobsthal, p, 1) * scalar_term(SeqKind::BpJacobsthal, p, 0) +
                        Rational(2) * scalar_term(SeqKind::BpJacobsthal, p, -1);
    EXPECT_EQ(j1, Rational(1));
  }
}

TEST(ScalarSeqTest, ClassicalSequences) {
  EXPECT_EQ(classical_jacobsthal(0), Rational(0));
  EXPECT_EQ(classical_jacobsthal_lucas(0), Rational(2));
  EXPECT_EQ(classical_jacobsthal_lucas(1), Rational(1));
  EXPECT_EQ(classical_jacobsthal(5), Rational(11));
  EXPECT_EQ(classical_jacobsthal(8), Rational(85));
}

TEST(ScalarSeqTest, ClassicalBinetAtUnitParams) {
  const BiParams unit{1, 1};
  for (long n = 0; n <= 64; ++n) {
    const Rational expected = (Rational(2).pow(n) - Rational(-1).pow(n)) / Rational(3);
    ASSERT_EQ(scalar_term(SeqKind::BpJacobsthal, unit, n), expected) << n;
  }
}

TEST(ScalarSeqTest, FastExamples) {
  EXPECT_EQ(scalar_term_fast(SeqKind::BpJacobsthal, kTwoOne, 6), Rational(64));
  EXPECT_EQ(scalar_term_fast(SeqKind::BpJacobsthal, BiParams(1, 1), 12), Rational(1365));
  EXPECT_EQ(scalar_term_fast(SeqKind::BpJacobsthal, kTwoOne, 0), Rational(0));
  EXPECT_EQ(scalar_term_fast(SeqKind::BpJacobsthalLucas, kTwoOne, 0), Rational(2));
  EXPECT_EQ(scalar_term_fast(SeqKind::BpLucas, kTwoOne, 0), Rational(2));
}

TEST(ScalarSeqPropertyTest, FastMatchesRecurrenceLongRange) {
  std::vector<BiParams> points{BiParams(2, 1), BiParams(1, 1), BiParams(-3, 2)};
  points.emplace_back(Rational(1, 2), 3);
  for (SeqKind kind : {SeqKind::BpJacobsthal, SeqKind::BpJacobsthalLucas, SeqKind::BpFibonacci, SeqKind::BpLucas}) {
    for (const auto& p : points) {
      for (long n = 0; n <= 4096; ++n) {
        ASSERT_EQ(scalar_term_fast(kind, p, n), scalar_term(kind, p, n)) << kind_name(kind) << ' ' << p.str() << n;
      }
    }
  }
}

TEST(ScalarSeqPropertyTest, FastMatchesRecurrenceOnGrid) {
  for (SeqKind kind : {SeqKind::BpJacobsthal, SeqKind::BpJacobsthalLucas, SeqKind::BpFibonacci, SeqKind::BpLucas}) {
    for (const auto& p : fixtures::small_grid()) {
      for (long n = 0; n <= 300; ++n) {
        ASSERT_EQ(scalar_term_fast(kind, p, n), scalar_term(kind, p, n)) << kind_name(kind) << ' ' << p.str() << n;
      }
    }
  }
}

TEST(ScalarSeqTest, BeyondMemoLimitMatchesFast) {
  const BiParams p{2, 1};
  for (long n : {8191L, 8192L, 8193L, 9000L}) {
    EXPECT_EQ(scalar_term(SeqKind::BpJacobsthal, p, n), scalar_term_fast(SeqKind::BpJacobsthal, p, n)) << n;
  }
}

TEST(ScalarSeqTest, ConcurrentReadsAgree) {
  clear_scalar_cache();
  const BiParams p{3, -2};
  std::vector<Rational> results(8);
  {
    std::vector<std::jthread> threads;
    for (std::size_t t = 0; t < results.size(); ++t) {
      threads.emplace_back([&, t] {
        for (long n = 0; n <= 600; ++n) (void)scalar_term(SeqKind::BpJacobsthal, p, n);
        results[t] = scalar_term(SeqKind::BpJacobsthal, p, 600);
      });
    }
  }
  for (const auto& r : results) EXPECT_EQ(r, scalar_term_fast(SeqKind::BpJacobsthal, p, 600));
}

TEST(LucasRelationsTest, KnownPoints) {
  EXPECT_EQ(verify_lucas_relations(kTwoOne, 64).status, Status::Pass);
  EXPECT_EQ(verify_lucas_relations(BiParams(3, 5), 64).status, Status::Pass);
}

TEST(LucasRelationsTest, FirstIndexReducesToAlgebra) {
  // (ab+8) j1 = 2 C0 + C2 = 4 + (ab+4).
  for (const auto& p : fixtures::small_grid()) {
    EXPECT_EQ((p.ab() + 8) * scalar_term(SeqKind::BpJacobsthal, p, 1),
              Rational(2) * scalar_term(SeqKind::BpJacobsthalLucas, p, 0) +
                  scalar_term(SeqKind::BpJacobsthalLucas, p, 2));
    EXPECT_EQ(scalar_term(SeqKind::BpJacobsthalLucas, p, 2), p.ab() + 4);
  }
}

TEST(LucasRelationsTest, HoldOnGrid) {
  for (const auto& p : fixtures::small_grid()) {
    const IdentityReport r = verify_lucas_relations(p, 256);
    EXPECT_EQ(r.status, Status::Pass) << p.str();
    EXPECT_EQ(r.range, (IndexRange{1, 256}));
  }
  for (const auto& p : fixtures::odd_points()) EXPECT_EQ(verify_lucas_relations(p, 64).status, Status::Pass);
}

TEST(ScalarSeqTest, KindNames) {
  EXPECT_EQ(parse_kind("jhat"), SeqKind::BpJacobsthal);
  EXPECT_EQ(parse_kind("lucas"), SeqKind::BpLucas);
  EXPECT_FALSE(parse_kind("pell").has_value());
}
