#pragma once

#include <vector>

#include "bpj/mat2.hpp"
#include "bpj/params.hpp"
#include "bpj/rational.hpp"
#include "bpj/report.hpp"
#include "bpj/scalar_seq.hpp"

namespace bpj {

// Every check below compares a hypothesis against an independently computed
// side, at every index of its range, with exact arithmetic. A FAIL carries the
// first failing index and lhs - rhs there.

/// (b/a)^e j(n-1) j(n+1) - (b/a)^(1-e) j(n)^2 = (-1)^e 2^(n-1),  1 <= n <= n_max.
IdentityReport verify_cassini(const BiParams& params, long long n_max);

/// det J(n) = 2^n (-b/a)^e with J(n) from the recurrence,  0 <= n <= n_max.
IdentityReport verify_det(const BiParams& params, long long n_max);

/// J(2m) = (ab+4) J(2m-2) - 4 J(2m-4) and J(2m+1) = (ab+4) J(2m-1) - 4 J(2m-3),
/// 2 <= m <= m_max.
IdentityReport verify_doubling(const BiParams& params, long long m_max);

/// Closed form of J0 + ... + J(n-1), with denominator 1 - ab.
/// Throws std::domain_error when ab = 1.
Mat2 sum_t5_closed(const BiParams& params, long long n);

/// The weighted-sum closed form exactly as printed, for
/// J0 + J1/x + ... + J(n-1)/x^(n-1), with denominator x^2 - (ab+4)x + 4.
/// Throws std::domain_error when x = 0 or the denominator vanishes.
Mat2 weighted_sum_t6_printed(const BiParams& params, const Rational& x, long long n);

/// Brute-force sum of J(k) / x^k for 0 <= k < n; x = 1 gives the plain sum.
Mat2 direct_weighted_sum(const BiParams& params, const Rational& x, long long n);

/// Closed form vs direct sum for 1 <= n <= n_max. SKIPPED when ab = 1.
IdentityReport verify_sum_t5(const BiParams& params, long long n_max);

/// Printed weighted form vs direct weighted sum for 1 <= n <= n_max. SKIPPED
/// when x = 0 or x^2 - (ab+4)x + 4 = 0. Expected to FAIL for x != 1.
IdentityReport verify_weighted_sum_t6(const BiParams& params, const Rational& x, long long n_max);

/// Five root identities in Q(sqrt D), indexed 1..5 in the report:
///   1: alpha + beta = ab           2: alpha beta = -2ab
///   3: (alpha+2)(beta+2) = 4       4: alpha + 2 = alpha^2/ab
///   5: beta + 2 = beta^2/ab
IdentityReport verify_root_identities(const BiParams& params);

/// The printed claim beta + 2 = -beta/alpha (index 0). Expected to FAIL.
IdentityReport verify_root_printed_claim(const BiParams& params);

/// series_coeffs(build_ogf) vs the recurrence for 0 <= m < count.
IdentityReport verify_series_match(const BiParams& params, long long count);

/// recurrence = closed = Binet = fast for 0 <= n <= n_max. At D = 0 the Binet
/// route is left out and `reason` says so.
IdentityReport verify_cross_method(const BiParams& params, long long n_max);

struct GridSpec {
  std::vector<Rational> a_values;
  std::vector<Rational> b_values;
  long long n_max = 128;
  /// Empty means every suite.
  std::vector<IdentityId> suites;
  /// Used by WEIGHTED_SUM_T6 only.
  std::vector<Rational> x_values;
  /// Worker threads; 0 picks the hardware concurrency.
  unsigned jobs = 0;
};

/// a, b in {-3,-2,-1,1,2,3}, n_max = 128, x in {1, 2, 1/2, 3}, all suites.
GridSpec default_grid();

/// Runs every requested suite at every (a, b) and returns the reports sorted
/// by (a, b, identity, x). ROOT_IDENTITIES also emits ROOT_PRINTED_CLAIM.
/// Index ranges per suite, from n_max:
///   CASSINI, LUCAS_RELATIONS, SUM_T5, WEIGHTED_SUM_T6: 1..n_max
///   DET, CROSS_METHOD: 0..n_max;  SERIES_MATCH: n_max coefficients
///   DOUBLING: m = 2..max(2, (n_max-1)/2)
/// Throws std::invalid_argument if any a or b is zero.
std::vector<IdentityReport> run_grid(const GridSpec& spec);

struct GridSummary {
  int passed = 0;
  int failed = 0;
  int skipped = 0;
  /// FAILs on known-erratum suites (counted in `failed` as well).
  int errata_failed = 0;
};

GridSummary summarize(const std::vector<IdentityReport>& reports);

/// 0 when nothing failed, or when every failure is a known erratum and
/// `expect_errata` is set; 1 otherwise.
int verdict_exit_code(const std::vector<IdentityReport>& reports, bool expect_errata);

}  // namespace bpj
