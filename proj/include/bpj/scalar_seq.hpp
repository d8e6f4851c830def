#pragma once

#include <optional>
#include <string_view>

#include "bpj/params.hpp"
#include "bpj/rational.hpp"
#include "bpj/report.hpp"

namespace bpj {

/// The four bi-periodic scalar sequences.
///
/// Which of a, b multiplies x(n-1) depends on both the kind and the parity of
/// n, and the conventions differ between kinds:
///
///   kind                  x0  x1  even n  odd n  x(n-2) weight
///   BpJacobsthal          0   1   a       b      2
///   BpJacobsthalLucas     2   a   b       a      2
///   BpFibonacci           0   1   a       b      1
///   BpLucas               2   a   b       a      1
enum class SeqKind { BpJacobsthal, BpJacobsthalLucas, BpFibonacci, BpLucas };

/// CLI names: "jhat", "jlucas", "fib", "lucas".
std::string_view kind_name(SeqKind kind);
std::optional<SeqKind> parse_kind(std::string_view name);

/// Multiplier of x(n-1) in the step producing x(n).
const Rational& step_coefficient(SeqKind kind, const BiParams& params, long long n);

/// Weight of x(n-2): 2 for the Jacobsthal kinds, 1 for the Fibonacci kinds.
long tail_weight(SeqKind kind);

/// Exact term by forward recurrence, memoized per (kind, a, b).
///
/// n = -1 is accepted for BpJacobsthal only and yields 1/2, the value that
/// makes the recurrence run backwards consistently (x1 = b*x0 + 2*x(-1)).
/// Throws IndexOutOfDomain for any other n < 0.
Rational scalar_term(SeqKind kind, const BiParams& params, long long n);

/// Same value as scalar_term in O(log n) ring operations: each parity class
/// satisfies y(m) = (ab + 2w) y(m-1) - w^2 y(m-2), with w the tail weight.
Rational scalar_term_fast(SeqKind kind, const BiParams& params, long long n);

/// j(n) = j(n-1) + 2 j(n-2), j0 = 0, j1 = 1.
Rational classical_jacobsthal(long long n);
/// c(n) = c(n-1) + 2 c(n-2), c0 = 2, c1 = 1.
Rational classical_jacobsthal_lucas(long long n);

/// Checks C(n) = 2 j(n-1) + j(n+1) and (ab+8) j(n) = 2 C(n-1) + C(n+1) for
/// 1 <= n <= n_max. The residual is lhs - rhs of whichever relation fails
/// first (the first relation when both do).
IdentityReport verify_lucas_relations(const BiParams& params, long long n_max);

/// Drops every memoized term. Intended for tests and benchmarks.
void clear_scalar_cache();

}  // namespace bpj
