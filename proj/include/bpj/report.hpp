#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "bpj/mat2.hpp"
#include "bpj/params.hpp"
#include "bpj/quad.hpp"
#include "bpj/rational.hpp"

namespace bpj {

/// Identity suites, in report sort order.
enum class IdentityId {
  Cassini,
  Det,
  Doubling,
  LucasRelations,
  SumT5,
  WeightedSumT6,
  RootIdentities,
  RootPrintedClaim,
  SeriesMatch,
  CrossMethod,
};

inline constexpr IdentityId kAllIdentities[] = {
    IdentityId::Cassini,        IdentityId::Det,         IdentityId::Doubling,
    IdentityId::LucasRelations, IdentityId::SumT5,       IdentityId::WeightedSumT6,
    IdentityId::RootIdentities, IdentityId::RootPrintedClaim, IdentityId::SeriesMatch,
    IdentityId::CrossMethod,
};

/// Wire name, e.g. "CASSINI" or "WEIGHTED_SUM_T6".
std::string_view identity_name(IdentityId id);
std::optional<IdentityId> parse_identity(std::string_view name);

enum class Status { Pass, Fail, Skipped };

std::string_view status_name(Status s);

/// lhs - rhs at the first failing index.
using Residual = std::variant<Rational, Mat2, QuadNum>;

bool residual_is_zero(const Residual& r);
std::string residual_str(const Residual& r);

struct IndexRange {
  long long lo = 0;
  long long hi = 0;
  friend bool operator==(const IndexRange&, const IndexRange&) = default;
};

/// Outcome of checking one identity at one parameter point over an index range.
///
/// FAIL always carries the first failing index and a nonzero residual; PASS
/// means the identity held exactly at every index in `range`.
struct IdentityReport {
  IdentityId identity;
  BiParams params;
  std::optional<Rational> x;
  IndexRange range;
  Status status = Status::Pass;
  std::optional<long long> first_failure;
  std::optional<Residual> residual;
  /// Why a report was skipped, or a qualifier on a PASS/FAIL (may be empty).
  std::string reason;

  static IdentityReport pass(IdentityId id, BiParams params, IndexRange range);
  static IdentityReport fail(IdentityId id, BiParams params, IndexRange range, long long index, Residual residual);
  static IdentityReport skipped(IdentityId id, BiParams params, IndexRange range, std::string reason);

  IdentityReport with_x(Rational value) &&;
};

/// Suites whose printed form is expected to fail: the weighted sum for
/// x != 1 and the "beta + 2 = -beta/alpha" root claim.
bool is_known_erratum(const IdentityReport& r);

/// Runs `residual_at(n)` for n = range.lo .. range.hi in increasing order and
/// stops at the first nonzero residual.
template <class F>
IdentityReport check_range(IdentityId id, const BiParams& params, IndexRange range, F&& residual_at) {
  for (long long n = range.lo; n <= range.hi; ++n) {
    Residual r = residual_at(n);
    if (!residual_is_zero(r)) return IdentityReport::fail(id, params, range, n, std::move(r));
  }
  return IdentityReport::pass(id, params, range);
}

}  // namespace bpj
