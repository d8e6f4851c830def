#include "bpj/report.hpp"

#include <stdexcept>

namespace bpj {

namespace {

struct IdName {
  IdentityId id;
  std::string_view name;
};

constexpr IdName kNames[] = {
    {IdentityId::Cassini, "CASSINI"},
    {IdentityId::Det, "DET"},
    {IdentityId::Doubling, "DOUBLING"},
    {IdentityId::LucasRelations, "LUCAS_RELATIONS"},
    {IdentityId::SumT5, "SUM_T5"},
    {IdentityId::WeightedSumT6, "WEIGHTED_SUM_T6"},
    {IdentityId::RootIdentities, "ROOT_IDENTITIES"},
    {IdentityId::RootPrintedClaim, "ROOT_PRINTED_CLAIM"},
    {IdentityId::SeriesMatch, "SERIES_MATCH"},
    {IdentityId::CrossMethod, "CROSS_METHOD"},
};

}  // namespace

std::string_view identity_name(IdentityId id) {
  for (const auto& e : kNames) {
    if (e.id == id) return e.name;
  }
  throw std::logic_error("unknown identity id");
}

std::optional<IdentityId> parse_identity(std::string_view name) {
  for (const auto& e : kNames) {
    if (e.name == name) return e.id;
  }
  return std::nullopt;
}

std::string_view status_name(Status s) {
  switch (s) {
    case Status::Pass:
      return "PASS";
    case Status::Fail:
      return "FAIL";
    case Status::Skipped:
      return "SKIPPED";
  }
  return "?";
}

bool residual_is_zero(const Residual& r) {
  return std::visit([](const auto& v) { return v.is_zero(); }, r);
}

std::string residual_str(const Residual& r) {
  return std::visit([](const auto& v) { return v.str(); }, r);
}

IdentityReport IdentityReport::pass(IdentityId id, BiParams params, IndexRange range) {
  return IdentityReport{id, std::move(params), std::nullopt, range, Status::Pass, std::nullopt, std::nullopt, {}};
}

IdentityReport IdentityReport::fail(IdentityId id, BiParams params, IndexRange range, long long index,
                                    Residual residual) {
  if (residual_is_zero(residual)) throw std::logic_error("FAIL report requires a nonzero residual");
  return IdentityReport{id, std::move(params), std::nullopt, range, Status::Fail, index, std::move(residual), {}};
}

IdentityReport IdentityReport::skipped(IdentityId id, BiParams params, IndexRange range, std::string reason) {
  return IdentityReport{id,     std::move(params), std::nullopt, range, Status::Skipped, std::nullopt, std::nullopt,
                        std::move(reason)};
}

IdentityReport IdentityReport::with_x(Rational value) && {
  x = std::move(value);
  return std::move(*this);
}

bool is_known_erratum(const IdentityReport& r) {
  if (r.identity == IdentityId::RootPrintedClaim) return true;
  return r.identity == IdentityId::WeightedSumT6 && r.x.has_value() && *r.x != Rational(1);
}

}  // namespace bpj
