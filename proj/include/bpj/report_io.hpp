#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "bpj/mat2.hpp"
#include "bpj/report.hpp"

namespace bpj {

// Wire formats. Rationals always travel as strings "p/q" (or "p" when q = 1),
// never as JSON numbers.

/// {"e11": "...", "e12": "...", "e21": "...", "e22": "..."}
nlohmann::json mat2_to_json(const Mat2& m);

/// Inverse of mat2_to_json. Throws ParseError on a malformed object.
Mat2 mat2_from_json(const nlohmann::json& j);

/// {identity, a, b, x?, n_max, status, first_failure?, residual?, reason?}
///
/// residual is a string for a scalar, an e11..e22 object for a matrix and a
/// {rat, coeff, disc} object for an element of Q(sqrt D).
nlohmann::json report_to_json(const IdentityReport& r);

inline constexpr const char* kReportCsvHeader =
    "identity,a,b,x,n_max,status,first_failure,residual_e11,residual_e12,residual_e21,residual_e22";

/// One CSV row matching kReportCsvHeader. A scalar residual fills
/// residual_e11 only; a Q(sqrt D) residual puts rat, coeff and disc in
/// residual_e11, residual_e12 and residual_e21.
std::string report_to_csv(const IdentityReport& r);

/// Human-readable one-line summary.
std::string report_to_plain(const IdentityReport& r);

}  // namespace bpj
