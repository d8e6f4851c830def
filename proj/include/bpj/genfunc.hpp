#pragma once

#include <array>
#include <vector>

#include "bpj/mat2.hpp"
#include "bpj/params.hpp"
#include "bpj/rational.hpp"

namespace bpj {

/// Polynomial with rational coefficients; index = power of x. Trailing zeros
/// are trimmed, so the zero polynomial is empty.
using ScalarPoly = std::vector<Rational>;

/// Polynomial with 2x2 matrix coefficients, trimmed like ScalarPoly.
class Mat2Poly {
 public:
  Mat2Poly() = default;
  explicit Mat2Poly(std::vector<Mat2> coeffs);

  const std::vector<Mat2>& coeffs() const { return coeffs_; }
  /// Coefficient of x^k, zero past the degree.
  Mat2 coeff(std::size_t k) const;
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

  /// Entry (row, col) of every coefficient, as a scalar polynomial.
  ScalarPoly entry(int row, int col) const;

  friend bool operator==(const Mat2Poly&, const Mat2Poly&) = default;

 private:
  std::vector<Mat2> coeffs_;
};

void trim(ScalarPoly& p);

/// sum J(m) x^m = numerator(x) / denominator(x).
struct RationalOGF {
  Mat2Poly numerator;
  /// Constant term is 1.
  ScalarPoly denominator;
};

/// numerator  = J0 + J1 x + [a J1 - (ab+2) J0] x^2 + [2b J0 - 2 J1] x^3
/// denominator = 1 - (ab+4) x^2 + 4 x^4
RationalOGF build_ogf(const BiParams& params);

/// The numerator written out entrywise:
///   [[1 + bx - 2x^2,      2(b/a)x + 2bx^2 - 4(b/a)x^3],
///    [x + ax^2 - 2x^3,    1 - (ab+2)x^2 + 2bx^3     ]]
using PolyMatrix = std::array<std::array<ScalarPoly, 2>, 2>;
PolyMatrix component_form(const BiParams& params);

/// First `count` power-series coefficients of numerator/denominator by long
/// division. Throws std::invalid_argument if count < 1 or the denominator's
/// constant term is not 1.
std::vector<Mat2> series_coeffs(const RationalOGF& ogf, long long count);

/// Product of a truncated matrix series with a scalar polynomial, truncated
/// to the series length.
std::vector<Mat2> multiply_truncated(const std::vector<Mat2>& series, const ScalarPoly& poly);

}  // namespace bpj
