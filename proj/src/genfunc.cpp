#include "bpj/genfunc.hpp"

#include <stdexcept>

#include "bpj/matrix_seq.hpp"

namespace bpj {

namespace {

const Rational& entry_ref(const Mat2& m, int row, int col) {
  if (row == 0) return col == 0 ? m.e11 : m.e12;
  return col == 0 ? m.e21 : m.e22;
}

}  // namespace

Mat2Poly::Mat2Poly(std::vector<Mat2> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Mat2 Mat2Poly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Mat2::zero(); }

ScalarPoly Mat2Poly::entry(int row, int col) const {
  ScalarPoly out;
  out.reserve(coeffs_.size());
  for (const auto& m : coeffs_) out.push_back(entry_ref(m, row, col));
  trim(out);
  return out;
}

void trim(ScalarPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

RationalOGF build_ogf(const BiParams& params) {
  const Mat2 j0 = Mat2::identity();
  const Mat2 j1 = generator_matrix(params);
  const Rational two(2);
  Mat2Poly numerator({
      j0,
      j1,
      params.a() * j1 - (params.ab() + two) * j0,
      two * params.b() * j0 - two * j1,
  });
  ScalarPoly denominator{1, 0, -(params.ab() + 4), 0, 4};
  return {std::move(numerator), std::move(denominator)};
}

PolyMatrix component_form(const BiParams& params) {
  const Rational& a = params.a();
  const Rational& b = params.b();
  const Rational ratio = b / a;
  PolyMatrix out{{
      {ScalarPoly{1, b, -2}, ScalarPoly{0, Rational(2) * ratio, Rational(2) * b, Rational(-4) * ratio}},
      {ScalarPoly{0, 1, a, -2}, ScalarPoly{1, 0, -(params.ab() + 2), Rational(2) * b}},
  }};
  for (auto& row : out) {
    for (auto& p : row) trim(p);
  }
  return out;
}

std::vector<Mat2> series_coeffs(const RationalOGF& ogf, long long count) {
  if (count < 1) throw std::invalid_argument("series_coeffs needs count >= 1");
  const ScalarPoly& d = ogf.denominator;
  if (d.empty() || d.front() != Rational(1)) {
    throw std::invalid_argument("denominator constant term must be 1");
  }
  // c(m) = N(m) - sum_{i>=1} d(i) c(m-i)
  std::vector<Mat2> c;
  c.reserve(static_cast<std::size_t>(count));
  for (long long m = 0; m < count; ++m) {
    Mat2 cm = ogf.numerator.coeff(static_cast<std::size_t>(m));
    for (std::size_t i = 1; i < d.size() && static_cast<long long>(i) <= m; ++i) {
      if (d[i].is_zero()) continue;
      cm -= d[i] * c[static_cast<std::size_t>(m) - i];
    }
    c.push_back(std::move(cm));
  }
  return c;
}

std::vector<Mat2> multiply_truncated(const std::vector<Mat2>& series, const ScalarPoly& poly) {
  std::vector<Mat2> out(series.size());
  for (std::size_t m = 0; m < series.size(); ++m) {
    for (std::size_t i = 0; i < poly.size() && i <= m; ++i) {
      if (poly[i].is_zero()) continue;
      out[m] += poly[i] * series[m - i];
    }
  }
  return out;
}

}  // namespace bpj
