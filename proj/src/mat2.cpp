#include "bpj/mat2.hpp"

#include <ostream>
#include <stdexcept>

namespace bpj {

Parity Parity::of(long long n) {
  if (n < 0) throw std::domain_error("parity is defined for non-negative indices only");
  return Parity(static_cast<int>(n % 2));
}

int parity(long long n) { return Parity::of(n).value(); }

std::string Mat2::str() const {
  return "[[" + e11.str() + "," + e12.str() + "],[" + e21.str() + "," + e22.str() + "]]";
}

Mat2& Mat2::operator+=(const Mat2& o) {
  e11 += o.e11;
  e12 += o.e12;
  e21 += o.e21;
  e22 += o.e22;
  return *this;
}

Mat2& Mat2::operator-=(const Mat2& o) {
  e11 -= o.e11;
  e12 -= o.e12;
  e21 -= o.e21;
  e22 -= o.e22;
  return *this;
}

Mat2& Mat2::operator*=(const Rational& c) {
  e11 *= c;
  e12 *= c;
  e21 *= c;
  e22 *= c;
  return *this;
}

Mat2 operator*(const Mat2& l, const Mat2& r) {
  return {l.e11 * r.e11 + l.e12 * r.e21, l.e11 * r.e12 + l.e12 * r.e22,
          l.e21 * r.e11 + l.e22 * r.e21, l.e21 * r.e12 + l.e22 * r.e22};
}

Rational det(const Mat2& m) { return m.e11 * m.e22 - m.e12 * m.e21; }

Mat2 mat2_pow(Mat2 base, unsigned long long k) {
  Mat2 acc = Mat2::identity();
  while (k > 0) {
    if (k & 1U) acc = acc * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return acc;
}

Mat2 mat2_linear_combination(std::initializer_list<ScaledMat2> terms) {
  Mat2 out;
  for (const auto& t : terms) out += t.coeff * t.mat;
  return out;
}

std::ostream& operator<<(std::ostream& os, const Mat2& m) { return os << m.str(); }

}  // namespace bpj
