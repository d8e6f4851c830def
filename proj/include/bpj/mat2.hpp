#pragma once

#include <initializer_list>
#include <iosfwd>
#include <string>

#include "bpj/rational.hpp"

namespace bpj {

/// Index parity: 0 for even, 1 for odd.
class Parity {
 public:
  /// Requires n >= 0.
  static Parity of(long long n);

  int value() const { return value_; }
  bool odd() const { return value_ == 1; }
  bool even() const { return value_ == 0; }
  /// 1 - value.
  int complement() const { return 1 - value_; }

  friend bool operator==(Parity, Parity) = default;

 private:
  explicit Parity(int v) : value_(v) {}
  int value_;
};

/// Convenience form of Parity::of(n).value().
int parity(long long n);

/// 2x2 matrix of exact rationals, row-major.
struct Mat2 {
  Rational e11{0};
  Rational e12{0};
  Rational e21{0};
  Rational e22{0};

  static Mat2 identity() { return {1, 0, 0, 1}; }
  static Mat2 zero() { return {}; }
  /// c * I.
  static Mat2 scalar(const Rational& c) { return {c, 0, 0, c}; }

  bool is_zero() const { return e11.is_zero() && e12.is_zero() && e21.is_zero() && e22.is_zero(); }

  /// "[[e11,e12],[e21,e22]]" with each entry in "p/q" form.
  std::string str() const;

  Mat2& operator+=(const Mat2& o);
  Mat2& operator-=(const Mat2& o);
  Mat2& operator*=(const Rational& c);

  friend Mat2 operator+(Mat2 l, const Mat2& r) { return l += r; }
  friend Mat2 operator-(Mat2 l, const Mat2& r) { return l -= r; }
  friend Mat2 operator-(const Mat2& m) { return {-m.e11, -m.e12, -m.e21, -m.e22}; }
  friend Mat2 operator*(Mat2 m, const Rational& c) { return m *= c; }
  friend Mat2 operator*(const Rational& c, Mat2 m) { return m *= c; }
  friend Mat2 operator*(const Mat2& l, const Mat2& r);

  friend bool operator==(const Mat2&, const Mat2&) = default;
};

Rational det(const Mat2& m);

/// Non-negative integer power by repeated squaring.
Mat2 mat2_pow(Mat2 base, unsigned long long k);

struct ScaledMat2 {
  Rational coeff;
  Mat2 mat;
};

/// Sum of coeff_i * mat_i.
Mat2 mat2_linear_combination(std::initializer_list<ScaledMat2> terms);

std::ostream& operator<<(std::ostream& os, const Mat2& m);

}  // namespace bpj
