#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "bpj/rational.hpp"

namespace bpj {

/// Raised when two QuadNums with different discriminants are combined.
class DiscriminantMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// x + y*sqrt(D) in the formal ring Q[t]/(t^2 - D).
///
/// sqrt(D) is never evaluated. D may be negative or a perfect square; in the
/// latter case the ring has zero divisors and inverse() can fail.
class QuadNum {
 public:
  QuadNum(Rational rat, Rational coeff, Rational disc)
      : rat_(std::move(rat)), coeff_(std::move(coeff)), disc_(std::move(disc)) {}

  /// The embedded rational r + 0*sqrt(D).
  static QuadNum constant(Rational r, Rational disc) { return {std::move(r), 0, std::move(disc)}; }
  /// 0 + 1*sqrt(D).
  static QuadNum root(Rational disc) { return {0, 1, std::move(disc)}; }

  const Rational& rat() const { return rat_; }
  const Rational& coeff() const { return coeff_; }
  const Rational& disc() const { return disc_; }

  bool is_zero() const { return rat_.is_zero() && coeff_.is_zero(); }

  /// x - y*sqrt(D).
  QuadNum conj() const { return {rat_, -coeff_, disc_}; }
  /// x^2 - y^2 D, i.e. u * conj(u).
  Rational norm() const { return rat_ * rat_ - coeff_ * coeff_ * disc_; }
  /// Throws std::domain_error when the norm vanishes.
  QuadNum inverse() const;

  std::string str() const;

  QuadNum operator-() const { return {-rat_, -coeff_, disc_}; }
  QuadNum& operator+=(const QuadNum& o);
  QuadNum& operator-=(const QuadNum& o);
  QuadNum& operator*=(const QuadNum& o);
  QuadNum& operator*=(const Rational& c);
  QuadNum& operator/=(const Rational& c);

  friend QuadNum operator+(QuadNum l, const QuadNum& r) { return l += r; }
  friend QuadNum operator-(QuadNum l, const QuadNum& r) { return l -= r; }
  friend QuadNum operator*(QuadNum l, const QuadNum& r) { return l *= r; }
  friend QuadNum operator*(QuadNum l, const Rational& c) { return l *= c; }
  friend QuadNum operator*(const Rational& c, QuadNum r) { return r *= c; }
  friend QuadNum operator/(QuadNum l, const Rational& c) { return l /= c; }
  friend QuadNum operator+(QuadNum l, const Rational& c) { return l += constant(c, l.disc_); }

  friend bool operator==(const QuadNum&, const QuadNum&) = default;

 private:
  void require_same_disc(const QuadNum& o) const;

  Rational rat_;
  Rational coeff_;
  Rational disc_;
};

/// Binary exponentiation; quad_pow(u, 0) == 1.
QuadNum quad_pow(QuadNum base, unsigned long long k);

std::ostream& operator<<(std::ostream& os, const QuadNum& q);

}  // namespace bpj
