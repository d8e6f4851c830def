#pragma once

#include <compare>
#include <stdexcept>
#include <string>

#include "bpj/rational.hpp"

namespace bpj {

/// Raised for an index outside the domain a sequence is defined on.
class IndexOutOfDomain : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Raised when a computation needs distinct characteristic roots but
/// D = ab(ab+8) vanishes.
class DegenerateDiscriminant : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Validated parameter pair (a, b) with ab and D = ab(ab+8) precomputed.
class BiParams {
 public:
  /// Throws std::invalid_argument when a or b is zero.
  BiParams(Rational a, Rational b);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& ab() const { return ab_; }
  /// a^2 b^2 + 8ab, the discriminant of x^2 - ab x - 2ab.
  const Rational& disc() const { return disc_; }

  std::string str() const { return "(a=" + a_.str() + ", b=" + b_.str() + ")"; }

  friend bool operator==(const BiParams& l, const BiParams& r) { return l.a_ == r.a_ && l.b_ == r.b_; }
  friend std::strong_ordering operator<=>(const BiParams& l, const BiParams& r) {
    if (auto c = l.a_ <=> r.a_; c != 0) return c;
    return l.b_ <=> r.b_;
  }

 private:
  Rational a_;
  Rational b_;
  Rational ab_;
  Rational disc_;
};

}  // namespace bpj
