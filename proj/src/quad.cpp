#include "bpj/quad.hpp"

#include <ostream>

namespace bpj {

void QuadNum::require_same_disc(const QuadNum& o) const {
  if (disc_ != o.disc_) {
    throw DiscriminantMismatch("QuadNum discriminants differ: " + disc_.str() + " vs " + o.disc_.str());
  }
}

QuadNum QuadNum::inverse() const {
  const Rational n = norm();
  if (n.is_zero()) throw std::domain_error("QuadNum " + str() + " is not invertible (zero norm)");
  return conj() / n;
}

std::string QuadNum::str() const { return rat_.str() + "+" + coeff_.str() + "*sqrt(" + disc_.str() + ")"; }

QuadNum& QuadNum::operator+=(const QuadNum& o) {
  require_same_disc(o);
  rat_ += o.rat_;
  coeff_ += o.coeff_;
  return *this;
}

QuadNum& QuadNum::operator-=(const QuadNum& o) {
  require_same_disc(o);
  rat_ -= o.rat_;
  coeff_ -= o.coeff_;
  return *this;
}

QuadNum& QuadNum::operator*=(const QuadNum& o) {
  require_same_disc(o);
  Rational r = rat_ * o.rat_ + coeff_ * o.coeff_ * disc_;
  Rational c = rat_ * o.coeff_ + coeff_ * o.rat_;
  rat_ = std::move(r);
  coeff_ = std::move(c);
  return *this;
}

QuadNum& QuadNum::operator*=(const Rational& c) {
  rat_ *= c;
  coeff_ *= c;
  return *this;
}

QuadNum& QuadNum::operator/=(const Rational& c) {
  rat_ /= c;
  coeff_ /= c;
  return *this;
}

QuadNum quad_pow(QuadNum base, unsigned long long k) {
  QuadNum acc = QuadNum::constant(1, base.disc());
  while (k > 0) {
    if (k & 1U) acc *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return acc;
}

std::ostream& operator<<(std::ostream& os, const QuadNum& q) { return os << q.str(); }

}  // namespace bpj
