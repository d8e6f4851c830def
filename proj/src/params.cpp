#include "bpj/params.hpp"

namespace bpj {

BiParams::BiParams(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.is_zero() || b_.is_zero()) {
    throw std::invalid_argument("parameters a and b must be nonzero, got " + str());
  }
  ab_ = a_ * b_;
  disc_ = ab_ * (ab_ + 8);
}

}  // namespace bpj
