#include "bpj/matrix_seq.hpp"

#include <string>

#include "bpj/scalar_seq.hpp"

namespace bpj {

namespace {

void require_index(long long n) {
  if (n < 0) throw IndexOutOfDomain("matrix terms are defined for n >= 0, got " + std::to_string(n));
}

void require_distinct_roots(const BiParams& params) {
  if (params.disc().is_zero()) {
    throw DegenerateDiscriminant("ab(ab+8) = 0 at " + params.str() + ": repeated characteristic root");
  }
}

const Rational& recurrence_coefficient(const BiParams& params, long long n) {
  return n % 2 == 0 ? params.a() : params.b();
}

// Assembles the closed form from j(n-1), j(n), j(n+1).
Mat2 assemble(const BiParams& params, long long n, const Rational& prev, const Rational& cur, const Rational& next) {
  const Rational ratio = params.b() / params.a();
  const Rational odd_factor = n % 2 == 1 ? ratio : Rational(1);
  return {odd_factor * next, Rational(2) * ratio * cur, cur, Rational(2) * odd_factor * prev};
}

// (alpha^k - beta^k)/(alpha - beta). Since alpha - beta = sqrt(D), the
// quotient is the sqrt(D) coefficient of the difference.
Rational root_power_quotient(const QuadNum& alpha, const QuadNum& beta, unsigned long long k) {
  const QuadNum diff = quad_pow(alpha, k) - quad_pow(beta, k);
  if (!diff.rat().is_zero()) throw std::logic_error("alpha^k - beta^k has a rational part");
  return diff.coeff();
}

}  // namespace

Mat2 generator_matrix(const BiParams& params) {
  return {params.b(), Rational(2) * params.b() / params.a(), 1, 0};
}

Mat2 term_recurrence(const BiParams& params, long long n) {
  require_index(n);
  if (n == 0) return Mat2::identity();
  Mat2 prev = Mat2::identity();
  Mat2 cur = generator_matrix(params);
  const Rational two(2);
  for (long long k = 2; k <= n; ++k) {
    Mat2 next = recurrence_coefficient(params, k) * cur + two * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::vector<Mat2> terms_recurrence(const BiParams& params, long long count) {
  std::vector<Mat2> out;
  if (count <= 0) return out;
  out.reserve(static_cast<std::size_t>(count));
  out.push_back(Mat2::identity());
  if (count > 1) out.push_back(generator_matrix(params));
  const Rational two(2);
  for (long long k = 2; k < count; ++k) {
    const auto i = static_cast<std::size_t>(k);
    out.push_back(recurrence_coefficient(params, k) * out[i - 1] + two * out[i - 2]);
  }
  return out;
}

Mat2 term_closed(const BiParams& params, long long n) {
  require_index(n);
  return assemble(params, n, scalar_term(SeqKind::BpJacobsthal, params, n - 1),
                  scalar_term(SeqKind::BpJacobsthal, params, n), scalar_term(SeqKind::BpJacobsthal, params, n + 1));
}

QuadNum alpha_root(const BiParams& params) { return QuadNum(params.ab() / 2, Rational(1, 2), params.disc()); }

QuadNum beta_root(const BiParams& params) { return QuadNum(params.ab() / 2, Rational(-1, 2), params.disc()); }

BinetCoeffs binet_coeffs(const BiParams& params, long long n) {
  require_index(n);
  require_distinct_roots(params);
  const Mat2 j0 = Mat2::identity();
  const Mat2 j1 = generator_matrix(params);
  const bool odd = n % 2 == 1;
  const long long half = n / 2;

  BinetCoeffs c{n, {}, {}, {}, {}, alpha_root(params), beta_root(params)};
  // M^0 = I, so the selector keeps exactly one of the two factors.
  c.a_numerator = odd ? j1 - params.b() * j0 : params.a() * j1 - Rational(2) * j0 - params.ab() * j0;
  c.b_numerator = odd ? params.b() * j0 : j0;
  c.a_scaled = c.a_numerator * params.ab().pow(-half);
  c.b_scaled = c.b_numerator * params.ab().pow(-(half + 1));
  return c;
}

Mat2 term_binet(const BiParams& params, long long n) {
  const BinetCoeffs c = binet_coeffs(params, n);
  const auto un = static_cast<unsigned long long>(n);
  const auto even_top = static_cast<unsigned long long>(2 * (n / 2) + 2);
  return c.a_scaled * root_power_quotient(c.alpha, c.beta, un) +
         c.b_scaled * root_power_quotient(c.alpha, c.beta, even_top);
}

Mat2 term_fast(const BiParams& params, long long n) {
  require_index(n);
  if (n == 0) return Mat2::identity();
  return assemble(params, n, scalar_term_fast(SeqKind::BpJacobsthal, params, n - 1),
                  scalar_term_fast(SeqKind::BpJacobsthal, params, n),
                  scalar_term_fast(SeqKind::BpJacobsthal, params, n + 1));
}

Rational det_closed(const BiParams& params, long long n) {
  require_index(n);
  const Rational power_of_two = Rational(2).pow(n);
  if (n % 2 == 0) return power_of_two;
  return power_of_two * (-(params.b() / params.a()));
}

}  // namespace bpj
