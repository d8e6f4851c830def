#pragma once

#include <vector>

#include "bpj/mat2.hpp"
#include "bpj/params.hpp"
#include "bpj/quad.hpp"
#include "bpj/rational.hpp"

namespace bpj {

/// J1 = [[b, 2b/a], [1, 0]].
Mat2 generator_matrix(const BiParams& params);

/// J(n) by the defining recurrence: J(n) = a J(n-1) + 2 J(n-2) for even n,
/// b J(n-1) + 2 J(n-2) for odd n, starting from J0 = I and J1. O(n).
Mat2 term_recurrence(const BiParams& params, long long n);

/// J0 .. J(count-1) by the defining recurrence.
std::vector<Mat2> terms_recurrence(const BiParams& params, long long count);

/// J(n) assembled from scalar terms:
///   [[(b/a)^e j(n+1), 2(b/a) j(n)], [j(n), 2(b/a)^e j(n-1)]],  e = n mod 2.
Mat2 term_closed(const BiParams& params, long long n);

/// Coefficient matrices of the Binet form for index n.
///
/// The printed A and B carry a factor 1/(alpha - beta). Here that factor is
/// kept out so everything stays rational:
///   A = a_scaled / (alpha - beta),  B = b_scaled / (alpha - beta).
struct BinetCoeffs {
  long long n = 0;
  /// J1 - b J0 for odd n, a J1 - 2 J0 - ab J0 for even n.
  Mat2 a_numerator;
  /// b^e J0.
  Mat2 b_numerator;
  /// a_numerator / (ab)^floor(n/2).
  Mat2 a_scaled;
  /// b_numerator / (ab)^(floor(n/2)+1).
  Mat2 b_scaled;
  QuadNum alpha;
  QuadNum beta;
};

/// alpha = (ab + sqrt(D))/2, beta = (ab - sqrt(D))/2, D = ab(ab+8).
QuadNum alpha_root(const BiParams& params);
QuadNum beta_root(const BiParams& params);

/// Throws DegenerateDiscriminant when D = 0.
BinetCoeffs binet_coeffs(const BiParams& params, long long n);

/// J(n) = A (alpha^n - beta^n) + B (alpha^(2 floor(n/2)+2) - beta^(2 floor(n/2)+2)),
/// evaluated in Q(sqrt D). Throws DegenerateDiscriminant when D = 0.
Mat2 term_binet(const BiParams& params, long long n);

/// J(n) from j(n-1), j(n), j(n+1) computed in O(log n) by scalar_term_fast.
Mat2 term_fast(const BiParams& params, long long n);

/// 2^n (-b/a)^(n mod 2).
Rational det_closed(const BiParams& params, long long n);

}  // namespace bpj
