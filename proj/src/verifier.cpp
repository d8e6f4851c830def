#include "bpj/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>

#include "bpj/genfunc.hpp"
#include "bpj/matrix_seq.hpp"

namespace bpj {

namespace {

Rational jhat(const BiParams& p, long long n) { return scalar_term(SeqKind::BpJacobsthal, p, n); }

// a^e b^(1-e) and a^(1-e) b^e for e = n mod 2.
Rational ab_mix(const BiParams& p, int e) { return e == 1 ? p.a() : p.b(); }
Rational ab_mix_complement(const BiParams& p, int e) { return e == 1 ? p.b() : p.a(); }

Rational t6_denominator(const BiParams& p, const Rational& x) { return x * x - (p.ab() + 4) * x + 4; }

}  // namespace

IdentityReport verify_cassini(const BiParams& params, long long n_max) {
  const Rational ratio = params.b() / params.a();
  return check_range(IdentityId::Cassini, params, {1, n_max}, [&](long long n) -> Residual {
    const int e = parity(n);
    const Rational lhs = ratio.pow(e) * jhat(params, n - 1) * jhat(params, n + 1) -
                         ratio.pow(1 - e) * jhat(params, n) * jhat(params, n);
    const Rational rhs = Rational(e == 1 ? -1 : 1) * Rational(2).pow(n - 1);
    return lhs - rhs;
  });
}

IdentityReport verify_det(const BiParams& params, long long n_max) {
  const std::vector<Mat2> terms = terms_recurrence(params, n_max + 1);
  return check_range(IdentityId::Det, params, {0, n_max}, [&](long long n) -> Residual {
    return det(terms[static_cast<std::size_t>(n)]) - det_closed(params, n);
  });
}

IdentityReport verify_doubling(const BiParams& params, long long m_max) {
  const std::vector<Mat2> terms = terms_recurrence(params, 2 * m_max + 2);
  const Rational p = params.ab() + 4;
  const Rational four(4);
  auto at = [&](long long k) -> const Mat2& { return terms[static_cast<std::size_t>(k)]; };
  return check_range(IdentityId::Doubling, params, {2, m_max}, [&](long long m) -> Residual {
    Mat2 even = at(2 * m) - (p * at(2 * m - 2) - four * at(2 * m - 4));
    if (!even.is_zero()) return even;
    return at(2 * m + 1) - (p * at(2 * m - 1) - four * at(2 * m - 3));
  });
}

Mat2 sum_t5_closed(const BiParams& params, long long n) {
  if (n < 1) throw IndexOutOfDomain("summation closed form needs n >= 1");
  const Rational denom = Rational(1) - params.ab();
  if (denom.is_zero()) throw std::domain_error("denominator 1-ab vanishes");
  const int e = parity(n);
  const Rational one(1);
  const Mat2 jn = term_recurrence(params, n);
  const Mat2 jn1 = term_recurrence(params, n - 1);
  const Mat2 numerator = mat2_linear_combination({
      {one - ab_mix(params, e), jn},
      {Rational(2) * (one - ab_mix_complement(params, e)), jn1},
      {params.a() - one, generator_matrix(params)},
      {Rational(2) * params.b() - params.ab() - one, Mat2::identity()},
  });
  return numerator * (one / denom);
}

Mat2 weighted_sum_t6_printed(const BiParams& params, const Rational& x, long long n) {
  if (n < 1) throw IndexOutOfDomain("summation closed form needs n >= 1");
  if (x.is_zero()) throw std::domain_error("x = 0");
  const Rational denom = t6_denominator(params, x);
  if (denom.is_zero()) throw std::domain_error("x^2-(ab+4)x+4 vanishes");
  const int e = parity(n);
  const Rational two(2);
  const Mat2 j0 = Mat2::identity();
  const Mat2 j1 = generator_matrix(params);
  const Mat2 a_j1 = params.a() * j1;
  const Mat2 numerator = mat2_linear_combination({
      {two - x - ab_mix(params, e) * x, term_recurrence(params, n)},
      {two * (two - ab_mix_complement(params, e) - x), term_recurrence(params, n - 1)},
      {x * x, j1 - params.b() * j0},
      {x, Rational(-2) * j1 + Rational(3) * params.b() * j0 + a_j1 - j0 - params.ab() * j0},
  });
  return numerator * (Rational(1) / denom);
}

Mat2 direct_weighted_sum(const BiParams& params, const Rational& x, long long n) {
  if (x.is_zero()) throw std::domain_error("x = 0");
  const Rational inv = Rational(1) / x;
  Rational weight(1);
  Mat2 sum;
  for (const auto& j : terms_recurrence(params, n)) {
    sum += weight * j;
    weight *= inv;
  }
  return sum;
}

IdentityReport verify_sum_t5(const BiParams& params, long long n_max) {
  const IndexRange range{1, n_max};
  if (params.ab() == Rational(1)) {
    return IdentityReport::skipped(IdentityId::SumT5, params, range, "denominator 1-ab vanishes");
  }
  const std::vector<Mat2> terms = terms_recurrence(params, n_max + 1);
  const Rational inv = Rational(1) / (Rational(1) - params.ab());
  const Rational one(1);
  const Mat2 tail = (params.a() - one) * terms[1] + (Rational(2) * params.b() - params.ab() - one) * terms[0];
  Mat2 running;
  return check_range(IdentityId::SumT5, params, range, [&](long long n) -> Residual {
    const auto i = static_cast<std::size_t>(n);
    running += terms[i - 1];
    const int e = parity(n);
    const Mat2 closed =
        ((one - ab_mix(params, e)) * terms[i] + Rational(2) * (one - ab_mix_complement(params, e)) * terms[i - 1] +
         tail) *
        inv;
    return closed - running;
  });
}

IdentityReport verify_weighted_sum_t6(const BiParams& params, const Rational& x, long long n_max) {
  const IndexRange range{1, n_max};
  if (x.is_zero()) {
    return IdentityReport::skipped(IdentityId::WeightedSumT6, params, range, "x = 0").with_x(x);
  }
  if (t6_denominator(params, x).is_zero()) {
    return IdentityReport::skipped(IdentityId::WeightedSumT6, params, range, "x^2-(ab+4)x+4 vanishes").with_x(x);
  }
  const std::vector<Mat2> terms = terms_recurrence(params, n_max + 1);
  const Rational inv_den = Rational(1) / t6_denominator(params, x);
  const Rational inv_x = Rational(1) / x;
  const Rational two(2);
  const Mat2 j0 = terms[0];
  const Mat2 j1 = terms[1];
  const Mat2 tail = x * x * (j1 - params.b() * j0) +
                    x * (Rational(-2) * j1 + Rational(3) * params.b() * j0 + params.a() * j1 - j0 - params.ab() * j0);
  Mat2 running;
  Rational weight(1);
  return check_range(IdentityId::WeightedSumT6, params, range,
                     [&](long long n) -> Residual {
                       const auto i = static_cast<std::size_t>(n);
                       running += weight * terms[i - 1];
                       weight *= inv_x;
                       const int e = parity(n);
                       const Mat2 printed = ((two - x - ab_mix(params, e) * x) * terms[i] +
                                             two * (two - ab_mix_complement(params, e) - x) * terms[i - 1] + tail) *
                                            inv_den;
                       return printed - running;
                     })
      .with_x(x);
}

IdentityReport verify_root_identities(const BiParams& params) {
  const QuadNum alpha = alpha_root(params);
  const QuadNum beta = beta_root(params);
  const Rational& ab = params.ab();
  const Rational two(2);
  return check_range(IdentityId::RootIdentities, params, {1, 5}, [&](long long k) -> Residual {
    switch (k) {
      case 1:
        return alpha + beta - QuadNum::constant(ab, params.disc());
      case 2:
        return alpha * beta + QuadNum::constant(two * ab, params.disc());
      case 3:
        return (alpha + two) * (beta + two) - QuadNum::constant(4, params.disc());
      case 4:
        return (alpha + two) - alpha * alpha / ab;
      default:
        return (beta + two) - beta * beta / ab;
    }
  });
}

IdentityReport verify_root_printed_claim(const BiParams& params) {
  const QuadNum alpha = alpha_root(params);
  const QuadNum beta = beta_root(params);
  return check_range(IdentityId::RootPrintedClaim, params, {0, 0}, [&](long long) -> Residual {
    return (beta + Rational(2)) - (-beta * alpha.inverse());
  });
}

IdentityReport verify_series_match(const BiParams& params, long long count) {
  const std::vector<Mat2> series = series_coeffs(build_ogf(params), count);
  const std::vector<Mat2> terms = terms_recurrence(params, count);
  return check_range(IdentityId::SeriesMatch, params, {0, count - 1}, [&](long long m) -> Residual {
    const auto i = static_cast<std::size_t>(m);
    return series[i] - terms[i];
  });
}

IdentityReport verify_cross_method(const BiParams& params, long long n_max) {
  const bool with_binet = !params.disc().is_zero();
  const std::vector<Mat2> terms = terms_recurrence(params, n_max + 1);
  IdentityReport report = check_range(IdentityId::CrossMethod, params, {0, n_max}, [&](long long n) -> Residual {
    const Mat2& rec = terms[static_cast<std::size_t>(n)];
    if (Mat2 d = term_closed(params, n) - rec; !d.is_zero()) return d;
    if (Mat2 d = term_fast(params, n) - rec; !d.is_zero()) return d;
    if (with_binet) return term_binet(params, n) - rec;
    return Mat2::zero();
  });
  if (!with_binet) report.reason = "binet excluded: ab(ab+8) = 0";
  return report;
}

GridSpec default_grid() {
  GridSpec g;
  g.a_values = {-3, -2, -1, 1, 2, 3};
  g.b_values = g.a_values;
  g.n_max = 128;
  g.x_values = {1, 2, Rational(1, 2), 3};
  return g;
}

std::vector<IdentityReport> run_grid(const GridSpec& spec) {
  struct Task {
    BiParams params;
    IdentityId suite;
    std::optional<Rational> x;
  };

  std::vector<IdentityId> suites = spec.suites;
  if (suites.empty()) suites.assign(std::begin(kAllIdentities), std::end(kAllIdentities));
  if (std::find(suites.begin(), suites.end(), IdentityId::RootIdentities) != suites.end() &&
      std::find(suites.begin(), suites.end(), IdentityId::RootPrintedClaim) == suites.end()) {
    suites.push_back(IdentityId::RootPrintedClaim);
  }
  std::vector<Rational> xs = spec.x_values;
  if (xs.empty()) xs = default_grid().x_values;

  std::vector<Task> tasks;
  for (const auto& a : spec.a_values) {
    for (const auto& b : spec.b_values) {
      const BiParams params(a, b);
      for (IdentityId s : suites) {
        if (s == IdentityId::WeightedSumT6) {
          for (const auto& x : xs) tasks.push_back({params, s, x});
        } else {
          tasks.push_back({params, s, std::nullopt});
        }
      }
    }
  }

  const long long n = spec.n_max;
  auto run = [n](const Task& t) -> IdentityReport {
    switch (t.suite) {
      case IdentityId::Cassini:
        return verify_cassini(t.params, n);
      case IdentityId::Det:
        return verify_det(t.params, n);
      case IdentityId::Doubling:
        return verify_doubling(t.params, std::max<long long>(2, (n - 1) / 2));
      case IdentityId::LucasRelations:
        return verify_lucas_relations(t.params, n);
      case IdentityId::SumT5:
        return verify_sum_t5(t.params, n);
      case IdentityId::WeightedSumT6:
        return verify_weighted_sum_t6(t.params, *t.x, n);
      case IdentityId::RootIdentities:
        return verify_root_identities(t.params);
      case IdentityId::RootPrintedClaim:
        return verify_root_printed_claim(t.params);
      case IdentityId::SeriesMatch:
        return verify_series_match(t.params, std::max<long long>(1, n));
      case IdentityId::CrossMethod:
        return verify_cross_method(t.params, n);
    }
    throw std::logic_error("unhandled suite");
  };

  std::vector<std::optional<IdentityReport>> slots(tasks.size());
  unsigned jobs = spec.jobs != 0 ? spec.jobs : std::max(1U, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(1, tasks.size())));
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        slots[i] = run(tasks[i]);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(jobs);
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);

  std::vector<IdentityReport> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  std::stable_sort(out.begin(), out.end(), [](const IdentityReport& l, const IdentityReport& r) {
    if (auto c = l.params <=> r.params; c != 0) return c < 0;
    if (l.identity != r.identity) return l.identity < r.identity;
    return l.x < r.x;
  });
  return out;
}

GridSummary summarize(const std::vector<IdentityReport>& reports) {
  GridSummary s;
  for (const auto& r : reports) {
    switch (r.status) {
      case Status::Pass:
        ++s.passed;
        break;
      case Status::Fail:
        ++s.failed;
        if (is_known_erratum(r)) ++s.errata_failed;
        break;
      case Status::Skipped:
        ++s.skipped;
        break;
    }
  }
  return s;
}

int verdict_exit_code(const std::vector<IdentityReport>& reports, bool expect_errata) {
  for (const auto& r : reports) {
    if (r.status != Status::Fail) continue;
    if (expect_errata && is_known_erratum(r)) continue;
    return 1;
  }
  return 0;
}

}  // namespace bpj
