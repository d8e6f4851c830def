#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "bpj/params.hpp"

namespace bpj {

struct BenchSample {
  std::string method;  // "naive" or "fast"
  long long n = 0;
  double wall_ms = 0.0;
  /// Largest numerator/denominator bit length among the entries of J(n).
  std::size_t term_bits = 0;
};

struct BenchResult {
  std::vector<BenchSample> samples;
  /// Whether naive and fast produced identical J(n) at every rung.
  bool agreed = true;
};

/// 2^10, 2^12, 2^14, 2^16, 2^17.
std::vector<long long> default_bench_ladder();

/// Times term_recurrence ("naive") against term_fast ("fast") at each n of
/// the ladder. Each timing is the fastest of repeated runs, repeated until
/// `min_total_ms` has elapsed (at least once).
BenchResult run_bench(const BiParams& params, std::span<const long long> ladder, double min_total_ms = 50.0);

/// fast/naive wall-time ratio per rung, in ladder order.
std::vector<double> fast_to_naive_ratios(const BenchResult& result);

inline constexpr const char* kBenchCsvHeader = "method,n,wall_ms,term_bits";

std::string bench_sample_csv(const BenchSample& s);

}  // namespace bpj
