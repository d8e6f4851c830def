#include "bpj/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <limits>

#include "bpj/matrix_seq.hpp"

namespace bpj {

namespace {

std::size_t term_bits(const Mat2& m) {
  return std::max({m.e11.bit_length(), m.e12.bit_length(), m.e21.bit_length(), m.e22.bit_length()});
}

template <class F>
double best_wall_ms(F&& f, double min_total_ms, Mat2& out) {
  using clock = std::chrono::steady_clock;
  double best = std::numeric_limits<double>::infinity();
  double total = 0.0;
  do {
    const auto start = clock::now();
    out = f();
    const double ms = std::chrono::duration<double, std::milli>(clock::now() - start).count();
    best = std::min(best, ms);
    total += ms;
  } while (total < min_total_ms);
  return best;
}

}  // namespace

std::vector<long long> default_bench_ladder() { return {1LL << 10, 1LL << 12, 1LL << 14, 1LL << 16, 1LL << 17}; }

BenchResult run_bench(const BiParams& params, std::span<const long long> ladder, double min_total_ms) {
  BenchResult result;
  for (const long long n : ladder) {
    Mat2 naive;
    Mat2 fast;
    const double naive_ms = best_wall_ms([&] { return term_recurrence(params, n); }, min_total_ms, naive);
    const double fast_ms = best_wall_ms([&] { return term_fast(params, n); }, min_total_ms, fast);
    const std::size_t bits = term_bits(naive);
    result.samples.push_back({"naive", n, naive_ms, bits});
    result.samples.push_back({"fast", n, fast_ms, term_bits(fast)});
    if (naive != fast) result.agreed = false;
  }
  return result;
}

std::vector<double> fast_to_naive_ratios(const BenchResult& result) {
  std::vector<double> ratios;
  for (std::size_t i = 0; i + 1 < result.samples.size(); i += 2) {
    const BenchSample& naive = result.samples[i];
    const BenchSample& fast = result.samples[i + 1];
    ratios.push_back(naive.wall_ms > 0 ? fast.wall_ms / naive.wall_ms : std::numeric_limits<double>::infinity());
  }
  return ratios;
}

std::string bench_sample_csv(const BenchSample& s) {
  char ms[64];
  std::snprintf(ms, sizeof ms, "%.4f", s.wall_ms);
  return s.method + "," + std::to_string(s.n) + "," + ms + "," + std::to_string(s.term_bits);
}

}  // namespace bpj
