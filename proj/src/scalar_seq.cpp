#include "bpj/scalar_seq.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <vector>

#include "bpj/mat2.hpp"

namespace bpj {

namespace {

struct KindInfo {
  SeqKind kind;
  std::string_view name;
  bool a_on_even;
  long tail;
};

constexpr KindInfo kKinds[] = {
    {SeqKind::BpJacobsthal, "jhat", true, 2},
    {SeqKind::BpJacobsthalLucas, "jlucas", false, 2},
    {SeqKind::BpFibonacci, "fib", true, 1},
    {SeqKind::BpLucas, "lucas", false, 1},
};

const KindInfo& info(SeqKind kind) {
  for (const auto& k : kKinds) {
    if (k.kind == kind) return k;
  }
  throw std::logic_error("unknown sequence kind");
}

Rational initial_term(SeqKind kind, const BiParams& params, long long n) {
  const bool lucas_like = kind == SeqKind::BpJacobsthalLucas || kind == SeqKind::BpLucas;
  if (n == 0) return lucas_like ? Rational(2) : Rational(0);
  return lucas_like ? params.a() : Rational(1);
}

Rational next_term(SeqKind kind, const BiParams& params, long long n, const Rational& prev1, const Rational& prev2) {
  return step_coefficient(kind, params, n) * prev1 + Rational(tail_weight(kind)) * prev2;
}

// Memo of x0..xk per (kind, a, b). Indices beyond kMaxIndex are computed by
// rolling forward from the last stored pair without being stored.
class TermCache {
 public:
  static constexpr long long kMaxIndex = 8192;
  static constexpr std::size_t kMaxKeys = 256;

  Rational get(SeqKind kind, const BiParams& params, long long n) {
    const Key key{kind, params.a(), params.b()};
    {
      std::shared_lock lock(mutex_);
      if (auto it = table_.find(key); it != table_.end() && n < static_cast<long long>(it->second.size())) {
        return it->second[static_cast<std::size_t>(n)];
      }
    }
    std::unique_lock lock(mutex_);
    if (table_.size() >= kMaxKeys && table_.find(key) == table_.end()) table_.clear();
    auto& terms = table_[key];
    if (terms.empty()) {
      terms.push_back(initial_term(kind, params, 0));
      terms.push_back(initial_term(kind, params, 1));
    }
    const long long stored_target = std::min(n, kMaxIndex);
    for (auto k = static_cast<long long>(terms.size()); k <= stored_target; ++k) {
      const auto i = static_cast<std::size_t>(k);
      terms.push_back(next_term(kind, params, k, terms[i - 1], terms[i - 2]));
    }
    if (n <= kMaxIndex) return terms[static_cast<std::size_t>(n)];

    Rational prev2 = terms[terms.size() - 2];
    Rational prev1 = terms.back();
    lock.unlock();
    for (long long k = kMaxIndex + 1; k <= n; ++k) {
      Rational cur = next_term(kind, params, k, prev1, prev2);
      prev2 = std::move(prev1);
      prev1 = std::move(cur);
    }
    return prev1;
  }

  void clear() {
    std::unique_lock lock(mutex_);
    table_.clear();
  }

 private:
  struct Key {
    SeqKind kind;
    Rational a;
    Rational b;
    friend auto operator<=>(const Key&, const Key&) = default;
  };

  std::shared_mutex mutex_;
  std::map<Key, std::vector<Rational>> table_;
};

TermCache& cache() {
  static TermCache instance;
  return instance;
}

}  // namespace

std::string_view kind_name(SeqKind kind) { return info(kind).name; }

std::optional<SeqKind> parse_kind(std::string_view name) {
  for (const auto& k : kKinds) {
    if (k.name == name) return k.kind;
  }
  return std::nullopt;
}

const Rational& step_coefficient(SeqKind kind, const BiParams& params, long long n) {
  const bool even = n % 2 == 0;
  return even == info(kind).a_on_even ? params.a() : params.b();
}

long tail_weight(SeqKind kind) { return info(kind).tail; }

Rational scalar_term(SeqKind kind, const BiParams& params, long long n) {
  if (n == -1) {
    if (kind == SeqKind::BpJacobsthal) return Rational(1, 2);
    throw IndexOutOfDomain("index -1 is only defined for the bi-periodic Jacobsthal sequence");
  }
  if (n < -1) throw IndexOutOfDomain("sequence index " + std::to_string(n) + " is out of domain");
  if (n <= 1) return initial_term(kind, params, n);
  return cache().get(kind, params, n);
}

Rational scalar_term_fast(SeqKind kind, const BiParams& params, long long n) {
  if (n < 0) throw IndexOutOfDomain("fast evaluation needs a non-negative index, got " + std::to_string(n));
  const long long e = n % 2;
  const long long m = n / 2;
  const Rational x0 = initial_term(kind, params, 0);
  const Rational x1 = initial_term(kind, params, 1);
  const Rational x2 = next_term(kind, params, 2, x1, x0);
  // y(0), y(1) of the parity class containing n.
  const Rational y0 = e == 0 ? x0 : x1;
  const Rational y1 = e == 0 ? x2 : next_term(kind, params, 3, x2, x1);
  if (m == 0) return y0;
  if (m == 1) return y1;

  const long w = tail_weight(kind);
  const Mat2 companion{params.ab() + Rational(2 * w), Rational(-w * w), 1, 0};
  const Mat2 p = mat2_pow(companion, static_cast<unsigned long long>(m - 1));
  return p.e11 * y1 + p.e12 * y0;
}

Rational classical_jacobsthal(long long n) {
  static const BiParams unit{1, 1};
  return scalar_term(SeqKind::BpJacobsthal, unit, n);
}

Rational classical_jacobsthal_lucas(long long n) {
  static const BiParams unit{1, 1};
  return scalar_term(SeqKind::BpJacobsthalLucas, unit, n);
}

IdentityReport verify_lucas_relations(const BiParams& params, long long n_max) {
  const Rational ab8 = params.ab() + 8;
  auto j = [&](long long n) { return scalar_term(SeqKind::BpJacobsthal, params, n); };
  auto c = [&](long long n) { return scalar_term(SeqKind::BpJacobsthalLucas, params, n); };
  IdentityReport report =
      check_range(IdentityId::LucasRelations, params, {1, n_max}, [&](long long n) -> Residual {
        Rational first = c(n) - (Rational(2) * j(n - 1) + j(n + 1));
        if (!first.is_zero()) return first;
        return ab8 * j(n) - (Rational(2) * c(n - 1) + c(n + 1));
      });
  return report;
}

void clear_scalar_cache() { cache().clear(); }

}  // namespace bpj
