#include "kohn/cyclotomic.hpp"

#include <map>
#include <mutex>

namespace kohn::cyclotomic {
namespace {

// Exact quotient of num by a monic divisor; throws if the division leaves a
// remainder.
std::vector<Integer> divide_exact(std::vector<Integer> num, const std::vector<Integer>& den) {
  const long dn = static_cast<long>(den.size()) - 1;
  const long nn = static_cast<long>(num.size()) - 1;
  std::vector<Integer> quot(static_cast<std::size_t>(nn - dn + 1));
  for (long i = nn; i >= dn; --i) {
    Integer q = num[i];
    quot[i - dn] = q;
    if (q == 0) continue;
    for (long j = 0; j <= dn; ++j) num[i - dn + j] -= q * den[j];
  }
  for (long i = 0; i < dn; ++i)
    if (num[i] != 0) throw ArithmeticError("cyclotomic division left a remainder");
  return quot;
}

std::mutex cache_mutex;
std::map<long, std::vector<Integer>> big_cache;
std::map<long, std::vector<std::int64_t>> small_cache;

const std::vector<Integer>& compute_locked(long N) {
  auto it = big_cache.find(N);
  if (it != big_cache.end()) return it->second;
  // x^N - 1 divided by Phi_d for every proper divisor d.
  std::vector<Integer> poly(static_cast<std::size_t>(N + 1));
  poly[0] = -1;
  poly[N] = 1;
  for (long d : arith::divisors(N)) {
    if (d == N) continue;
    poly = divide_exact(std::move(poly), compute_locked(d));
  }
  return big_cache.emplace(N, std::move(poly)).first->second;
}

}  // namespace

const std::vector<Integer>& cyclotomic_polynomial(long N) {
  if (N < 1) throw std::invalid_argument("cyclotomic_polynomial requires N >= 1");
  std::lock_guard lock(cache_mutex);
  return compute_locked(N);
}

const std::vector<std::int64_t>& cyclotomic_polynomial_i64(long N) {
  if (N < 1) throw std::invalid_argument("cyclotomic_polynomial requires N >= 1");
  std::lock_guard lock(cache_mutex);
  auto it = small_cache.find(N);
  if (it != small_cache.end()) return it->second;
  const auto& big = compute_locked(N);
  std::vector<std::int64_t> small;
  small.reserve(big.size());
  for (const auto& c : big) {
    if (c > std::numeric_limits<std::int64_t>::max() || c < std::numeric_limits<std::int64_t>::min())
      throw OverflowError("cyclotomic coefficient exceeds 64-bit range");
    small.push_back(static_cast<std::int64_t>(c));
  }
  return small_cache.emplace(N, std::move(small)).first->second;
}

}  // namespace kohn::cyclotomic
