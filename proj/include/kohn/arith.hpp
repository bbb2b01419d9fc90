#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

// Small modular-arithmetic helpers shared by the lens, groups and families
// modules. Everything here works on machine integers; moduli are small.

namespace kohn::arith {

inline long mod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

inline long gcd(long a, long b) { return std::gcd(a, b); }

inline long lcm(long a, long b) { return std::lcm(a, b); }

inline long euler_phi(long n) {
  long result = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

inline bool is_prime(long n) {
  if (n < 2) return false;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

inline std::vector<long> prime_divisors(long n) {
  std::vector<long> out;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

/// Positive divisors of n in increasing order.
inline std::vector<long> divisors(long n) {
  std::vector<long> lo, hi;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      lo.push_back(d);
      if (d != n / d) hi.push_back(n / d);
    }
  }
  lo.insert(lo.end(), hi.rbegin(), hi.rend());
  return lo;
}

/// Residues in [0, m) prime to m. For m = 1 this is {0}.
inline std::vector<long> units(long m) {
  std::vector<long> out;
  if (m == 1) return {0};
  for (long c = 1; c < m; ++c)
    if (std::gcd(c, m) == 1) out.push_back(c);
  return out;
}

inline long pow_mod(long base, long exp, long m) {
  if (m == 1) return 0;
  __int128 result = 1, b = mod(base, m);
  while (exp > 0) {
    if (exp & 1) result = result * b % m;
    b = b * b % m;
    exp >>= 1;
  }
  return static_cast<long>(result);
}

/// Inverse of a modulo m; throws if gcd(a, m) != 1.
inline long inverse_mod(long a, long m) {
  long g = m, x = 0, x1 = 1, r = mod(a, m);
  while (r != 0) {
    long q = g / r;
    long t = g - q * r;
    g = r;
    r = t;
    t = x - q * x1;
    x = x1;
    x1 = t;
  }
  if (g != 1) throw std::invalid_argument("element not invertible modulo m");
  return mod(x, m);
}

/// Multiplicative order of r modulo m (requires gcd(r, m) = 1).
inline long multiplicative_order(long r, long m) {
  if (std::gcd(mod(r, m), m) != 1) throw std::invalid_argument("multiplicative order of a non-unit");
  if (m == 1) return 1;
  long x = mod(r, m), ord = 1;
  while (x != 1) {
    x = static_cast<long>(static_cast<__int128>(x) * mod(r, m) % m);
    ++ord;
  }
  return ord;
}

}  // namespace kohn::arith
