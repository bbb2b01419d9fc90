#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "kohn/arith.hpp"
#include "kohn/integer.hpp"

// Exact arithmetic in Z[zeta_N].
//
// A value is stored densely as a coefficient vector modulo x^N - 1, i.e. as
// an element of the group ring Z[Z/N]. That representation is not unique:
// equality and integrality are decided only after reducing modulo the N-th
// cyclotomic polynomial, which is the kernel of Z[Z/N] -> Z[zeta_N].

namespace kohn::cyclotomic {

/// Coefficients (lowest degree first) of the N-th cyclotomic polynomial.
/// Results are cached; the returned reference stays valid for the process.
const std::vector<Integer>& cyclotomic_polynomial(long N);

/// Same polynomial with int64 coefficients; throws OverflowError if any
/// coefficient does not fit.
const std::vector<std::int64_t>& cyclotomic_polynomial_i64(long N);

template <class Z>
const std::vector<Z>& cyclotomic_polynomial_as(long N) {
  if constexpr (std::is_same_v<Z, Integer>)
    return cyclotomic_polynomial(N);
  else
    return cyclotomic_polynomial_i64(N);
}

template <class Z>
class BasicCycInt {
 public:
  BasicCycInt() : BasicCycInt(1) {}

  explicit BasicCycInt(long modulus) : n_(modulus), c_(check_modulus(modulus)) {}

  BasicCycInt(long modulus, std::vector<Z> coeffs) : n_(modulus), c_(std::move(coeffs)) {
    check_modulus(modulus);
    if (static_cast<long>(c_.size()) != n_)
      throw std::invalid_argument("CycInt coefficient vector length must equal the modulus");
  }

  /// zeta_N^e.
  static BasicCycInt root(long modulus, long e) {
    BasicCycInt r(modulus);
    r.c_[arith::mod(e, modulus)] = Z(1);
    return r;
  }

  static BasicCycInt constant(long modulus, const Z& value) {
    BasicCycInt r(modulus);
    r.c_[0] = value;
    return r;
  }

  long modulus() const { return n_; }
  const std::vector<Z>& coeffs() const { return c_; }

  /// True when the stored vector is identically zero (a stronger condition
  /// than being zero in Z[zeta_N]).
  bool is_trivially_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Z& v) { return v == 0; });
  }

  BasicCycInt& operator+=(const BasicCycInt& o) {
    same_modulus(o);
    for (long i = 0; i < n_; ++i) c_[i] = checked_add(c_[i], o.c_[i]);
    return *this;
  }

  BasicCycInt& operator-=(const BasicCycInt& o) {
    same_modulus(o);
    for (long i = 0; i < n_; ++i) c_[i] = checked_sub(c_[i], o.c_[i]);
    return *this;
  }

  friend BasicCycInt operator+(BasicCycInt a, const BasicCycInt& b) { return a += b; }
  friend BasicCycInt operator-(BasicCycInt a, const BasicCycInt& b) { return a -= b; }

  BasicCycInt operator-() const {
    BasicCycInt r(n_);
    for (long i = 0; i < n_; ++i) r.c_[i] = checked_sub(Z(0), c_[i]);
    return r;
  }

  friend BasicCycInt operator*(const BasicCycInt& a, const BasicCycInt& b) {
    a.same_modulus(b);
    const long n = a.n_;
    // A single nonzero coefficient means a scaled root of unity: rotate.
    if (auto s = b.single_term()) return a.scaled_rotation(*s, b.c_[*s]);
    if (auto s = a.single_term()) return b.scaled_rotation(*s, a.c_[*s]);

    BasicCycInt r(n);
    if constexpr (std::is_same_v<Z, std::int64_t>) {
      std::vector<__int128> acc(n, 0);
      for (long i = 0; i < n; ++i) {
        const __int128 ai = a.c_[i];
        if (ai == 0) continue;
        long idx = i;
        for (long j = 0; j < n; ++j) {
          acc[idx] += ai * b.c_[j];
          if (++idx == n) idx = 0;
        }
      }
      for (long i = 0; i < n; ++i) r.c_[i] = narrow_i64(acc[i]);
    } else {
      for (long i = 0; i < n; ++i) {
        if (a.c_[i] == 0) continue;
        long idx = i;
        for (long j = 0; j < n; ++j) {
          if (b.c_[j] != 0) r.c_[idx] += a.c_[i] * b.c_[j];
          if (++idx == n) idx = 0;
        }
      }
    }
    return r;
  }

  BasicCycInt& operator*=(const BasicCycInt& o) { return *this = *this * o; }

  /// Multiply by zeta_N^e (a cyclic rotation of the coefficients).
  BasicCycInt times_root(long e) const { return scaled_rotation(arith::mod(e, n_), Z(1)); }

  /// Complex conjugate: zeta^j -> zeta^{-j}.
  BasicCycInt conjugate() const { return galois(-1); }

  /// Image under the ring endomorphism zeta^j -> zeta^{u j}. For u prime to
  /// N this is the Galois automorphism sigma_u.
  BasicCycInt galois(long u) const {
    BasicCycInt r(n_);
    for (long j = 0; j < n_; ++j) {
      if (c_[j] == 0) continue;
      long t = arith::mod(static_cast<long>(static_cast<__int128>(j) * u % n_), n_);
      r.c_[t] = checked_add(r.c_[t], c_[j]);
    }
    return r;
  }

  /// Remainder modulo Phi_N; length phi(N). This is the canonical form.
  std::vector<Z> reduced() const {
    const auto& phi = cyclotomic_polynomial_as<Z>(n_);
    const long deg = static_cast<long>(phi.size()) - 1;
    std::vector<Z> r = c_;
    for (long i = n_ - 1; i >= deg; --i) {
      const Z q = r[i];
      if (q == 0) continue;
      for (long j = 0; j < deg; ++j)
        if (phi[j] != 0) r[i - deg + j] = checked_sub(r[i - deg + j], checked_mul(q, phi[j]));
      r[i] = 0;
    }
    r.resize(deg);
    return r;
  }

  bool is_zero() const {
    auto r = reduced();
    return std::all_of(r.begin(), r.end(), [](const Z& v) { return v == 0; });
  }

  /// The integer n with value == n, if one exists.
  std::optional<Z> as_rational_integer() const {
    auto r = reduced();
    for (std::size_t i = 1; i < r.size(); ++i)
      if (r[i] != 0) return std::nullopt;
    return r.empty() ? Z(0) : r[0];
  }

  friend bool operator==(const BasicCycInt& a, const BasicCycInt& b) {
    if (a.n_ != b.n_) return false;
    return (a - b).is_zero();
  }

 private:
  static std::vector<Z> check_modulus(long modulus) {
    if (modulus < 1) throw std::invalid_argument("CycInt modulus must be positive");
    return std::vector<Z>(static_cast<std::size_t>(modulus), Z(0));
  }

  void same_modulus(const BasicCycInt& o) const {
    if (n_ != o.n_) throw std::invalid_argument("CycInt modulus mismatch");
  }

  std::optional<long> single_term() const {
    long found = -1;
    for (long i = 0; i < n_; ++i) {
      if (c_[i] != 0) {
        if (found >= 0) return std::nullopt;
        found = i;
      }
    }
    if (found < 0) return std::nullopt;
    return found;
  }

  BasicCycInt scaled_rotation(long shift, const Z& scale) const {
    BasicCycInt r(n_);
    for (long i = 0; i < n_; ++i) {
      if (c_[i] == 0) continue;
      long t = i + shift;
      if (t >= n_) t -= n_;
      r.c_[t] = scale == 1 ? c_[i] : checked_mul(c_[i], scale);
    }
    return r;
  }

  long n_;
  std::vector<Z> c_;
};

using CycInt = BasicCycInt<Integer>;
using FastCycInt = BasicCycInt<std::int64_t>;

template <class Z>
BasicCycInt<Z> cyc_add(const BasicCycInt<Z>& a, const BasicCycInt<Z>& b) {
  return a + b;
}

template <class Z>
BasicCycInt<Z> cyc_mul(const BasicCycInt<Z>& a, const BasicCycInt<Z>& b) {
  return a * b;
}

template <class Z>
std::optional<Z> is_rational_integer(const BasicCycInt<Z>& a) {
  return a.as_rational_integer();
}

/// Sparse polynomial in one or two formal variables with CycInt coefficients.
/// Univariate polynomials use exponent pairs (i, 0).
template <class Z>
class BasicCycPoly {
 public:
  using Key = std::pair<int, int>;

  explicit BasicCycPoly(long modulus) : n_(modulus) {}

  long modulus() const { return n_; }
  const std::map<Key, BasicCycInt<Z>>& terms() const { return terms_; }

  void add_term(Key k, const BasicCycInt<Z>& c) {
    if (c.modulus() != n_) throw std::invalid_argument("CycPoly coefficient modulus mismatch");
    if (c.is_trivially_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(k, c);
    } else {
      it->second += c;
      if (it->second.is_trivially_zero()) terms_.erase(it);
    }
  }

  BasicCycInt<Z> coefficient(Key k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? BasicCycInt<Z>(n_) : it->second;
  }

  int degree_first() const {
    int d = -1;
    for (const auto& [k, _] : terms_) d = std::max(d, k.first);
    return d;
  }

  friend BasicCycPoly operator+(BasicCycPoly a, const BasicCycPoly& b) {
    for (const auto& [k, c] : b.terms_) a.add_term(k, c);
    return a;
  }

  friend BasicCycPoly operator*(const BasicCycPoly& a, const BasicCycPoly& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("CycPoly modulus mismatch");
    BasicCycPoly r(a.n_);
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) r.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
    return r;
  }

 private:
  long n_;
  std::map<Key, BasicCycInt<Z>> terms_;
};

using CycPoly = BasicCycPoly<Integer>;
using FastCycPoly = BasicCycPoly<std::int64_t>;

}  // namespace kohn::cyclotomic
