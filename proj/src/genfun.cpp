#include "kohn/genfun.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "kohn/arith.hpp"
#include "kohn/cyclotomic.hpp"
#include "kohn/error.hpp"
#include "kohn/groups.hpp"
#include "parallel.hpp"

namespace kohn::genfun {

Integer BivariatePoly::coefficient(int alpha, int beta) const {
  auto it = terms_.find({alpha, beta});
  return it == terms_.end() ? Integer(0) : it->second;
}

void BivariatePoly::add(int alpha, int beta, const Integer& value) {
  if (value == 0) return;
  auto [it, inserted] = terms_.try_emplace({alpha, beta}, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) terms_.erase(it);
  }
  bound_z_ = std::max(bound_z_, alpha);
  bound_w_ = std::max(bound_w_, beta);
}

void BivariatePoly::set(int alpha, int beta, Integer value) {
  if (value == 0) {
    terms_.erase({alpha, beta});
    return;
  }
  terms_[{alpha, beta}] = std::move(value);
  bound_z_ = std::max(bound_z_, alpha);
  bound_w_ = std::max(bound_w_, beta);
}

namespace {

int numerator_degree(const lens::LensSpace& L) { return L.n() * static_cast<int>(L.order() - 1); }

// Accumulator wide enough for products of two coefficients.
template <class Z>
using Wide = std::conditional_t<std::is_same_v<Z, std::int64_t>, __int128, Integer>;

// prod_i sum_{j<k} zeta_M^{-s_i m (k-1-j)} z^j as dense coefficient vectors:
// out[alpha][x] is the coefficient of zeta_M^x z^alpha.
template <class Z>
std::vector<std::vector<Z>> factor_product(const std::vector<long>& s, long k, long M, long m) {
  std::vector<std::vector<Z>> cur(1, std::vector<Z>(static_cast<std::size_t>(M), Z(0)));
  cur[0][0] = Z(1);
  for (long si : s) {
    std::vector<std::vector<Z>> next(cur.size() + static_cast<std::size_t>(k - 1),
                                     std::vector<Z>(static_cast<std::size_t>(M), Z(0)));
    for (long j = 0; j < k; ++j) {
      const long e = arith::mod(-static_cast<long>(static_cast<__int128>(si) * m % M) * ((k - 1 - j) % M), M);
      for (std::size_t a = 0; a < cur.size(); ++a) {
        auto& dst = next[a + static_cast<std::size_t>(j)];
        const auto& src = cur[a];
        for (long x = 0; x < M; ++x) {
          if (src[x] == 0) continue;
          long t = x + e;
          if (t >= M) t -= M;
          dst[t] = checked_add(dst[t], src[x]);
        }
      }
    }
    cur = std::move(next);
  }
  return cur;
}

// c_M(t) = sum over units u of zeta_M^{ut}, computed in Z[zeta_M] and
// certified to be a rational integer.
std::vector<long> compute_ramanujan_sums(long M) {
  std::vector<long> out(static_cast<std::size_t>(M));
  const auto units = arith::units(M);
  for (long t = 0; t < M; ++t) {
    cyclotomic::CycInt acc(M);
    for (long u : units) acc += cyclotomic::CycInt::root(M, u * t);
    auto v = acc.as_rational_integer();
    if (!v) throw ArithmeticError("Galois trace of a root of unity is not an integer");
    out[t] = static_cast<long>(*v);
  }
  return out;
}

const std::vector<long>& ramanujan_sums(long M) {
  static std::mutex mutex;
  static std::map<long, std::vector<long>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(M);
  if (it == cache.end()) it = cache.emplace(M, compute_ramanujan_sums(M)).first;
  return it->second;
}

template <class Z>
BivariatePoly p_poly_grouped(const lens::LensSpace& L) {
  using W = Wide<Z>;
  const long k = L.order();
  const int D = numerator_degree(L);
  const auto size = static_cast<std::size_t>(D + 1);
  std::vector<W> total(size * size, W(0));

  // The elements with gcd(m, k) = g are m = g u, u a unit mod k/g; their
  // terms are the Galois conjugates of the term for m = g.
  for (long g : arith::divisors(k)) {
    const long M = k / g;
    const auto A = factor_product<Z>(L.weights(), k, M, 1);
    const auto& c = ramanujan_sums(M);
    // total[a][b] += sum_{x,y} A[a]_x A[b]_y c(x - y), filled for b >= a.
    kohn::detail::parallel_for(D + 1, [&](long a) {
      std::vector<W> R(static_cast<std::size_t>(M), W(0));
      for (long y = 0; y < M; ++y) {
        W acc(0);
        for (long x = 0; x < M; ++x) {
          if (A[a][x] == 0) continue;
          long d = x - y;
          if (d < 0) d += M;
          acc = checked_add(acc, checked_mul(W(A[a][x]), W(c[d])));
        }
        R[y] = acc;
      }
      for (long b = a; b <= D; ++b) {
        W acc(0);
        for (long y = 0; y < M; ++y)
          if (A[b][y] != 0) acc = checked_add(acc, checked_mul(W(A[b][y]), R[y]));
        auto& slot = total[static_cast<std::size_t>(a) * size + static_cast<std::size_t>(b)];
        slot = checked_add(slot, acc);
      }
    });
  }

  BivariatePoly P(D, D);
  for (int a = 0; a <= D; ++a) {
    for (int b = a; b <= D; ++b) {
      Integer v = to_integer(total[static_cast<std::size_t>(a) * size + static_cast<std::size_t>(b)]);
      if (v == 0) continue;
      P.set(b, a, v);
      P.set(a, b, std::move(v));
    }
  }
  return P;
}

}  // namespace

BivariatePoly p_poly_direct(const lens::LensSpace& L) {
  if (L.is_sphere()) {
    BivariatePoly P(0, 0);
    P.set(0, 0, 1);
    return P;
  }
  try {
    return p_poly_grouped<std::int64_t>(L);
  } catch (const OverflowError&) {
    return p_poly_grouped<Integer>(L);
  }
}

BivariatePoly p_poly_direct_reference(const lens::LensSpace& L) {
  using cyclotomic::CycInt;
  using cyclotomic::CycPoly;
  const long k = L.order();
  CycPoly sum(k);
  for (long m = 0; m < k; ++m) {
    // prod_i (z^k - 1)/(z - xi^{-s_i m}) and its conjugate in w.
    CycPoly Z(k), W(k);
    Z.add_term({0, 0}, CycInt::constant(k, 1));
    W.add_term({0, 0}, CycInt::constant(k, 1));
    for (long si : L.weights()) {
      CycPoly fz(k), fw(k);
      for (long j = 0; j < k; ++j) {
        fz.add_term({static_cast<int>(j), 0}, CycInt::root(k, -si * m * (k - 1 - j)));
        fw.add_term({0, static_cast<int>(j)}, CycInt::root(k, si * m * (k - 1 - j)));
      }
      Z = Z * fz;
      W = W * fw;
    }
    sum = sum + Z * W;
  }
  const int D = numerator_degree(L);
  BivariatePoly P(D, D);
  for (const auto& [key, c] : sum.terms()) {
    auto v = c.as_rational_integer();
    if (!v) throw ArithmeticError("numerator coefficient is not a rational integer");
    P.set(key.first, key.second, *v);
  }
  return P;
}

BivariatePoly p_poly_from_dims(const lens::LensSpace& L, const harmonic::DimTable& T) {
  const int D = numerator_degree(L);
  if (T.pmax() < D || T.qmax() < D)
    throw std::invalid_argument("dimension table must cover 0 <= p,q <= n(k-1) = " + std::to_string(D));
  const int n = L.n();
  const int k = static_cast<int>(L.order());
  std::vector<Integer> binom(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) binom[i] = binomial(n, i) * ((i % 2) ? -1 : 1);

  // (1 - zw) P = k (z^k - 1)^n (w^k - 1)^n F, read off coefficientwise.
  std::vector<std::vector<Integer>> a(static_cast<std::size_t>(D) + 1, std::vector<Integer>(static_cast<std::size_t>(D) + 1));
  for (int al = 0; al <= D; ++al) {
    for (int be = 0; be <= D; ++be) {
      Integer s = 0;
      for (int i = 0; i <= n && al - i * k >= 0; ++i)
        for (int j = 0; j <= n && be - j * k >= 0; ++j) s += binom[i] * binom[j] * T.at(al - i * k, be - j * k);
      a[al][be] = k * s;
      if (al > 0 && be > 0) a[al][be] += a[al - 1][be - 1];
    }
  }
  BivariatePoly P(D, D);
  for (int al = 0; al <= D; ++al)
    for (int be = 0; be <= D; ++be) P.set(al, be, a[al][be]);
  return P;
}

BivariatePoly p_poly_recursive(const lens::LensSpace& L) {
  const int D = numerator_degree(L);
  return p_poly_from_dims(L, harmonic::dim_table(L, D, D));
}

harmonic::DimTable dims_from_p_poly(const lens::LensSpace& L, const BivariatePoly& P, int pmax, int qmax) {
  const int n = L.n();
  const int k = static_cast<int>(L.order());
  // 1/(x^k - 1)^n = (-1)^n sum_t C(t+n-1, n-1) x^{kt}; the two signs cancel.
  auto Q = [&](int a, int b) {
    if (a < 0 || b < 0) return Integer(0);
    Integer v = P.coefficient(a, b);
    if (a > 0 && b > 0) v -= P.coefficient(a - 1, b - 1);
    return v;
  };
  harmonic::DimTable T(lens::format_lens(L), n, pmax, qmax);
  for (int p = 0; p <= pmax; ++p) {
    for (int q = 0; q <= qmax; ++q) {
      Integer s = 0;
      for (int t = 0; k * t <= p; ++t)
        for (int u = 0; k * u <= q; ++u) {
          Integer qv = Q(p - k * t, q - k * u);
          if (qv != 0) s += binomial(t + n - 1, n - 1) * binomial(u + n - 1, n - 1) * qv;
        }
      if (s % k != 0) throw ArithmeticError("series coefficient not divisible by k");
      T.at(p, q) = s / k;
    }
  }
  return T;
}

std::vector<Integer> f_diag(const harmonic::Quotient& G, int l_max) {
  if (l_max < 0) throw std::invalid_argument("l_max must be nonnegative");
  const auto* L = std::get_if<lens::LensSpace>(&G);
  if (!L) return harmonic::laplace_multiplicities(harmonic::dim_table(G, l_max, l_max), l_max);

  const int n = L->n();
  const int k = static_cast<int>(L->order());
  // F(z,z) = (1/k) (1 - z^2) P(z,z) / (z^k - 1)^{2n}.
  const auto P = p_poly_direct(*L);
  std::vector<Integer> v(static_cast<std::size_t>(l_max) + 1);
  for (const auto& [key, c] : P.terms()) {
    const int d = key.first + key.second;
    if (d <= l_max) v[d] += c;
    if (d + 2 <= l_max) v[d + 2] -= c;
  }
  std::vector<Integer> out(static_cast<std::size_t>(l_max) + 1);
  for (int l = 0; l <= l_max; ++l) {
    Integer s = 0;
    for (int t = 0; k * t <= l; ++t) s += binomial(t + 2 * n - 1, 2 * n - 1) * v[l - k * t];
    if (s % k != 0) throw ArithmeticError("diagonal series coefficient not divisible by k");
    out[l] = s / k;
  }
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Equal:
      return "equal";
    case Verdict::EqualUpToBound:
      return "equal-up-to-bound";
    case Verdict::Different:
      return "different";
  }
  return "unknown";
}

namespace {

std::size_t group_order(const harmonic::Quotient& G) {
  if (auto* L = std::get_if<lens::LensSpace>(&G)) return static_cast<std::size_t>(L->order());
  return std::get<groups::MonomialGroup>(G).order();
}

groups::MonomialGroup as_group(const harmonic::Quotient& G) {
  if (auto* L = std::get_if<lens::LensSpace>(&G)) return groups::diagonal_group(*L);
  return std::get<groups::MonomialGroup>(G);
}

// First (p,q) in order of p+q, then p, where the tables differ.
std::optional<std::pair<int, int>> first_difference(const harmonic::DimTable& a, const harmonic::DimTable& b,
                                                    int bound) {
  for (int l = 0; l <= 2 * bound; ++l)
    for (int p = std::max(0, l - bound); p <= std::min(l, bound); ++p)
      if (a.at(p, l - p) != b.at(p, l - p)) return std::make_pair(p, l - p);
  return std::nullopt;
}

}  // namespace

int default_comparison_bound(const harmonic::Quotient& a, const harmonic::Quotient& b) {
  int bound = 2 * std::max(harmonic::ambient_dimension(a), harmonic::ambient_dimension(b));
  for (const auto* q : {&a, &b})
    if (auto* L = std::get_if<lens::LensSpace>(q)) bound = std::max(bound, numerator_degree(*L));
  return bound;
}

FComparison f_equal(const harmonic::Quotient& a, const harmonic::Quotient& b, std::optional<int> bound) {
  if (harmonic::ambient_dimension(a) != harmonic::ambient_dimension(b))
    throw std::invalid_argument("f_equal needs quotients of the same dimension");

  const auto* La = std::get_if<lens::LensSpace>(&a);
  const auto* Lb = std::get_if<lens::LensSpace>(&b);
  if (La && Lb && La->order() == Lb->order()) {
    if (p_poly_direct(*La) == p_poly_direct(*Lb)) return {Verdict::Equal, -1, {}, {}, "numerators agree"};
    const int D = numerator_degree(*La);
    auto diff = first_difference(harmonic::dim_table(a, D, D), harmonic::dim_table(b, D, D), D);
    if (!diff) throw ArithmeticError("numerators differ but dimension tables agree up to n(k-1)");
    return {Verdict::Different, -1, {}, diff, "numerators differ"};
  }

  const int B = bound.value_or(default_comparison_bound(a, b));
  if (B < 0) throw std::invalid_argument("comparison bound must be nonnegative");
  FComparison out{Verdict::EqualUpToBound, B, {}, {}, {}};
  if (!(La && Lb)) out.almost_conjugate = groups::almost_conjugate(as_group(a), as_group(b));
  out.first_difference = first_difference(harmonic::dim_table(a, B, B), harmonic::dim_table(b, B, B), B);
  if (out.almost_conjugate.value_or(false) && out.first_difference)
    throw ArithmeticError("almost conjugate groups with different dimension tables");

  if (group_order(a) != group_order(b)) {
    // dim P^G_{p,p} / dim P_{p,p} tends to 1/|G|, so F determines |G|.
    out.verdict = Verdict::Different;
    out.reason = "group orders differ";
  } else if (out.first_difference) {
    out.verdict = Verdict::Different;
    out.reason = "dimension tables differ";
  } else {
    out.reason = "dimension tables agree up to bound " + std::to_string(B);
  }
  return out;
}

}  // namespace kohn::genfun
