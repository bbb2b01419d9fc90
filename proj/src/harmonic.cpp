#include "kohn/harmonic.hpp"

#include <map>
#include <stdexcept>

#include "kohn/cyclotomic.hpp"
#include "kohn/error.hpp"
#include "parallel.hpp"

namespace kohn::harmonic {

int ambient_dimension(const Quotient& q) {
  return std::visit(
      [](const auto& g) {
        if constexpr (std::is_same_v<std::decay_t<decltype(g)>, lens::LensSpace>)
          return g.n();
        else
          return g.dim();
      },
      q);
}

std::string describe(const Quotient& q) {
  if (auto* L = std::get_if<lens::LensSpace>(&q)) return lens::format_lens(*L);
  return std::get<groups::MonomialGroup>(q).label();
}

DimTable::DimTable(std::string descriptor, int n, int pmax, int qmax)
    : descriptor_(std::move(descriptor)), n_(n), pmax_(pmax), qmax_(qmax) {
  if (pmax < 0 || qmax < 0) throw std::invalid_argument("DimTable bounds must be nonnegative");
  values_.assign(static_cast<std::size_t>(pmax + 1) * static_cast<std::size_t>(qmax + 1), Integer(0));
}

std::size_t DimTable::index(int p, int q) const {
  if (p < 0 || q < 0 || p > pmax_ || q > qmax_) throw std::out_of_range("DimTable index out of range");
  return static_cast<std::size_t>(p) * static_cast<std::size_t>(qmax_ + 1) + static_cast<std::size_t>(q);
}

Integer DimTable::get_or_zero(int p, int q) const {
  if (p < 0 || q < 0 || p > pmax_ || q > qmax_) return 0;
  return at(p, q);
}

namespace {

using kohn::detail::parallel_for;

template <class T>
Integer residue_inner(const std::vector<T>& counts, long k, int p, int q) {
  const auto K = static_cast<std::size_t>(k);
  const T* a = counts.data() + static_cast<std::size_t>(p) * K;
  const T* b = counts.data() + static_cast<std::size_t>(q) * K;
  if constexpr (std::is_same_v<T, std::int64_t>) {
    __int128 acc = 0;
    for (std::size_t c = 0; c < K; ++c) {
      __int128 term = static_cast<__int128>(a[c]) * b[c];
      if (__builtin_add_overflow(acc, term, &acc)) throw OverflowError("residue inner product overflow");
    }
    return to_integer(acc);
  } else {
    Integer acc = 0;
    for (std::size_t c = 0; c < K; ++c) acc += a[c] * b[c];
    return acc;
  }
}

// Table of dim P^Gamma_{p,q} for a lens space from the residue counts.
template <class T>
std::vector<Integer> lens_p_table(const lens::LensSpace& L, int pmax, int qmax, bool parallel) {
  const int bound = std::max(pmax, qmax);
  const auto counts = detail::residue_counts<T>(L.weights(), L.order(), bound);
  std::vector<Integer> out(static_cast<std::size_t>(pmax + 1) * static_cast<std::size_t>(qmax + 1));
  auto row = [&](int p) {
    for (int q = 0; q <= qmax; ++q)
      out[static_cast<std::size_t>(p) * static_cast<std::size_t>(qmax + 1) + static_cast<std::size_t>(q)] =
          residue_inner(counts, L.order(), p, q);
  };
  if (parallel)
    parallel_for(pmax + 1, row);
  else
    for (int p = 0; p <= pmax; ++p) row(p);
  return out;
}

std::vector<Integer> lens_p_table_any(const lens::LensSpace& L, int pmax, int qmax, bool parallel) {
  try {
    return lens_p_table<std::int64_t>(L, pmax, qmax, parallel);
  } catch (const OverflowError&) {
    return lens_p_table<Integer>(L, pmax, qmax, parallel);
  }
}

// Complete homogeneous sums h_0..h_bound of the eigenvalues of one element
// per spectrum class, weighted by the class size.
template <class Z>
struct ClassSeries {
  Z count;
  std::vector<cyclotomic::BasicCycInt<Z>> h;
  std::vector<cyclotomic::BasicCycInt<Z>> h_conj;
};

template <class Z>
std::vector<ClassSeries<Z>> class_series(const groups::MonomialGroup& G, int bound) {
  using C = cyclotomic::BasicCycInt<Z>;
  const long N = G.root_order();
  std::map<groups::Spectrum, std::pair<std::size_t, const groups::MonomialElement*>> census;
  for (const auto& g : G.elements()) {
    auto& slot = census[groups::spectrum(g)];
    if (slot.first++ == 0) slot.second = &g;
  }
  std::vector<ClassSeries<Z>> out;
  out.reserve(census.size());
  for (const auto& [_, entry] : census) {
    ClassSeries<Z> cs{Z(static_cast<long>(entry.first)), std::vector<C>(static_cast<std::size_t>(bound) + 1, C(N)), {}};
    cs.h[0] = C::constant(N, Z(1));
    // 1/det(1 - x g) = prod over cycles of 1/(1 - zeta^e x^len).
    for (const auto& f : groups::char_poly_factors(*entry.second))
      for (int p = f.length; p <= bound; ++p) cs.h[p] += cs.h[p - f.length].times_root(f.exponent);
    cs.h_conj.reserve(cs.h.size());
    for (const auto& v : cs.h) cs.h_conj.push_back(v.conjugate());
    out.push_back(std::move(cs));
  }
  return out;
}

template <class Z>
Integer character_average(const std::vector<ClassSeries<Z>>& series, long N, std::size_t order, int p, int q) {
  using C = cyclotomic::BasicCycInt<Z>;
  C sum(N);
  for (const auto& cs : series) sum += C::constant(N, cs.count) * (cs.h_conj[p] * cs.h[q]);
  auto value = sum.as_rational_integer();
  if (!value) throw ArithmeticError("character average is not a rational integer");
  Integer v = to_integer(*value);
  if (v % order != 0) throw ArithmeticError("character sum is not divisible by the group order");
  return v / order;
}

template <class Z>
std::vector<Integer> group_p_table(const groups::MonomialGroup& G, int pmax, int qmax, bool parallel) {
  const auto series = class_series<Z>(G, std::max(pmax, qmax));
  std::vector<Integer> out(static_cast<std::size_t>(pmax + 1) * static_cast<std::size_t>(qmax + 1));
  auto row = [&](int p) {
    for (int q = 0; q <= qmax; ++q)
      out[static_cast<std::size_t>(p) * static_cast<std::size_t>(qmax + 1) + static_cast<std::size_t>(q)] =
          character_average(series, G.root_order(), G.order(), p, q);
  };
  if (parallel)
    parallel_for(pmax + 1, row);
  else
    for (int p = 0; p <= pmax; ++p) row(p);
  return out;
}

std::vector<Integer> group_p_table_any(const groups::MonomialGroup& G, int pmax, int qmax, bool parallel) {
  try {
    return group_p_table<std::int64_t>(G, pmax, qmax, parallel);
  } catch (const OverflowError&) {
    return group_p_table<Integer>(G, pmax, qmax, parallel);
  }
}

DimTable h_from_p(std::string descriptor, int n, int pmax, int qmax, const std::vector<Integer>& P) {
  DimTable T(std::move(descriptor), n, pmax, qmax);
  const auto stride = static_cast<std::size_t>(qmax + 1);
  for (int p = 0; p <= pmax; ++p) {
    for (int q = 0; q <= qmax; ++q) {
      Integer v = P[static_cast<std::size_t>(p) * stride + static_cast<std::size_t>(q)];
      if (p > 0 && q > 0) v -= P[static_cast<std::size_t>(p - 1) * stride + static_cast<std::size_t>(q - 1)];
      if (v < 0) throw ArithmeticError("negative harmonic dimension");
      T.at(p, q) = std::move(v);
    }
  }
  return T;
}

void check_degrees(int p, int q) {
  if (p < 0 || q < 0) throw std::invalid_argument("bidegree must be nonnegative");
}

}  // namespace

Integer dim_P_invariant_lens(const lens::LensSpace& L, int p, int q) {
  check_degrees(p, q);
  const int bound = std::max(p, q);
  try {
    return residue_inner(detail::residue_counts<std::int64_t>(L.weights(), L.order(), bound), L.order(), p, q);
  } catch (const OverflowError&) {
    return residue_inner(detail::residue_counts<Integer>(L.weights(), L.order(), bound), L.order(), p, q);
  }
}

Integer dim_P_invariant_group(const groups::MonomialGroup& G, int p, int q) {
  check_degrees(p, q);
  const int bound = std::max(p, q);
  try {
    return character_average(class_series<std::int64_t>(G, bound), G.root_order(), G.order(), p, q);
  } catch (const OverflowError&) {
    return character_average(class_series<Integer>(G, bound), G.root_order(), G.order(), p, q);
  }
}

Integer dim_H_invariant(const lens::LensSpace& L, int p, int q) {
  check_degrees(p, q);
  Integer v = dim_P_invariant_lens(L, p, q);
  if (p > 0 && q > 0) v -= dim_P_invariant_lens(L, p - 1, q - 1);
  return v;
}

Integer dim_H_invariant(const groups::MonomialGroup& G, int p, int q) {
  check_degrees(p, q);
  Integer v = dim_P_invariant_group(G, p, q);
  if (p > 0 && q > 0) v -= dim_P_invariant_group(G, p - 1, q - 1);
  return v;
}

Integer dim_H_invariant(const Quotient& G, int p, int q) {
  return std::visit([&](const auto& g) { return dim_H_invariant(g, p, q); }, G);
}

DimTable dim_table(const Quotient& G, int pmax, int qmax) {
  if (pmax < 0 || qmax < 0) throw std::invalid_argument("DimTable bounds must be nonnegative");
  std::vector<Integer> P;
  if (auto* L = std::get_if<lens::LensSpace>(&G))
    P = lens_p_table_any(*L, pmax, qmax, true);
  else
    P = group_p_table_any(std::get<groups::MonomialGroup>(G), pmax, qmax, true);
  return h_from_p(describe(G), ambient_dimension(G), pmax, qmax, P);
}

DimTable dim_table_reference(const Quotient& G, int pmax, int qmax) {
  DimTable T(describe(G), ambient_dimension(G), pmax, qmax);
  for (int p = 0; p <= pmax; ++p)
    for (int q = 0; q <= qmax; ++q) T.at(p, q) = dim_H_invariant(G, p, q);
  return T;
}

Integer kohn_multiplicity(const Quotient& G, long r) {
  if (r < 0) throw std::invalid_argument("kohn_multiplicity needs r >= 0");
  if (r == 0) throw std::invalid_argument("eigenvalue 0 has infinite multiplicity");
  const long n = ambient_dimension(G);
  Integer total = 0;
  for (long q : arith::divisors(r)) {
    const long p = r / q - n + 1;
    if (p < 0) continue;
    total += dim_H_invariant(G, static_cast<int>(p), static_cast<int>(q));
  }
  return total;
}

std::vector<Integer> laplace_multiplicities(const DimTable& T, int l_max) {
  if (l_max < 0) throw std::invalid_argument("l_max must be nonnegative");
  if (T.pmax() < l_max || T.qmax() < l_max) throw std::invalid_argument("DimTable too small for l_max");
  std::vector<Integer> out(static_cast<std::size_t>(l_max) + 1);
  for (int l = 0; l <= l_max; ++l)
    for (int p = 0; p <= l; ++p) out[l] += T.at(p, l - p);
  return out;
}

std::vector<Integer> laplace_multiplicities(const Quotient& G, int l_max) {
  if (l_max < 0) throw std::invalid_argument("l_max must be nonnegative");
  return laplace_multiplicities(dim_table(G, l_max, l_max), l_max);
}

}  // namespace kohn::harmonic
