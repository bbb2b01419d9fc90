#include "kohn/families.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "kohn/arith.hpp"
#include "kohn/error.hpp"
#include "kohn/genfun.hpp"

namespace kohn::families {

bool is_gerson_member(const lens::LensSpace& L) {
  if (L.is_sphere()) return false;
  const long k = L.order();
  const auto& s = L.weights();
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (std::gcd(s[i], k) != 1) return false;
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (s[i] == s[j]) return false;
  }
  for (long si : s) {
    bool avoids = std::none_of(s.begin(), s.end(), [&](long sj) { return arith::mod(si + sj, k) == 0; });
    if (avoids) return true;
  }
  return false;
}

void for_each_gerson_member(int n, long k, const std::function<void(const lens::LensSpace&)>& visit) {
  if (n < 2 || k < 3) throw std::invalid_argument("G(n, k) needs n >= 2 and k >= 3");
  const auto u = arith::units(k);
  if (static_cast<std::size_t>(n) > u.size()) return;
  std::vector<long> s(static_cast<std::size_t>(n));
  std::function<void(int, std::size_t)> rec = [&](int pos, std::size_t from) {
    if (pos == n) {
      lens::LensSpace L(k, s);
      if (is_gerson_member(L)) visit(L);
      return;
    }
    for (std::size_t idx = from; idx + static_cast<std::size_t>(n - pos) <= u.size(); ++idx) {
      s[pos] = u[idx];
      rec(pos + 1, idx + 1);
    }
  };
  rec(0, 0);
}

std::vector<lens::LensSpace> gerson_members(int n, long k) {
  std::vector<lens::LensSpace> out;
  for_each_gerson_member(n, k, [&](const lens::LensSpace& L) { out.push_back(L); });
  return out;
}

GersonCensus gerson_census(int n, long k) {
  GersonCensus c{0, 0, {}};
  std::set<lens::LensSpace> classes;
  for_each_gerson_member(n, k, [&](const lens::LensSpace& L) {
    ++c.weight_sets;
    classes.insert(lens::cr_canonical_form(L));
  });
  Integer fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  c.ordered_members = fact * static_cast<long>(c.weight_sets);
  c.classes.assign(classes.begin(), classes.end());
  return c;
}

namespace {

void require_odd_prime(long k) {
  if (k < 5 || k % 2 == 0 || !arith::is_prime(k))
    throw std::invalid_argument(std::to_string(k) + " is not an odd prime >= 5");
}

}  // namespace

long gerson_class_count(long k, bool verify) {
  require_odd_prime(k);
  const long expected = (k - 3) / 2;
  if (verify) {
    const auto census = gerson_census(static_cast<int>(k - 3), k);
    if (static_cast<long>(census.classes.size()) != expected)
      throw ArithmeticError("G(k-3, k) has " + std::to_string(census.classes.size()) + " classes, expected " +
                            std::to_string(expected));
  }
  return expected;
}

bool verify_gerson_isospectral(long k) {
  require_odd_prime(k);
  std::optional<genfun::BivariatePoly> first;
  bool same = true;
  for_each_gerson_member(static_cast<int>(k - 3), k, [&](const lens::LensSpace& L) {
    if (!same) return;
    auto P = genfun::p_poly_direct(L);
    if (!first)
      first = std::move(P);
    else if (!(P == *first))
      same = false;
  });
  return same;
}

PairParams PairParams::make(long r, std::vector<long> a) {
  if (r <= 3 || r % 2 == 0) throw std::invalid_argument("r must be odd and greater than 3");
  if (a.size() < 3) throw std::invalid_argument("the pair construction needs n >= 3");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 0 || a[i] >= r) throw std::invalid_argument("a_i must lie in [0, r)");
    if (i > 0 && a[i] <= a[i - 1]) throw std::invalid_argument("a must be strictly increasing");
    for (std::size_t j = 0; j < i; ++j)
      if (std::gcd(a[i] - a[j], r) != 1) throw std::invalid_argument("a_i - a_j must be prime to r");
  }
  return PairParams{r, std::move(a)};
}

std::vector<PairParams> all_pair_params(long r, int n) {
  std::vector<PairParams> out;
  std::vector<long> a(static_cast<std::size_t>(n));
  std::function<void(int, long)> rec = [&](int pos, long from) {
    if (pos == n) {
      out.push_back(PairParams::make(r, a));
      return;
    }
    for (long v = from; v < r; ++v) {
      bool ok = true;
      for (int j = 0; j < pos && ok; ++j) ok = std::gcd(v - a[j], r) == 1;
      if (!ok) continue;
      a[pos] = v;
      rec(pos + 1, v + 1);
    }
  };
  rec(0, 0);
  return out;
}

std::pair<lens::LensSpace, lens::LensSpace> make_pair(const PairParams& P) {
  const long k = P.k();
  std::vector<long> plus, minus;
  for (long ai : P.a) {
    const long t = arith::pow_mod(P.theta(), ai, k);
    // (1 + r)^a = 1 + a r mod r^2 by the binomial theorem.
    if (t != arith::mod(ai * P.r + 1, k)) throw ArithmeticError("theta power identity failed");
    plus.push_back(t);
    minus.push_back(arith::inverse_mod(t, k));
  }
  return {lens::LensSpace(k, std::move(plus)), lens::LensSpace(k, std::move(minus))};
}

bool pair_equivalent(const PairParams& P) {
  const int n = P.n();
  std::vector<int> sigma(static_cast<std::size_t>(n), -1);
  // Enumerate involutions with floor(n/2) transpositions: pair off the
  // lowest unmatched index, allowing one fixed point when n is odd.
  std::function<bool(int)> rec = [&](int fixed_left) -> bool {
    int i = 0;
    while (i < n && sigma[i] >= 0) ++i;
    if (i == n) {
      const long target = arith::mod(P.a[0] + P.a[sigma[0]], P.r);
      for (int j = 1; j < n; ++j)
        if (arith::mod(P.a[j] + P.a[sigma[j]], P.r) != target) return false;
      return true;
    }
    if (fixed_left > 0) {
      sigma[i] = i;
      if (rec(fixed_left - 1)) return true;
      sigma[i] = -1;
    }
    for (int j = i + 1; j < n; ++j) {
      if (sigma[j] >= 0) continue;
      sigma[i] = j;
      sigma[j] = i;
      if (rec(fixed_left)) return true;
      sigma[i] = sigma[j] = -1;
    }
    return false;
  };
  return rec(n % 2);
}

}  // namespace kohn::families
