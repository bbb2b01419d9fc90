#include "kohn/groups.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "kohn/arith.hpp"
#include "kohn/error.hpp"

namespace kohn::groups {

MonomialElement::MonomialElement(long root_order, std::vector<int> perm, std::vector<long> exps)
    : n_(root_order), perm_(std::move(perm)), exps_(std::move(exps)) {
  if (n_ < 1) throw std::invalid_argument("root order must be positive");
  if (perm_.size() != exps_.size()) throw std::invalid_argument("perm and exps lengths differ");
  std::vector<bool> seen(perm_.size(), false);
  for (int p : perm_) {
    if (p < 0 || p >= static_cast<int>(perm_.size()) || seen[p]) throw std::invalid_argument("perm is not a bijection");
    seen[p] = true;
  }
  for (auto& e : exps_) e = arith::mod(e, n_);
}

MonomialElement MonomialElement::identity(int dim, long root_order) {
  std::vector<int> perm(static_cast<std::size_t>(dim));
  std::iota(perm.begin(), perm.end(), 0);
  return MonomialElement(root_order, std::move(perm), std::vector<long>(static_cast<std::size_t>(dim), 0));
}

MonomialElement MonomialElement::diagonal(long root_order, std::vector<long> exps) {
  std::vector<int> perm(exps.size());
  std::iota(perm.begin(), perm.end(), 0);
  return MonomialElement(root_order, std::move(perm), std::move(exps));
}

bool MonomialElement::is_identity() const {
  for (int i = 0; i < dim(); ++i)
    if (perm_[i] != i || exps_[i] != 0) return false;
  return true;
}

MonomialElement MonomialElement::inverse() const {
  std::vector<int> perm(perm_.size());
  std::vector<long> exps(exps_.size());
  for (int i = 0; i < dim(); ++i) {
    perm[perm_[i]] = i;
    exps[perm_[i]] = n_ - exps_[i];
  }
  return MonomialElement(n_, std::move(perm), std::move(exps));
}

MonomialElement operator*(const MonomialElement& a, const MonomialElement& b) {
  if (a.n_ != b.n_ || a.dim() != b.dim()) throw std::invalid_argument("monomial elements are incompatible");
  std::vector<int> perm(a.perm_.size());
  std::vector<long> exps(a.exps_.size());
  for (int i = 0; i < a.dim(); ++i) {
    int j = a.perm_[i];
    perm[i] = b.perm_[j];
    exps[i] = a.exps_[i] + b.exps_[j];
  }
  return MonomialElement(a.n_, std::move(perm), std::move(exps));
}

std::size_t MonomialElement::hash() const {
  std::size_t h = std::hash<long>{}(n_);
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  for (int p : perm_) mix(static_cast<std::size_t>(p));
  for (long e : exps_) mix(static_cast<std::size_t>(e));
  return h;
}

namespace {

// Cycles of the permutation as (length, exponent sum mod N).
std::vector<std::pair<int, long>> cycles(const MonomialElement& g) {
  std::vector<std::pair<int, long>> out;
  std::vector<bool> seen(static_cast<std::size_t>(g.dim()), false);
  for (int start = 0; start < g.dim(); ++start) {
    if (seen[start]) continue;
    int len = 0;
    long e = 0;
    for (int i = start; !seen[i]; i = g.perm()[i]) {
      seen[i] = true;
      ++len;
      e = (e + g.exps()[i]) % g.root_order();
    }
    out.emplace_back(len, e);
  }
  return out;
}

}  // namespace

std::vector<CycleFactor> char_poly_factors(const MonomialElement& g) {
  std::vector<CycleFactor> out;
  for (auto [len, e] : cycles(g)) out.push_back({len, e, cyclotomic::CycInt::root(g.root_order(), e)});
  std::vector<std::pair<std::pair<int, std::vector<Integer>>, std::size_t>> order;
  for (std::size_t i = 0; i < out.size(); ++i) order.push_back({{out[i].length, out[i].value.reduced()}, i});
  std::sort(order.begin(), order.end());
  std::vector<CycleFactor> sorted;
  sorted.reserve(out.size());
  for (const auto& [_, i] : order) sorted.push_back(out[i]);
  return sorted;
}

Spectrum spectrum(const MonomialElement& g) {
  // A cycle of length l with entry product zeta_N^e has the l-th roots of
  // zeta_N^e as eigenvalues: exp(2 pi i (e + jN) / (lN)).
  Spectrum out;
  out.reserve(static_cast<std::size_t>(g.dim()));
  const long N = g.root_order();
  for (auto [len, e] : cycles(g)) {
    const long den = len * N;
    for (long j = 0; j < len; ++j) {
      long num = (e + j * N) % den;
      long h = std::gcd(num, den);
      out.emplace_back(num / h, den / h);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

MonomialGroup MonomialGroup::generate(const std::vector<MonomialElement>& gens, std::size_t max_order,
                                      std::string label) {
  if (gens.empty()) throw std::invalid_argument("at least one generator is required");
  MonomialGroup G;
  G.dim_ = gens.front().dim();
  G.n_ = gens.front().root_order();
  G.label_ = std::move(label);
  for (const auto& g : gens)
    if (g.dim() != G.dim_ || g.root_order() != G.n_) throw std::invalid_argument("generators are incompatible");

  std::unordered_set<MonomialElement, ElementHash> seen;
  std::deque<MonomialElement> queue;
  auto id = MonomialElement::identity(G.dim_, G.n_);
  seen.insert(id);
  queue.push_back(id);
  // Right multiplication by generators reaches every element of a finite group.
  while (!queue.empty()) {
    auto x = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      auto y = x * g;
      if (seen.insert(y).second) {
        if (seen.size() > max_order)
          throw std::length_error("group closure exceeded " + std::to_string(max_order) + " elements");
        queue.push_back(std::move(y));
      }
    }
  }
  G.elements_.assign(seen.begin(), seen.end());
  std::sort(G.elements_.begin(), G.elements_.end());
  return G;
}

TypeIParams TypeIParams::make(long m, long n, long r) {
  if (m < 1 || n < 1 || r < 1) throw std::invalid_argument("Type I parameters must be positive");
  if (std::gcd(n * (r - 1), m) != 1) throw std::invalid_argument("Type I parameters need gcd(n(r-1), m) = 1");
  if (std::gcd(r, m) != 1) throw std::invalid_argument("Type I parameters need r prime to m");
  const long d = arith::multiplicative_order(r, m);
  if (n % d != 0) throw std::invalid_argument("order of r modulo m must divide n");
  const long np = n / d;
  for (long p : arith::prime_divisors(d))
    if (np % p != 0) throw std::invalid_argument("every prime divisor of d must divide n/d");
  return TypeIParams{m, n, r, d, np};
}

std::pair<MonomialElement, MonomialElement> type_one_generators(const TypeIParams& P, long k, long l) {
  if (std::gcd(k, P.m) != 1) throw std::invalid_argument("pi_{k,l} needs gcd(k, m) = 1");
  if (std::gcd(l, P.n) != 1) throw std::invalid_argument("pi_{k,l} needs gcd(l, n) = 1");
  if (arith::mod(k, P.d) != arith::mod(1, P.d)) throw std::invalid_argument("pi_{k,l} needs k = 1 mod d");
  const long N = std::lcm(P.m, P.n_prime);
  const int d = static_cast<int>(P.d);

  std::vector<long> a(static_cast<std::size_t>(d));
  long rj = 1;
  for (int j = 0; j < d; ++j) {
    a[j] = arith::mod(k * rj, P.m) * (N / P.m);
    rj = arith::mod(rj * P.r, P.m);
  }

  // Row i has a 1 in column i+1; the last row has xi_{n'}^l in column 0.
  std::vector<int> perm(static_cast<std::size_t>(d));
  std::vector<long> b(static_cast<std::size_t>(d), 0);
  for (int i = 0; i < d; ++i) perm[i] = (i + 1) % d;
  b[d - 1] = arith::mod(l, P.n_prime) * (N / P.n_prime);

  return {MonomialElement::diagonal(N, std::move(a)), MonomialElement(N, std::move(perm), std::move(b))};
}

MonomialGroup type_one_group(const TypeIParams& P, long k, long l) {
  auto [A, B] = type_one_generators(P, k, l);
  const auto order = static_cast<std::size_t>(P.m * P.n);
  auto G = MonomialGroup::generate({A, B}, order, format_type_one({P, k, l}));
  if (G.order() != order)
    throw std::length_error("group closure has " + std::to_string(G.order()) + " elements, expected " +
                            std::to_string(order));
  return G;
}

MonomialGroup diagonal_group(const lens::LensSpace& L) {
  auto g = MonomialElement::diagonal(L.order(), L.weights());
  return MonomialGroup::generate({g}, static_cast<std::size_t>(L.order()), lens::format_lens(L));
}

bool acts_freely(const MonomialGroup& G) {
  for (const auto& g : G.elements()) {
    if (g.is_identity()) continue;
    for (auto [len, e] : cycles(g))
      if (e == 0) return false;
  }
  return true;
}

std::map<Spectrum, std::size_t> spectrum_census(const MonomialGroup& G) {
  std::map<Spectrum, std::size_t> out;
  for (const auto& g : G.elements()) ++out[spectrum(g)];
  return out;
}

bool almost_conjugate(const MonomialGroup& G, const MonomialGroup& H) {
  if (G.dim() != H.dim()) throw std::invalid_argument("almost_conjugate needs groups of the same dimension");
  if (G.order() != H.order()) return false;
  return spectrum_census(G) == spectrum_census(H);
}

TypeIRepresentation parse_type_one(std::string_view text) {
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto expect = [&](std::string_view tok) {
    skip();
    if (text.substr(i, tok.size()) != tok) throw ParseError("expected '" + std::string(tok) + "'", i);
    i += tok.size();
  };
  auto integer = [&] {
    skip();
    std::size_t start = i;
    if (i < text.size() && text[i] == '-') ++i;
    std::size_t digits = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == digits) throw ParseError("expected integer", start);
    if (i - digits > 15) throw ParseError("integer too large", start);
    return std::stol(std::string(text.substr(start, i - start)));
  };
  expect("GammaI");
  expect("(");
  std::size_t mpos = i;
  long m = integer();
  expect(",");
  long n = integer();
  expect(",");
  long r = integer();
  expect(";");
  long k = integer();
  expect(",");
  long l = integer();
  expect(")");
  skip();
  if (i != text.size()) throw ParseError("trailing characters", i);
  try {
    auto P = TypeIParams::make(m, n, r);
    type_one_generators(P, k, l);
    return {P, k, l};
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), mpos);
  }
}

std::string format_type_one(const TypeIRepresentation& rep) {
  std::ostringstream out;
  out << "GammaI(" << rep.params.m << "," << rep.params.n << "," << rep.params.r << ";" << rep.k << "," << rep.l
      << ")";
  return out.str();
}

}  // namespace kohn::groups
