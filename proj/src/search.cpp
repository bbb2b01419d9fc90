#include "kohn/search.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <map>
#include <random>
#include <sstream>

#include "kohn/error.hpp"
#include "kohn/genfun.hpp"
#include "kohn/harmonic.hpp"
#include "parallel.hpp"

namespace kohn::search {
namespace {

constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

struct Mod61 {
  std::uint64_t v = 0;
  Mod61() = default;
  Mod61(long x) : v(static_cast<std::uint64_t>(x) % kPrime) {}

  friend Mod61 operator+(Mod61 a, Mod61 b) {
    std::uint64_t s = a.v + b.v;
    if (s >= kPrime) s -= kPrime;
    Mod61 r;
    r.v = s;
    return r;
  }
};

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(p & kPrime);
  std::uint64_t hi = static_cast<std::uint64_t>(p >> 61);
  std::uint64_t s = lo + hi;
  if (s >= kPrime) s -= kPrime;
  return s;
}

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  return s >= kPrime ? s - kPrime : s;
}

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kPrime - b; }

// Fixed pseudo-random weights; prefixes are stable as the length grows.
std::vector<std::uint64_t> weights(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> out(static_cast<std::size_t>(count));
  for (auto& w : out) w = rng() % kPrime;
  return out;
}

std::uint64_t reduce128(unsigned __int128 v) {
  std::uint64_t r = static_cast<std::uint64_t>(v & kPrime) + static_cast<std::uint64_t>((v >> 61) & kPrime) +
                    static_cast<std::uint64_t>(v >> 122);
  while (r >= kPrime) r -= kPrime;
  return r;
}

// sum_{p,q <= B} x_p y_q dim H_{p,q} mod 2^61 - 1. With
// X(c) = sum_p x_p N_p(c) and X'(c) = sum_{p>=1} x_p N_{p-1}(c) this is
// sum_c X(c) Y(c) - X'(c) Y'(c).
std::uint64_t linear_hash(const std::vector<Mod61>& counts, long k, int B, const std::vector<std::uint64_t>& x,
                          const std::vector<std::uint64_t>& y) {
  using U = unsigned __int128;
  // Products are below 2^122, so 32 of them fit before a reduction.
  constexpr int kChunk = 32;
  std::uint64_t total = 0;
  for (long c = 0; c < k; ++c) {
    std::uint64_t X = 0, Y = 0, Xs = 0, Ys = 0;
    for (int p0 = 0; p0 <= B; p0 += kChunk) {
      U ax = 0, ay = 0, axs = 0, ays = 0;
      const int p1 = std::min(B, p0 + kChunk - 1);
      for (int p = p0; p <= p1; ++p) {
        const U N = counts[static_cast<std::size_t>(p) * static_cast<std::size_t>(k) + c].v;
        ax += N * x[p];
        ay += N * y[p];
        axs += N * x[p + 1];
        ays += N * y[p + 1];
      }
      X = add_mod(X, reduce128(ax));
      Y = add_mod(Y, reduce128(ay));
      Xs = add_mod(Xs, reduce128(axs));
      Ys = add_mod(Ys, reduce128(ays));
    }
    // The shifted sums must stop at p = B - 1.
    const U NB = counts[static_cast<std::size_t>(B) * static_cast<std::size_t>(k) + c].v;
    Xs = sub_mod(Xs, reduce128(NB * x[B + 1]));
    Ys = sub_mod(Ys, reduce128(NB * y[B + 1]));
    total = add_mod(total, sub_mod(mul_mod(X, Y), mul_mod(Xs, Ys)));
  }
  return total;
}

std::string small_digest(const lens::LensSpace& L) {
  const long k = L.order();
  const int B = static_cast<int>(std::min(2 * k, L.n() * (k - 1)));
  const auto counts = harmonic::detail::residue_counts<Mod61>(L.weights(), k, B);
  static const auto x1 = weights(0x6b6f686e01ULL, 4096), y1 = weights(0x6b6f686e02ULL, 4096);
  static const auto x2 = weights(0x6b6f686e03ULL, 4096), y2 = weights(0x6b6f686e04ULL, 4096);
  if (B + 1 >= 4096) throw std::invalid_argument("small-stage fingerprint bound too large");
  char buf[40];
  std::snprintf(buf, sizeof buf, "%016llx%016llx", static_cast<unsigned long long>(linear_hash(counts, k, B, x1, y1)),
                static_cast<unsigned long long>(linear_hash(counts, k, B, x2, y2)));
  return buf;
}

std::string serialize(const genfun::BivariatePoly& P) {
  std::ostringstream out;
  for (const auto& [key, c] : P.terms()) out << key.first << ',' << key.second << ':' << c << ';';
  return out.str();
}

std::string fnv64_hex(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

template <class Loop>
std::vector<IsospectralFamily> run_search(int n, long k, bool verify, Loop&& loop) {
  const auto classes = lens::enumerate_cr_classes(n, k);

  std::vector<std::string> small(classes.size());
  loop(static_cast<long>(classes.size()), [&](long i) { small[i] = small_digest(classes[i]); });

  std::map<std::string, std::vector<std::size_t>> buckets;
  for (std::size_t i = 0; i < classes.size(); ++i) buckets[small[i]].push_back(i);

  std::vector<std::size_t> candidates;
  for (const auto& [_, idx] : buckets)
    if (idx.size() > 1) candidates.insert(candidates.end(), idx.begin(), idx.end());
  std::sort(candidates.begin(), candidates.end());

  std::vector<std::string> full(candidates.size());
  loop(static_cast<long>(candidates.size()),
       [&](long i) { full[i] = fingerprint(classes[candidates[i]], Stage::Full); });

  std::map<std::string, std::vector<std::size_t>> exact;
  for (std::size_t i = 0; i < candidates.size(); ++i) exact[full[i]].push_back(candidates[i]);

  std::vector<IsospectralFamily> out;
  for (const auto& [digest, idx] : exact) {
    if (idx.size() < 2) continue;
    IsospectralFamily fam{n, k, {}, fnv64_hex(digest)};
    for (std::size_t i : idx) fam.members.push_back(classes[i]);
    std::sort(fam.members.begin(), fam.members.end());
    out.push_back(std::move(fam));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.members < b.members; });
  if (verify)
    for (const auto& fam : out) verify_family(fam);
  return out;
}

}  // namespace

std::string fingerprint(const lens::LensSpace& L, Stage stage) {
  if (stage == Stage::Small) return small_digest(L);
  return serialize(genfun::p_poly_direct(L));
}

void verify_family(const IsospectralFamily& family) {
  const auto& m = family.members;
  if (m.size() < 2) throw ArithmeticError("family with fewer than two members");
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (lens::are_cr_equivalent(m[i], m[j]))
        throw ArithmeticError("family members " + lens::format_lens(m[i]) + " and " + lens::format_lens(m[j]) +
                              " are CR equivalent");
      if (genfun::f_equal(m[i], m[j]).verdict != genfun::Verdict::Equal)
        throw ArithmeticError("family members " + lens::format_lens(m[i]) + " and " + lens::format_lens(m[j]) +
                              " have different generating functions");
    }
  }
}

std::vector<IsospectralFamily> search_isospectral(int n, long k, const SearchOptions& options) {
  return run_search(n, k, options.verify, [&](long count, auto&& body) {
    kohn::detail::parallel_for(count, body, options.workers);
  });
}

std::vector<IsospectralFamily> search_isospectral_serial(int n, long k, bool verify) {
  return run_search(n, k, verify, [](long count, auto&& body) {
    for (long i = 0; i < count; ++i) body(i);
  });
}

}  // namespace kohn::search
