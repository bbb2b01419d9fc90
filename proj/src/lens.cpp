#include "kohn/lens.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "kohn/arith.hpp"
#include "kohn/error.hpp"

namespace kohn::lens {

LensSpace::LensSpace(long k, std::vector<long> s) : k_(k), s_(std::move(s)) {
  if (k_ < 2) throw std::invalid_argument("lens space order k must be >= 2");
  if (s_.empty()) throw std::invalid_argument("lens space needs at least one weight");
  if (s_.size() < 2) throw std::invalid_argument("lens space needs n >= 2 weights");
  for (auto& v : s_) {
    v = arith::mod(v, k_);
    if (std::gcd(v, k_) != 1)
      throw std::invalid_argument("weight " + std::to_string(v) + " is not prime to k = " + std::to_string(k_) +
                                  " (action not free)");
  }
}

LensSpace LensSpace::sphere(int n) {
  if (n < 2) throw std::invalid_argument("sphere needs n >= 2");
  return LensSpace(Unchecked{}, 1, std::vector<long>(static_cast<std::size_t>(n), 0));
}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view t) : t_(t) {}

  void skip_ws() {
    while (i_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[i_]))) ++i_;
  }

  void expect(char c) {
    skip_ws();
    if (i_ >= t_.size() || t_[i_] != c) throw ParseError(std::string("expected '") + c + "'", i_);
    ++i_;
  }

  bool accept(char c) {
    skip_ws();
    if (i_ < t_.size() && t_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }

  long integer() {
    skip_ws();
    std::size_t start = i_;
    if (i_ < t_.size() && (t_[i_] == '-' || t_[i_] == '+')) ++i_;
    std::size_t digits = i_;
    while (i_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[i_]))) ++i_;
    if (i_ == digits) throw ParseError("expected integer", start);
    if (i_ - digits > 15) throw ParseError("integer too large", start);
    return std::stol(std::string(t_.substr(start, i_ - start)));
  }

  void finish() {
    skip_ws();
    if (i_ != t_.size()) throw ParseError("trailing characters", i_);
  }

  std::size_t pos() const { return i_; }

 private:
  std::string_view t_;
  std::size_t i_ = 0;
};

}  // namespace

LensSpace parse_lens(std::string_view text) {
  Cursor cur(text);
  cur.expect('L');
  cur.expect('(');
  std::size_t kpos = cur.pos();
  long k = cur.integer();
  cur.expect(';');
  std::vector<long> s;
  do {
    s.push_back(cur.integer());
  } while (cur.accept(','));
  cur.expect(')');
  cur.finish();
  try {
    return LensSpace(k, std::move(s));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), kpos);
  }
}

std::string format_lens(const LensSpace& L) {
  std::ostringstream out;
  out << "L(" << L.order() << "; ";
  for (int i = 0; i < L.n(); ++i) out << (i ? "," : "") << L.weights()[i];
  out << ")";
  return out.str();
}

namespace {

std::vector<long> scaled_sorted(const std::vector<long>& s, long c, long k) {
  std::vector<long> t(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) t[i] = static_cast<long>(static_cast<__int128>(s[i]) * c % k);
  std::sort(t.begin(), t.end());
  return t;
}

std::vector<long> folded_sorted(const std::vector<long>& s, long c, long k) {
  std::vector<long> t(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    long v = static_cast<long>(static_cast<__int128>(s[i]) * c % k);
    t[i] = std::min(v, k - v);
  }
  std::sort(t.begin(), t.end());
  return t;
}

// The least sorted multiple starts with 1, so only multipliers sending some
// weight to 1 can attain it.
std::vector<long> canonical_weights(const std::vector<long>& s, long k) {
  std::vector<long> best;
  for (long v : s) {
    auto cand = scaled_sorted(s, arith::inverse_mod(v, k), k);
    if (best.empty() || cand < best) best = std::move(cand);
  }
  return best;
}

// Matching permutation: target[i] == source[sigma[i]].
std::vector<int> matching(const std::vector<long>& target, const std::vector<long>& source) {
  std::vector<int> sigma(target.size(), -1);
  std::vector<bool> used(source.size(), false);
  for (std::size_t i = 0; i < target.size(); ++i) {
    for (std::size_t j = 0; j < source.size(); ++j) {
      if (!used[j] && source[j] == target[i]) {
        used[j] = true;
        sigma[i] = static_cast<int>(j);
        break;
      }
    }
  }
  return sigma;
}

}  // namespace

LensSpace cr_canonical_form(const LensSpace& L) {
  if (L.is_sphere()) return L;
  return LensSpace(LensSpace::Unchecked{}, L.k_, canonical_weights(L.s_, L.k_));
}

bool is_cr_canonical(const LensSpace& L) { return cr_canonical_form(L) == L; }

std::optional<CrWitness> cr_equivalence_witness(const LensSpace& a, const LensSpace& b) {
  if (a.order() != b.order() || a.n() != b.n()) return std::nullopt;
  const long k = a.order();
  auto target = a.weights();
  auto sorted_target = target;
  std::sort(sorted_target.begin(), sorted_target.end());
  for (long c : arith::units(k)) {
    if (scaled_sorted(b.weights(), c, k) != sorted_target) continue;
    std::vector<long> scaled(b.weights().size());
    for (std::size_t j = 0; j < scaled.size(); ++j) scaled[j] = arith::mod(c * b.weights()[j], k);
    return CrWitness{c, matching(target, scaled)};
  }
  return std::nullopt;
}

std::optional<IsometryWitness> isometry_witness(const LensSpace& a, const LensSpace& b) {
  if (a.order() != b.order() || a.n() != b.n()) return std::nullopt;
  const long k = a.order();
  auto target = folded_sorted(a.weights(), 1, k);
  for (long c : arith::units(k)) {
    if (folded_sorted(b.weights(), c, k) != target) continue;
    // Match each s_i against +-c*s'_j.
    IsometryWitness w{c, std::vector<int>(a.n(), -1), std::vector<int>(a.n(), 1)};
    std::vector<bool> used(b.weights().size(), false);
    for (int i = 0; i < a.n(); ++i) {
      for (int j = 0; j < b.n(); ++j) {
        if (used[j]) continue;
        long v = arith::mod(c * b.weights()[j], k);
        if (v == a.weights()[i] || arith::mod(-v, k) == a.weights()[i]) {
          used[j] = true;
          w.sigma[i] = j;
          w.signs[i] = (v == a.weights()[i]) ? 1 : -1;
          break;
        }
      }
    }
    return w;
  }
  return std::nullopt;
}

bool are_cr_equivalent(const LensSpace& a, const LensSpace& b) {
  if (a.order() != b.order() || a.n() != b.n()) return false;
  return cr_canonical_form(a) == cr_canonical_form(b);
}

bool are_isometric(const LensSpace& a, const LensSpace& b) { return isometry_witness(a, b).has_value(); }

void for_each_cr_class(int n, long k, const std::function<void(const LensSpace&)>& visit) {
  if (n < 2 || k < 2) throw std::invalid_argument("enumerate_cr_classes requires n >= 2 and k >= 2");
  const auto u = arith::units(k);
  std::vector<long> s(static_cast<std::size_t>(n));
  s[0] = 1;
  // Nondecreasing tuples 1 = s_1 <= s_2 <= ... <= s_n over the units; keep
  // the ones that are their own canonical form.
  std::function<void(int, std::size_t)> rec = [&](int pos, std::size_t from) {
    if (pos == n) {
      if (canonical_weights(s, k) == s) visit(LensSpace(k, s));
      return;
    }
    for (std::size_t idx = from; idx < u.size(); ++idx) {
      s[pos] = u[idx];
      rec(pos + 1, idx);
    }
  };
  rec(1, 0);
}

std::vector<LensSpace> enumerate_cr_classes(int n, long k) {
  std::vector<LensSpace> out;
  for_each_cr_class(n, k, [&](const LensSpace& L) { out.push_back(L); });
  return out;
}

}  // namespace kohn::lens
