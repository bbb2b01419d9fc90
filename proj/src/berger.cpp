#include "kohn/berger.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>

namespace kohn::berger {

long coefficient_s(int p, int q, int n) {
  const long m = std::min(p, q);
  const long d = std::abs(p - q);
  return 4 * m * (m + d + n) + 2 * d * n;
}

long coefficient_r(int p, int q) {
  const long d = p - q;
  return 2 * d * d;
}

std::vector<BergerLine> berger_spectrum(const harmonic::DimTable& T, int D) {
  if (D < 0) throw std::invalid_argument("degree cutoff must be nonnegative");
  if (T.pmax() < D || T.qmax() < D) throw std::invalid_argument("DimTable too small for the degree cutoff");
  std::map<std::pair<long, long>, BergerLine> lines;
  for (int l = 0; l <= D; ++l) {
    for (int p = 0; p <= l; ++p) {
      const int q = l - p;
      const long cs = coefficient_s(p, q, T.n());
      const long cr = coefficient_r(p, q);
      auto [it, _] = lines.try_emplace({cs, cr}, BergerLine{cs, cr, 0, {}});
      it->second.multiplicity += T.at(p, q);
      it->second.provenance.emplace_back(p, q);
    }
  }
  std::vector<BergerLine> out;
  for (auto& [_, line] : lines) {
    if (line.multiplicity == 0) continue;
    std::sort(line.provenance.begin(), line.provenance.end());
    out.push_back(std::move(line));
  }
  return out;
}

std::vector<BergerLine> berger_spectrum(const harmonic::Quotient& G, int D) {
  if (D < 0) throw std::invalid_argument("degree cutoff must be nonnegative");
  return berger_spectrum(harmonic::dim_table(G, D, D), D);
}

bool same_spectrum(const std::vector<BergerLine>& a, const std::vector<BergerLine>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].c_s != b[i].c_s || a[i].c_r != b[i].c_r || a[i].multiplicity != b[i].multiplicity) return false;
  return true;
}

bool berger_isospectral_upto(const harmonic::Quotient& a, const harmonic::Quotient& b, int D) {
  if (harmonic::ambient_dimension(a) != harmonic::ambient_dimension(b))
    throw std::invalid_argument("Berger spectra need quotients of the same dimension");
  return same_spectrum(berger_spectrum(a, D), berger_spectrum(b, D));
}

std::vector<SpecializedLine> specialize(const std::vector<BergerLine>& lines, const Rational& r_squared,
                                        const Rational& s_squared) {
  if (r_squared <= 0 || s_squared <= 0) throw std::invalid_argument("r^2 and s^2 must be positive");
  std::map<Rational, Integer> merged;
  for (const auto& line : lines) merged[line.c_s * s_squared + line.c_r * r_squared] += line.multiplicity;
  std::vector<SpecializedLine> out;
  for (auto& [value, mult] : merged) out.push_back({value, mult});
  return out;
}

}  // namespace kohn::berger
