#pragma once

#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "kohn/harmonic.hpp"
#include "kohn/integer.hpp"

// Laplace spectra of quotients with the two-parameter Berger metrics
// g_(r,s). H_{p,q} has eigenvalue c_s(p,q) s^2 + c_r(p,q) r^2, so spectra are
// compared as formal lines (c_s, c_r, multiplicity).

namespace kohn::berger {

using Rational = boost::multiprecision::cpp_rational;

/// 4 m (m + |p-q| + n) + 2 |p-q| n with m = min(p, q).
long coefficient_s(int p, int q, int n);
/// 2 (p - q)^2.
long coefficient_r(int p, int q);

struct BergerLine {
  long c_s;
  long c_r;
  Integer multiplicity;
  std::vector<std::pair<int, int>> provenance;  // bidegrees with p+q <= D mapping here

  friend bool operator==(const BergerLine&, const BergerLine&) = default;
};

/// Lines from all (p, q) with p + q <= D, sorted by (c_s, c_r). Lines of total
/// multiplicity zero are dropped.
std::vector<BergerLine> berger_spectrum(const harmonic::DimTable& T, int D);
std::vector<BergerLine> berger_spectrum(const harmonic::Quotient& G, int D);

/// Equality of (c_s, c_r, multiplicity) over the two line lists.
bool same_spectrum(const std::vector<BergerLine>& a, const std::vector<BergerLine>& b);

bool berger_isospectral_upto(const harmonic::Quotient& a, const harmonic::Quotient& b, int D);

struct SpecializedLine {
  Rational eigenvalue;
  Integer multiplicity;

  friend bool operator==(const SpecializedLine&, const SpecializedLine&) = default;
};

/// Evaluates every line at the given r^2 and s^2 and merges equal values.
std::vector<SpecializedLine> specialize(const std::vector<BergerLine>& lines, const Rational& r_squared,
                                        const Rational& s_squared);

}  // namespace kohn::berger
