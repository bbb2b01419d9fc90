#pragma once

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "kohn/integer.hpp"
#include "kohn/lens.hpp"

// Explicit families of CR isospectral lens spaces: the prime-order family
// G(n, k) and the theta-power pairs L+ / L- of order r^2.

namespace kohn::families {

/// gcd(s_i, k) = 1, the s_i pairwise distinct mod k, and some s_i differs
/// from every -s_j.
bool is_gerson_member(const lens::LensSpace& L);

/// Visits every member with strictly increasing weights (one representative
/// per unordered weight set), in lexicographic order. Every reordering of a
/// visited tuple is also a member.
void for_each_gerson_member(int n, long k, const std::function<void(const lens::LensSpace&)>& visit);
std::vector<lens::LensSpace> gerson_members(int n, long k);

struct GersonCensus {
  std::size_t weight_sets;  // members with increasing weights
  Integer ordered_members;  // weight_sets * n!
  std::vector<lens::LensSpace> classes;  // distinct canonical forms, sorted
};

GersonCensus gerson_census(int n, long k);

/// (k - 3) / 2 for an odd prime k >= 5. With verify set, also counts the CR
/// classes of G(k-3, k) and throws ArithmeticError on disagreement.
long gerson_class_count(long k, bool verify = false);

/// True iff every member of G(k-3, k) has the same P_L.
bool verify_gerson_isospectral(long k);

struct PairParams {
  long r;
  std::vector<long> a;

  /// r odd and > 3, n >= 3, 0 <= a_1 < ... < a_n < r, gcd(a_i - a_j, r) = 1.
  static PairParams make(long r, std::vector<long> a);

  long k() const { return r * r; }
  long theta() const { return r + 1; }
  int n() const { return static_cast<int>(a.size()); }
};

/// All valid parameter sets for the given r and n.
std::vector<PairParams> all_pair_params(long r, int n);

/// L+ = L(r^2; theta^{a_1}, ..., theta^{a_n}) and
/// L- = L(r^2; theta^{-a_1}, ..., theta^{-a_n}).
std::pair<lens::LensSpace, lens::LensSpace> make_pair(const PairParams& params);

/// Arithmetic criterion for L+ ~ L-: some involution with floor(n/2)
/// disjoint transpositions makes a_i + a_{sigma(i)} constant mod r.
bool pair_equivalent(const PairParams& params);

}  // namespace kohn::families
