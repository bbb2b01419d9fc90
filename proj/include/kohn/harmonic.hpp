#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "kohn/groups.hpp"
#include "kohn/integer.hpp"
#include "kohn/lens.hpp"

// Dimensions of Gamma-invariant bigraded harmonic polynomials on C^n and the
// Kohn and round Laplace multiplicities derived from them.

namespace kohn::harmonic {

using Quotient = std::variant<lens::LensSpace, groups::MonomialGroup>;

/// Complex dimension n of the ambient C^n.
int ambient_dimension(const Quotient& q);
std::string describe(const Quotient& q);

/// dim H^Gamma_{p,q} for 0 <= p <= pmax, 0 <= q <= qmax.
class DimTable {
 public:
  DimTable(std::string descriptor, int n, int pmax, int qmax);

  const std::string& descriptor() const { return descriptor_; }
  int n() const { return n_; }
  int pmax() const { return pmax_; }
  int qmax() const { return qmax_; }

  const Integer& at(int p, int q) const { return values_.at(index(p, q)); }
  Integer& at(int p, int q) { return values_.at(index(p, q)); }

  /// Entries outside the table (including negative indices) read as zero.
  Integer get_or_zero(int p, int q) const;

  friend bool operator==(const DimTable&, const DimTable&) = default;

 private:
  std::size_t index(int p, int q) const;

  std::string descriptor_;
  int n_;
  int pmax_;
  int qmax_;
  std::vector<Integer> values_;
};

namespace detail {

/// counts[p*k + c] = #{alpha in N^n : |alpha| = p, sum s_i alpha_i = c mod k}
/// for 0 <= p <= bound. T needs T(0), T(1) and checked_add.
template <class T>
std::vector<T> residue_counts(const std::vector<long>& s, long k, int bound) {
  const auto K = static_cast<std::size_t>(k);
  std::vector<T> counts((static_cast<std::size_t>(bound) + 1) * K, T(0));
  counts[0] = T(1);
  // Multiply by 1/(1 - x t^{s_i}) one variable at a time, in place.
  for (long si : s) {
    const auto shift = static_cast<std::size_t>(((si % k) + k) % k);
    for (int p = 1; p <= bound; ++p) {
      T* row = counts.data() + static_cast<std::size_t>(p) * K;
      const T* prev = row - K;
      for (std::size_t c = 0; c < K; ++c) {
        std::size_t src = c >= shift ? c - shift : c + K - shift;
        row[c] = checked_add(row[c], prev[src]);
      }
    }
  }
  return counts;
}

}  // namespace detail

/// Number of monomials z^alpha zbar^beta, |alpha| = p, |beta| = q, fixed by
/// the generator of L.
Integer dim_P_invariant_lens(const lens::LensSpace& L, int p, int q);

/// Character average (1/|G|) sum_g h_p(conj eigs) h_q(eigs), evaluated in
/// Z[zeta_N] and certified integral. Throws ArithmeticError otherwise.
Integer dim_P_invariant_group(const groups::MonomialGroup& G, int p, int q);

Integer dim_H_invariant(const lens::LensSpace& L, int p, int q);
Integer dim_H_invariant(const groups::MonomialGroup& G, int p, int q);
Integer dim_H_invariant(const Quotient& G, int p, int q);

/// Full table; rows are distributed over OpenMP threads.
DimTable dim_table(const Quotient& G, int pmax, int qmax);

/// Same result computed entry by entry on one thread; kept for testing.
DimTable dim_table_reference(const Quotient& G, int pmax, int qmax);

/// Multiplicity of the Kohn Laplacian eigenvalue 2r: the sum of dim H_{p,q}
/// over q(p + n - 1) = r. r = 0 has infinite multiplicity and is rejected.
Integer kohn_multiplicity(const Quotient& G, long r);

/// Entry l is sum_{p+q=l} dim H_{p,q}, the multiplicity of l(l+2n-2) for the
/// round Laplacian on the quotient.
std::vector<Integer> laplace_multiplicities(const Quotient& G, int l_max);
std::vector<Integer> laplace_multiplicities(const DimTable& T, int l_max);

}  // namespace kohn::harmonic
