#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kohn/cyclotomic.hpp"
#include "kohn/lens.hpp"

// Finite subgroups of U(d) given by monomial matrices with root-of-unity
// entries, in particular the images of Type I groups under pi_{k,l}.

namespace kohn::groups {

/// Row i of the matrix has its only nonzero entry in column perm[i], equal to
/// zeta_N^{exps[i]}.
class MonomialElement {
 public:
  MonomialElement(long root_order, std::vector<int> perm, std::vector<long> exps);

  static MonomialElement identity(int dim, long root_order);
  static MonomialElement diagonal(long root_order, std::vector<long> exps);

  int dim() const { return static_cast<int>(perm_.size()); }
  long root_order() const { return n_; }
  const std::vector<int>& perm() const { return perm_; }
  const std::vector<long>& exps() const { return exps_; }

  bool is_identity() const;
  MonomialElement inverse() const;

  friend MonomialElement operator*(const MonomialElement& a, const MonomialElement& b);
  friend bool operator==(const MonomialElement&, const MonomialElement&) = default;
  friend auto operator<=>(const MonomialElement&, const MonomialElement&) = default;

  std::size_t hash() const;

 private:
  long n_;
  std::vector<int> perm_;
  std::vector<long> exps_;
};

struct ElementHash {
  std::size_t operator()(const MonomialElement& g) const { return g.hash(); }
};

/// One cycle of the underlying permutation: contributes x^length - value to
/// the characteristic polynomial, where value = zeta_N^exponent is the
/// product of the entries along the cycle.
struct CycleFactor {
  int length;
  long exponent;
  cyclotomic::CycInt value;
};

/// Sorted by (length, reduced coefficient vector of value).
std::vector<CycleFactor> char_poly_factors(const MonomialElement& g);

/// Eigenvalues as reduced fractions t/q with exp(2 pi i t/q), sorted. Two
/// unitary matrices are conjugate in U(d) iff these lists agree.
using Spectrum = std::vector<std::pair<long, long>>;
Spectrum spectrum(const MonomialElement& g);

class MonomialGroup {
 public:
  /// Closure of the generators under products; throws std::length_error if
  /// more than max_order elements appear.
  static MonomialGroup generate(const std::vector<MonomialElement>& gens, std::size_t max_order,
                                std::string label = {});

  int dim() const { return dim_; }
  long root_order() const { return n_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<MonomialElement>& elements() const { return elements_; }
  const std::string& label() const { return label_; }

 private:
  int dim_ = 0;
  long n_ = 1;
  std::vector<MonomialElement> elements_;
  std::string label_;
};

struct TypeIParams {
  long m;
  long n;
  long r;
  long d;        // multiplicative order of r modulo m
  long n_prime;  // n / d

  /// Validates gcd(n(r-1), m) = 1, d | n and that every prime divisor of d
  /// divides n/d.
  static TypeIParams make(long m, long n, long r);
};

/// pi_{k,l}(Gamma_d(m,n,r)) as an explicit group of order m*n in U(d).
MonomialGroup type_one_group(const TypeIParams& params, long k, long l);

/// The generators pi_{k,l}(A), pi_{k,l}(B).
std::pair<MonomialElement, MonomialElement> type_one_generators(const TypeIParams& params, long k, long l);

/// Gamma_{k,s} = <diag(xi_k^{s_1}, ..., xi_k^{s_n})>.
MonomialGroup diagonal_group(const lens::LensSpace& L);

bool acts_freely(const MonomialGroup& G);

/// Number of elements per spectrum.
std::map<Spectrum, std::size_t> spectrum_census(const MonomialGroup& G);

bool almost_conjugate(const MonomialGroup& G, const MonomialGroup& H);

/// "GammaI(m,n,r;k,l)".
struct TypeIRepresentation {
  TypeIParams params;
  long k;
  long l;
};

TypeIRepresentation parse_type_one(std::string_view text);
std::string format_type_one(const TypeIRepresentation& rep);

}  // namespace kohn::groups
