#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kohn/harmonic.hpp"
#include "kohn/integer.hpp"
#include "kohn/lens.hpp"

// The generating function F(z,w) = sum dim H^Gamma_{p,q} z^p w^q. For a lens
// space L(k; s) in C^n it has the closed form
//
//   F(z,w) = (1/k) (1 - zw) P_L(z,w) / ((z^k - 1)^n (w^k - 1)^n)
//
// with an integer polynomial numerator P_L of bidegree at most n(k-1).

namespace kohn::genfun {

class BivariatePoly {
 public:
  using Key = std::pair<int, int>;

  BivariatePoly() = default;
  BivariatePoly(int degree_bound_z, int degree_bound_w) : bound_z_(degree_bound_z), bound_w_(degree_bound_w) {}

  int degree_bound_z() const { return bound_z_; }
  int degree_bound_w() const { return bound_w_; }

  /// Nonzero coefficients only, ordered lexicographically by (alpha, beta).
  const std::map<Key, Integer>& terms() const { return terms_; }

  Integer coefficient(int alpha, int beta) const;
  void add(int alpha, int beta, const Integer& value);
  void set(int alpha, int beta, Integer value);

  /// Equality of coefficient maps; declared bounds are ignored.
  friend bool operator==(const BivariatePoly& a, const BivariatePoly& b) { return a.terms_ == b.terms_; }

 private:
  int bound_z_ = 0;
  int bound_w_ = 0;
  std::map<Key, Integer> terms_;
};

/// P_L by the finite root-of-unity sum over the cyclic group, grouping the
/// group elements by gcd(m, k) and summing each group as a Galois trace.
BivariatePoly p_poly_direct(const lens::LensSpace& L);

/// The same sum taken term by term over m = 0..k-1 in Z[zeta_k], with every
/// coefficient certified to be a rational integer. Serial; for testing.
BivariatePoly p_poly_direct_reference(const lens::LensSpace& L);

/// P_L from dim H^Gamma_{p,q}, 0 <= p,q <= n(k-1), via the coefficient
/// recursion obtained by clearing denominators in the closed form.
BivariatePoly p_poly_from_dims(const lens::LensSpace& L, const harmonic::DimTable& T);

/// p_poly_from_dims with a freshly computed table.
BivariatePoly p_poly_recursive(const lens::LensSpace& L);

/// Expands the closed form back into dim H^Gamma_{p,q} by exact integer
/// series division.
harmonic::DimTable dims_from_p_poly(const lens::LensSpace& L, const BivariatePoly& P, int pmax, int qmax);

/// Coefficients of F(z,z) up to z^{l_max}. Lens spaces go through P_L; other
/// groups sum the antidiagonals of the dimension table.
std::vector<Integer> f_diag(const harmonic::Quotient& G, int l_max);

enum class Verdict {
  Equal,           // F = F' proved (lens spaces with equal k)
  EqualUpToBound,  // coefficients agree for 0 <= p,q <= bound
  Different,
};

struct FComparison {
  Verdict verdict;
  int bound = -1;  // -1 when the verdict is unconditional
  std::optional<bool> almost_conjugate;
  std::optional<std::pair<int, int>> first_difference;
  std::string reason;

  bool equal() const { return verdict != Verdict::Different; }
};

std::string to_string(Verdict v);

/// Default table bound for comparisons without a finite certificate.
int default_comparison_bound(const harmonic::Quotient& a, const harmonic::Quotient& b);

/// Decides F_a = F_b. Throws std::invalid_argument if the ambient dimensions
/// differ and ArithmeticError if almost conjugate groups give different
/// dimension tables.
FComparison f_equal(const harmonic::Quotient& a, const harmonic::Quotient& b, std::optional<int> bound = {});

}  // namespace kohn::genfun
