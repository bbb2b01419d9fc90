#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

// Lens spaces L(k; s_1, ..., s_n) = S^{2n-1} / <diag(xi_k^{s_1}, ..., xi_k^{s_n})>
// and their classification up to CR equivalence and Riemannian isometry.

namespace kohn::lens {

class LensSpace {
 public:
  /// Validating constructor: k >= 2, n >= 2, every s_i prime to k. Residues
  /// are reduced into [1, k-1]; their order is kept.
  LensSpace(long k, std::vector<long> s);

  /// The round sphere S^{2n-1} viewed as the quotient by the trivial group
  /// (k = 1, all weights 0). Only constructible through this factory.
  static LensSpace sphere(int n);

  long order() const { return k_; }
  int n() const { return static_cast<int>(s_.size()); }
  const std::vector<long>& weights() const { return s_; }
  int manifold_dimension() const { return 2 * n() - 1; }
  bool is_sphere() const { return k_ == 1; }

  friend bool operator==(const LensSpace&, const LensSpace&) = default;
  friend auto operator<=>(const LensSpace&, const LensSpace&) = default;

 private:
  struct Unchecked {};
  LensSpace(Unchecked, long k, std::vector<long> s) : k_(k), s_(std::move(s)) {}

  long k_;
  std::vector<long> s_;

  friend LensSpace cr_canonical_form(const LensSpace&);
};

inline LensSpace new_lens(long k, std::vector<long> s) { return LensSpace(k, std::move(s)); }

/// "L(k; s1,s2,...,sn)". Whitespace is tolerated on input.
LensSpace parse_lens(std::string_view text);
std::string format_lens(const LensSpace& L);

/// Lexicographically least sorted weight vector over all unit multipliers.
/// Two lens spaces are CR equivalent iff their canonical forms coincide.
LensSpace cr_canonical_form(const LensSpace& L);
bool is_cr_canonical(const LensSpace& L);

/// s_i == c * s'_{sigma(i)} (mod k) for all i.
struct CrWitness {
  long c;
  std::vector<int> sigma;
};

/// s_i == eps_i * c * s'_{sigma(i)} (mod k) for all i.
struct IsometryWitness {
  long c;
  std::vector<int> sigma;
  std::vector<int> signs;
};

std::optional<CrWitness> cr_equivalence_witness(const LensSpace& a, const LensSpace& b);
std::optional<IsometryWitness> isometry_witness(const LensSpace& a, const LensSpace& b);

bool are_cr_equivalent(const LensSpace& a, const LensSpace& b);
bool are_isometric(const LensSpace& a, const LensSpace& b);

/// Calls `visit` once per CR-equivalence class of n-dimensional lens spaces
/// of order k, with the class's canonical form, in lexicographic order.
void for_each_cr_class(int n, long k, const std::function<void(const LensSpace&)>& visit);
std::vector<LensSpace> enumerate_cr_classes(int n, long k);

}  // namespace kohn::lens
