#pragma once

#include <string>
#include <vector>

#include "kohn/lens.hpp"

// Search for families of CR lens spaces of fixed (n, k) that share the
// numerator polynomial P_L (hence the generating function) without being CR
// equivalent.

namespace kohn::search {

enum class Stage {
  Small,  // 128-bit linear hash of dim H_{p,q}, p,q <= min(2k, n(k-1))
  Full,   // exact serialization of P_L
};

/// Equal lens spaces give equal digests; equal Full digests imply equal Small
/// digests.
std::string fingerprint(const lens::LensSpace& L, Stage stage);

struct IsospectralFamily {
  int n;
  long k;
  std::vector<lens::LensSpace> members;  // canonical forms, sorted
  std::string certificate;               // 64-bit hash of the shared P_L

  friend bool operator==(const IsospectralFamily&, const IsospectralFamily&) = default;
};

struct SearchOptions {
  int workers = 0;         // <= 0: OpenMP default
  bool verify = true;      // pairwise re-verification of every family
};

/// All maximal families of at least two pairwise CR-inequivalent classes with
/// equal P_L, sorted by their members.
std::vector<IsospectralFamily> search_isospectral(int n, long k, const SearchOptions& options = {});

/// Single-threaded version of the same search; kept as a reference.
std::vector<IsospectralFamily> search_isospectral_serial(int n, long k, bool verify = true);

/// Re-checks pairwise P_L equality and pairwise CR inequivalence; throws
/// ArithmeticError on failure.
void verify_family(const IsospectralFamily& family);

}  // namespace kohn::search
