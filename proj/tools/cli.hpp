#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "kohn/harmonic.hpp"
#include "kohn/search.hpp"

namespace kohn::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
};

/// Runs the command line; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "L(k; s...)" or "GammaI(m,n,r;k,l)".
harmonic::Quotient parse_quotient(const std::string& text);

/// "a..b" or a single integer.
std::pair<long, long> parse_range(const std::string& text);

/// Flag value if set, else KOHN_WORKERS, else 0 (OpenMP default).
int resolve_workers(std::optional<int> flag);

/// Search results for one (n, k) cell, stored with a key derived from the
/// configuration and a checksum of the payload.
struct Checkpoint {
  static std::string key(int n, long k);
  static std::filesystem::path path(const std::filesystem::path& dir, int n, long k);
  static void write(const std::filesystem::path& dir, int n, long k,
                    const std::vector<search::IsospectralFamily>& families);
  /// nullopt when the file is missing, for another configuration, or corrupt.
  static std::optional<std::vector<search::IsospectralFamily>> read(const std::filesystem::path& dir, int n, long k);
};

}  // namespace kohn::cli
