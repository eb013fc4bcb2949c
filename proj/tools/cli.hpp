#pragma once

// Command implementations behind the `cyclecone` executable. Each command
// writes its report to `out`, diagnostics to `err`, and returns the process
// exit code.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "cyclecone/qseries.hpp"

namespace cyclecone::cli {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitCheckFailure = 1;
inline constexpr int kExitUsage = 2;

enum class OutputFormat { json, csv };

struct RunConfig {
  std::optional<int> n;
  std::optional<int> weight;
  std::uint64_t max_m = 0;
  std::optional<std::size_t> precision;
  OutputFormat format = OutputFormat::csv;
  std::optional<std::filesystem::path> cache_dir;
  bool primitive = true;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ResolvedWeight {
  int k = 0;
  std::optional<int> n;
  /// n = 2 mod 8, i.e. an even unimodular lattice of signature (n, 2) exists.
  bool physical = false;
};

/// Exactly one of --n / --weight; k = 1 + n/2 must be even and >= 4.
ResolvedWeight resolve_weight(const RunConfig& config);

/// Defaults to max(M + 1, dim M_k); rejects anything below that.
std::size_t resolve_precision(const RunConfig& config, int k);

/// Reads miller_k<k>_N<precision>.txt from the cache directory when present
/// and valid; otherwise computes the basis and (re)writes the file. Problems
/// with the cache are reported on `err` and never change the result.
MillerBasis load_or_build_basis(int k, std::size_t precision, const std::optional<std::filesystem::path>& cache_dir,
                                std::ostream& err);

std::filesystem::path basis_cache_path(const std::filesystem::path& dir, int k, std::size_t precision);

int cmd_identities(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_converge(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_cone(const RunConfig& config, std::ostream& out, std::ostream& err);

struct LatticeArgs {
  std::string subcommand;  // build | moment | reduce | family
  int n = 10;
  std::string vectors;     // JSON array of integer rows (moment)
  std::string matrix;      // JSON doubled 2x2 matrix (reduce)
  std::int64_t m = 1;
  std::int64_t j_max = 2;
};

int cmd_lattice(const LatticeArgs& args, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cyclecone::cli
