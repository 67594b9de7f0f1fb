#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "kmis/greedy.hpp"
#include "kmis/kmer.hpp"
#include "kmis/mis.hpp"
#include "kmis/verify.hpp"

namespace kmis {

inline constexpr unsigned kMinK = 2;
inline constexpr unsigned kMaxUnforcedK = 15;

/// Picks the algorithm expected to be fastest for (k, d). Affects run time
/// only; all three produce the same set.
///   d >= k - 4  -> 1 (small sets, pairwise comparison is cheap)
///   d <= 4      -> 3 (large sets, BFS avoids pairwise work)
///   otherwise   -> 2
Algorithm select_algorithm(unsigned k, int d);

struct RunConfig {
  unsigned k = 0;
  int d = 0;
  std::optional<Algorithm> algorithm;  // empty = auto
  std::optional<std::filesystem::path> out;
  std::optional<std::filesystem::path> mapping_out;
  std::optional<std::filesystem::path> stats_out;
  std::uint64_t memory_budget_bytes = std::uint64_t{8} << 30;
  bool force_large_k = false;
};

/// Throws ParameterError for k outside [2, 15] (unless forced) or d outside [0, k).
void validate(const RunConfig& config);

struct RunStats {
  unsigned k = 0;
  int d = 0;
  Algorithm algorithm = Algorithm::simple_greedy;
  std::uint64_t mis_size = 0;
  double wall_seconds = 0;
  std::uint64_t peak_alloc_bytes = 0;
  std::uint64_t edit_calls = 0;
  std::uint64_t bound_filter_hits = 0;
  std::uint64_t vertices_explored = 0;
};

/// One JSON object on one line, stable key names.
std::string to_record(const RunStats& stats);

struct RunOutcome {
  MisResult mis;
  RunStats stats;
  std::optional<MappingTable> mapping;
};

/// Runs one algorithm in memory. With `want_mapping`, algorithms 1 and 3
/// get a mapping derived after the run.
RunOutcome run(const KmerSpace& space, int d, Algorithm algorithm, const RunLimits& limits = {},
               bool want_mapping = false);

/// Validates, runs, and writes the MIS (to config.out or `fallback_out`),
/// the mapping file and the stats record (appended) when requested.
RunStats compute(const RunConfig& config, std::ostream& fallback_out);

struct VerifyConfig {
  std::filesystem::path input;
  std::optional<unsigned> k;  // must match the file when given
  std::optional<int> d;       // overrides the header's d
  std::uint64_t sampled_maximality = 0;  // >0 forces sampling with this many k-mers
  unsigned threads = 0;
  bool allow_large = false;
};

struct VerifyOutcome {
  MisResult mis;
  VerificationReport report;
};

VerifyOutcome verify_file(const VerifyConfig& config);

std::string to_record(const VerificationReport& report, const KmerSpace& space, const MisResult& mis);

struct TableConfig {
  unsigned k_max = 10;
  std::optional<int> d_max;  // empty = every d in [1, k)
  unsigned jobs = 1;
  std::uint64_t memory_budget_bytes = std::uint64_t{8} << 30;
  bool force_large_k = false;
};

struct TableCell {
  unsigned k = 0;
  int d = 0;
  Algorithm algorithm = Algorithm::simple_greedy;
  std::optional<std::uint64_t> size;
  double wall_seconds = 0;
  std::uint64_t peak_alloc_bytes = 0;
  std::string error;
};

/// Computes every cell 2 <= k <= k_max, 1 <= d < k (d <= d_max) with auto
/// selection. Capacity errors are recorded in the cell. `on_cell` sees each
/// finished cell; with jobs > 1 calls are serialized but unordered.
std::vector<TableCell> table(const TableConfig& config, const std::function<void(const TableCell&)>& on_cell = {});

std::string to_record(const TableCell& cell);

/// Three blocks (sizes, seconds, bytes), rows d and columns k.
std::string format_table(const std::vector<TableCell>& cells);

}  // namespace kmis
