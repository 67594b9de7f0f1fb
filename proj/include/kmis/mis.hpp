#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kmis {

enum class Algorithm : int {
  simple_greedy = 1,
  improved_greedy = 2,
  bfs = 3,
};

std::string_view to_string(Algorithm a);
/// Accepts "1", "2", "3". Throws InputError otherwise.
Algorithm parse_algorithm(std::string_view s);

/// A maximal independent set of S_k under edit distance threshold d.
/// Members are codes of length k in greedy insertion order.
struct MisResult {
  unsigned k = 0;
  int d = 0;
  std::vector<std::uint64_t> members;
  Algorithm algorithm = Algorithm::simple_greedy;
  std::string order = "lex";

  std::size_t size() const noexcept { return members.size(); }
};

/// Work counters filled in by the algorithms. Fields an algorithm does not
/// touch stay zero.
struct RunCounters {
  std::uint64_t edit_calls = 0;
  std::uint64_t bound_filter_hits = 0;
  std::uint64_t neighbor_mapping_hits = 0;
  std::uint64_t vertices_explored = 0;
  /// Bytes held by the algorithm's tables (members, anchors, mapping, distances).
  std::uint64_t table_bytes = 0;
};

struct RunLimits {
  std::uint64_t memory_budget_bytes = std::uint64_t{8} << 30;
};

class KmerSpace;

/// Upper-bound estimate of the bytes an algorithm allocates for (k, d).
/// Member storage uses |alphabet|^(k-d), the Hamming bound on a code with
/// minimum distance d+1 (edit distance never exceeds Hamming distance).
std::uint64_t estimate_table_bytes(const KmerSpace& space, int d, Algorithm algorithm);

/// Throws CapacityError when estimate_table_bytes exceeds the budget.
void check_capacity(const KmerSpace& space, int d, Algorithm algorithm, const RunLimits& limits);

}  // namespace kmis
