#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kmis/kmer.hpp"
#include "kmis/mis.hpp"

namespace kmis {

/// Per-k-mer index of one MIS member within distance d. Cells start 16 bits
/// wide and are widened to 32 bits the first time a member index above
/// 65534 is stored.
class MappingTable {
 public:
  static constexpr std::uint32_t unmapped = 0xFFFFFFFFu;

  explicit MappingTable(std::uint64_t size) : narrow_(size, kNarrowUnmapped) {}

  std::uint64_t size() const noexcept { return wide_ ? wide_cells_.size() : narrow_.size(); }
  unsigned width() const noexcept { return wide_ ? 4 : 2; }

  std::uint32_t get(std::uint64_t code) const noexcept {
    if (wide_) return wide_cells_[code];
    const std::uint16_t v = narrow_[code];
    return v == kNarrowUnmapped ? unmapped : v;
  }

  void set(std::uint64_t code, std::uint32_t member_index) {
    if (!wide_ && member_index >= kNarrowUnmapped) widen();
    if (wide_) {
      wide_cells_[code] = member_index;
    } else {
      narrow_[code] = static_cast<std::uint16_t>(member_index);
    }
  }

  bool complete() const noexcept;
  std::uint64_t bytes() const noexcept { return size() * width(); }

  /// Cells as little-endian bytes of width() each.
  std::vector<std::uint8_t> to_bytes() const;

 private:
  static constexpr std::uint16_t kNarrowUnmapped = 0xFFFF;

  void widen();

  bool wide_ = false;
  std::vector<std::uint16_t> narrow_;
  std::vector<std::uint32_t> wide_cells_;
};

enum class FilterVerdict { reject, accept, undecided };

/// Triangle-inequality screen through the homopolymer anchors:
///   reject    if max_s |v_s - u_s| > d  (lower bound already exceeds d)
///   accept    if min_s (v_s + u_s) <= d (upper bound already within d)
///   undecided otherwise.
/// Reject is tested first.
FilterVerdict filter_bounds(std::span<const int> v_sigma, std::span<const int> anchors_for_u, int d);

/// Algorithm 1: lexicographic scan, compare each k-mer against every member.
/// Throws ParameterError for d outside [0, k) and CapacityError if the
/// estimated member storage exceeds the budget.
MisResult run_greedy_simple(const KmerSpace& space, int d, const RunLimits& limits = {},
                            RunCounters* counters = nullptr);

struct ImprovedResult {
  MisResult mis;
  MappingTable mapping;
};

/// Algorithm 2: same output as run_greedy_simple. Each k-mer first tries
/// the members already assigned to its substitution neighbours, then scans
/// members through filter_bounds, falling back to the banded DP.
ImprovedResult run_greedy_improved(const KmerSpace& space, int d, const RunLimits& limits = {},
                                   RunCounters* counters = nullptr);

/// Builds a complete mapping table for an MIS produced elsewhere, using the
/// same neighbour-reuse and bound filtering as run_greedy_improved.
/// Throws std::logic_error if some k-mer has no member within d.
MappingTable derive_mapping(const KmerSpace& space, const MisResult& mis, RunCounters* counters = nullptr);

}  // namespace kmis
