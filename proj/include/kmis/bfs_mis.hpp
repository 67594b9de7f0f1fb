#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "kmis/kmer.hpp"
#include "kmis/mis.hpp"

namespace kmis {

// Vertices of the extended graph: every k-mer (full) and every (k-1)-mer
// (short). Full vertices are joined by substitutions; a full and a short
// vertex are joined when deleting one character of the full one yields the
// short one. Short vertices are never adjacent to each other. Shortest-path
// length between two k-mers equals their edit distance.

enum class Level : std::uint8_t { full, short_ };

struct GraphVertex {
  Level level = Level::full;
  std::uint64_t code = 0;

  friend bool operator==(const GraphVertex&, const GraphVertex&) = default;
};

/// Full vertices occupy [0, |S|^k), short ones [|S|^k, |S|^k + |S|^(k-1)).
std::uint64_t flat_index(const KmerSpace& space, GraphVertex x) noexcept;
GraphVertex vertex_at(const KmerSpace& space, std::uint64_t flat) noexcept;
std::uint64_t vertex_count(const KmerSpace& space) noexcept;

/// Calls fn(flat_index) for each neighbour of the vertex at `flat`, without
/// duplicates: deletions are taken only at the first character of a run and
/// a letter is inserted only where it does not extend a run on its left.
template <typename Fn>
void for_each_graph_neighbor(const KmerSpace& space, std::uint64_t flat, Fn&& fn) {
  const unsigned k = space.k();
  const unsigned sigma = space.sigma();
  const Radix& r = space.radix();
  const std::uint64_t full_count = space.size();
  std::uint8_t digits[64];

  if (flat < full_count) {
    const std::uint64_t code = flat;
    r.unpack(code, k, digits);
    for (unsigned i = 0; i < k; ++i) {
      const unsigned e = k - 1 - i;
      const std::uint64_t step = r.pow(e);
      const std::uint64_t base = code - digits[i] * step;
      for (unsigned c = 0; c < sigma; ++c) {
        if (c != digits[i]) fn(base + c * step);
      }
      if (i == 0 || digits[i] != digits[i - 1]) {
        // drop position i: keep the i leading digits and the e trailing ones
        const std::uint64_t shorter = r.mul_pow(r.div_pow(code, e + 1), e) + r.mod_pow(code, e);
        fn(full_count + shorter);
      }
    }
  } else {
    const std::uint64_t code = flat - full_count;
    r.unpack(code, k - 1, digits);
    for (unsigned i = 0; i < k; ++i) {
      const unsigned e = k - 1 - i;  // digits to the right of the inserted one
      const std::uint64_t head = r.div_pow(code, e);
      const std::uint64_t tail = r.mod_pow(code, e);
      for (unsigned c = 0; c < sigma; ++c) {
        if (i > 0 && digits[i - 1] == c) continue;
        fn(r.mul_pow(head * sigma + c, e) + tail);
      }
    }
  }
}

std::vector<GraphVertex> graph_neighbors(const KmerSpace& space, GraphVertex x);

/// Min graph distance from each vertex to the members selected so far.
/// One byte per vertex; `unreached` stands for infinity.
class DistanceField {
 public:
  static constexpr std::uint8_t unreached = 255;

  explicit DistanceField(std::uint64_t vertices) : cells_(vertices, unreached) {}

  std::uint8_t operator[](std::uint64_t flat) const noexcept { return cells_[flat]; }
  std::uint8_t& operator[](std::uint64_t flat) noexcept { return cells_[flat]; }
  std::uint64_t size() const noexcept { return cells_.size(); }
  std::span<const std::uint8_t> cells() const noexcept { return cells_; }

 private:
  std::vector<std::uint8_t> cells_;
};

/// Optional instrumentation for run_bfs_mis. Counting per-vertex dequeues
/// costs one extra byte per vertex.
struct BfsProbe {
  bool count_dequeues = false;
  std::vector<std::uint8_t> dequeues;  // saturates at 255
  std::uint8_t max_dequeues = 0;
  std::uint64_t max_frontier = 0;
  /// Called after each member's exploration finishes.
  std::function<void(std::uint64_t member, const DistanceField&)> after_explore;
};

/// Algorithm 3. Output is identical to run_greedy_simple. Throws
/// ParameterError unless 0 <= d < k and d <= 254, and CapacityError if the
/// distance field does not fit the budget.
MisResult run_bfs_mis(const KmerSpace& space, int d, const RunLimits& limits = {}, RunCounters* counters = nullptr,
                      BfsProbe* probe = nullptr);

/// Shortest path between two k-mers in the extended graph (plain BFS).
int graph_distance(const KmerSpace& space, std::uint64_t u, std::uint64_t v);

/// Shortest-path distance from k-mer `u` to every vertex, indexed by flat index.
std::vector<std::uint8_t> graph_distances_from(const KmerSpace& space, std::uint64_t u);

}  // namespace kmis
