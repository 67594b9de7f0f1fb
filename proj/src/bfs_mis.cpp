#include "kmis/bfs_mis.hpp"

#include <algorithm>
#include <string>

#include "kmis/edit_distance.hpp"
#include "kmis/error.hpp"

namespace kmis {

std::uint64_t flat_index(const KmerSpace& space, GraphVertex x) noexcept {
  return x.level == Level::full ? x.code : space.size() + x.code;
}

GraphVertex vertex_at(const KmerSpace& space, std::uint64_t flat) noexcept {
  if (flat < space.size()) return GraphVertex{Level::full, flat};
  return GraphVertex{Level::short_, flat - space.size()};
}

std::uint64_t vertex_count(const KmerSpace& space) noexcept { return space.size() + space.radix().pow(space.k() - 1); }

std::vector<GraphVertex> graph_neighbors(const KmerSpace& space, GraphVertex x) {
  std::vector<GraphVertex> out;
  for_each_graph_neighbor(space, flat_index(space, x), [&](std::uint64_t n) { out.push_back(vertex_at(space, n)); });
  return out;
}

MisResult run_bfs_mis(const KmerSpace& space, int d, const RunLimits& limits, RunCounters* counters, BfsProbe* probe) {
  EditBudget::checked(d, space.k());
  if (d > 254) throw ParameterError("d=" + std::to_string(d) + " exceeds the 8-bit distance field (max 254)");
  check_capacity(space, d, Algorithm::bfs, limits);

  RunCounters local;
  RunCounters& c = counters ? *counters : local;
  DistanceField distance(vertex_count(space));
  if (probe && probe->count_dequeues) probe->dequeues.assign(distance.size(), 0);

  std::vector<std::uint64_t> members;
  std::vector<std::uint64_t> frontier;

  for (const std::uint64_t v : space.enumerate()) {
    if (distance[v] != DistanceField::unreached) continue;
    members.push_back(v);
    distance[v] = 0;
    if (d == 0) {
      if (probe && probe->after_explore) probe->after_explore(v, distance);
      continue;
    }

    frontier.clear();
    frontier.push_back(v);
    for (std::size_t head = 0; head < frontier.size(); ++head) {
      const std::uint64_t u = frontier[head];
      ++c.vertices_explored;
      if (probe && probe->count_dequeues) {
        auto& n = probe->dequeues[u];
        if (n < 255) ++n;
        probe->max_dequeues = std::max(probe->max_dequeues, n);
      }
      const auto next = static_cast<std::uint8_t>(distance[u] + 1);
      for_each_graph_neighbor(space, u, [&](std::uint64_t w) {
        if (distance[w] > next) {
          distance[w] = next;
          if (next < d) frontier.push_back(w);
        }
      });
    }
    if (probe) {
      probe->max_frontier = std::max<std::uint64_t>(probe->max_frontier, frontier.size());
      if (probe->after_explore) probe->after_explore(v, distance);
    }
  }

  c.table_bytes = distance.size() + members.capacity() * sizeof(std::uint64_t) +
                  frontier.capacity() * sizeof(std::uint64_t);
  return MisResult{space.k(), d, std::move(members), Algorithm::bfs};
}

std::vector<std::uint8_t> graph_distances_from(const KmerSpace& space, std::uint64_t u) {
  std::vector<std::uint8_t> dist(vertex_count(space), DistanceField::unreached);
  std::vector<std::uint64_t> queue{u};
  dist[u] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::uint64_t x = queue[head];
    const auto next = static_cast<std::uint8_t>(dist[x] + 1);
    for_each_graph_neighbor(space, x, [&](std::uint64_t w) {
      if (dist[w] == DistanceField::unreached) {
        dist[w] = next;
        queue.push_back(w);
      }
    });
  }
  return dist;
}

int graph_distance(const KmerSpace& space, std::uint64_t u, std::uint64_t v) {
  if (!space.contains(u) || !space.contains(v)) throw InputError("k-mer code out of range");
  if (u == v) return 0;
  std::vector<std::uint8_t> dist(vertex_count(space), DistanceField::unreached);
  std::vector<std::uint64_t> queue{u};
  dist[u] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::uint64_t x = queue[head];
    const auto next = static_cast<std::uint8_t>(dist[x] + 1);
    bool hit = false;
    for_each_graph_neighbor(space, x, [&](std::uint64_t w) {
      if (dist[w] == DistanceField::unreached) {
        dist[w] = next;
        queue.push_back(w);
        hit = hit || w == v;
      }
    });
    if (hit) return next;
  }
  return -1;  // unreachable; the graph is connected
}

}  // namespace kmis
