#include "kmis/mis.hpp"

#include <algorithm>
#include <string>

#include "kmis/error.hpp"
#include "kmis/kmer.hpp"

namespace kmis {

std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::simple_greedy:
      return "1";
    case Algorithm::improved_greedy:
      return "2";
    case Algorithm::bfs:
      return "3";
  }
  return "?";
}

Algorithm parse_algorithm(std::string_view s) {
  if (s == "1") return Algorithm::simple_greedy;
  if (s == "2") return Algorithm::improved_greedy;
  if (s == "3") return Algorithm::bfs;
  throw InputError("unknown algorithm '" + std::string(s) + "' (expected 1, 2 or 3)");
}

namespace {

using u128 = unsigned __int128;

std::uint64_t saturate(u128 x) {
  return x > UINT64_MAX ? UINT64_MAX : static_cast<std::uint64_t>(x);
}

}  // namespace

std::uint64_t estimate_table_bytes(const KmerSpace& space, int d, Algorithm algorithm) {
  const unsigned k = space.k();
  const unsigned free_positions = d >= static_cast<int>(k) ? 0 : k - static_cast<unsigned>(std::max(d, 0));
  const u128 member_bound = space.radix().pow(free_positions);
  const u128 kmers = space.size();
  switch (algorithm) {
    case Algorithm::simple_greedy:
      // codes plus unpacked digits
      return saturate(member_bound * (8 + k));
    case Algorithm::improved_greedy: {
      const unsigned width = member_bound > 65534 ? 4 : 2;
      return saturate(kmers * width + member_bound * (8 + k + sizeof(int) * space.sigma()));
    }
    case Algorithm::bfs: {
      const u128 vertices = kmers + space.radix().pow(k - 1);
      // Frontier holds at most one ball of radius d-1.
      u128 ball = 1;
      const u128 degree = static_cast<u128>(k) * (2 * space.sigma());
      for (int r = 1; r < d && ball < vertices; ++r) ball *= degree;
      ball = std::min(ball, vertices);
      return saturate(vertices + member_bound * 8 + ball * 8);
    }
  }
  return UINT64_MAX;
}

void check_capacity(const KmerSpace& space, int d, Algorithm algorithm, const RunLimits& limits) {
  const std::uint64_t need = estimate_table_bytes(space, d, algorithm);
  if (need > limits.memory_budget_bytes) {
    throw CapacityError("algorithm " + std::string(to_string(algorithm)) + " at k=" + std::to_string(space.k()) +
                            " d=" + std::to_string(d) + " needs an estimated " + std::to_string(need) +
                            " bytes, budget is " + std::to_string(limits.memory_budget_bytes),
                        need, limits.memory_budget_bytes);
  }
}

}  // namespace kmis
