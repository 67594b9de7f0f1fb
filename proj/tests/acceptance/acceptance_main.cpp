// One PASS/FAIL line per acceptance criterion. Pass criterion numbers as
// arguments to run a subset.

#include <sys/resource.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "kmis/app.hpp"
#include "kmis/bfs_mis.hpp"
#include "kmis/edit_distance.hpp"
#include "kmis/greedy.hpp"
#include "kmis/verify.hpp"

using kmis::Algorithm;
using kmis::KmerSpace;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
};

Verdict fail(std::string why) { return {false, std::move(why)}; }

std::string kd(unsigned k, int d) { return "(k=" + std::to_string(k) + ",d=" + std::to_string(d) + ")"; }

// Published MIS sizes for d >= 2, indexed [d][k].
const std::map<int, std::map<unsigned, std::uint64_t>> kPublishedSizes = {
    {2, {{3, 4}, {4, 12}, {5, 36}, {6, 96}, {7, 311}, {8, 1025}, {9, 3451}, {10, 11743}, {12, 141943}}},
    {3, {{4, 4}, {5, 8}, {6, 20}, {7, 57}, {8, 164}, {9, 481}, {10, 1463}, {12, 14522}}},
    {4, {{5, 4}, {6, 4}, {7, 14}, {8, 34}, {9, 90}, {10, 242}, {12, 1894}}},
    {5, {{6, 4}, {7, 4}, {8, 12}, {9, 25}, {10, 57}}},
    {6, {{7, 4}, {8, 4}, {9, 10}, {10, 17}}},
    {7, {{8, 4}, {9, 4}, {10, 9}}},
    {8, {{9, 4}, {10, 4}}},
    {9, {{10, 4}}},
};

constexpr double kTolerance = 0.15;

// Sizes computed once and shared by criteria 2-4.
std::map<std::pair<unsigned, int>, kmis::MisResult>& grid_cache() {
  static std::map<std::pair<unsigned, int>, kmis::MisResult> cache;
  return cache;
}

const kmis::MisResult& auto_mis(unsigned k, int d) {
  auto& cache = grid_cache();
  const auto key = std::make_pair(k, d);
  auto it = cache.find(key);
  if (it == cache.end()) {
    const KmerSpace space(k);
    it = cache.emplace(key, kmis::run(space, d, kmis::select_algorithm(k, d)).mis).first;
  }
  return it->second;
}

Verdict oracle_equivalence() {
  for (unsigned k = 2; k <= 7; ++k) {
    const KmerSpace space(k);
    for (int d = 1; d < static_cast<int>(k); ++d) {
      const auto oracle = kmis::brute_oracle_mis(k, d).members;
      for (auto a : {Algorithm::simple_greedy, Algorithm::improved_greedy, Algorithm::bfs}) {
        if (kmis::run(space, d, a).mis.members != oracle) {
          return fail("algorithm " + std::string(kmis::to_string(a)) + " differs from the oracle at " + kd(k, d));
        }
      }
    }
  }
  return {true, "k in [2,7], all d, algorithms 1/2/3 identical to brute oracle"};
}

Verdict validity() {
  std::uint64_t cells = 0;
  for (unsigned k = 2; k <= 10; ++k) {
    const KmerSpace space(k);
    for (int d = 1; d < static_cast<int>(k); ++d) {
      kmis::VerifyOptions options;
      options.allow_large = true;
      const auto report = kmis::verify(space, auto_mis(k, d), options);
      if (report.sampled) return fail("verification was sampled at " + kd(k, d));
      if (!report.independent) return fail("not independent at " + kd(k, d));
      if (!report.maximal) return fail("not maximal at " + kd(k, d) + ", orphan " + space.decode(*report.orphan));
      ++cells;
    }
  }
  return {true, std::to_string(cells) + " cells verified exhaustively"};
}

Verdict forced_entries() {
  for (unsigned k = 2; k <= 10; ++k) {
    const KmerSpace space(k);
    std::uint64_t expect = 1;
    for (unsigned i = 1; i < k; ++i) expect *= 4;
    if (auto_mis(k, 1).size() != expect) {
      return fail("d=1 size " + std::to_string(auto_mis(k, 1).size()) + " at k=" + std::to_string(k));
    }
    const auto& diag = auto_mis(k, static_cast<int>(k) - 1);
    std::vector<std::uint64_t> homopolymers;
    for (unsigned s = 0; s < 4; ++s) homopolymers.push_back(space.homopolymer(s));
    if (diag.members != homopolymers) return fail("diagonal is not the four homopolymers at k=" + std::to_string(k));
  }
  return {true, "row d=1 = 4^(k-1), diagonal = homopolymers, k in [2,10]"};
}

Verdict order_dependent_entries() {
  int exact = 0, within = 0, outside = 0;
  std::ostringstream deviations;
  for (unsigned k = 4; k <= 10; ++k) {
    for (int d = 2; d <= static_cast<int>(k) - 2; ++d) {
      const auto expect = kPublishedSizes.at(d).at(k);
      const auto got = auto_mis(k, d).size();
      if (got == expect) {
        ++exact;
        continue;
      }
      const double rel = std::abs(static_cast<double>(got) - static_cast<double>(expect)) / static_cast<double>(expect);
      (rel <= kTolerance ? within : outside) += 1;
      deviations << " " << kd(k, d) << ":" << got << " vs " << expect;
      std::cerr << "  deviation " << kd(k, d) << ": computed " << got << ", published " << expect << '\n';
    }
  }
  std::string detail = std::to_string(exact) + " exact, " + std::to_string(within) + " within 15%, " +
                       std::to_string(outside) + " outside";
  if (outside > 0) return fail(detail + ";" + deviations.str());
  return {true, detail + (deviations.str().empty() ? "" : ";" + deviations.str())};
}

Verdict distance_equivalence() {
  std::uint64_t pairs = 0;
  for (unsigned k = 1; k <= 5; ++k) {
    const KmerSpace space(k);
    std::vector<std::uint8_t> a(k), b(k);
    for (auto u : space.enumerate()) {
      const auto dist = kmis::graph_distances_from(space, u);
      space.unpack(u, a.data());
      for (auto v : space.enumerate()) {
        space.unpack(v, b.data());
        if (dist[v] != kmis::edit_full(a, b)) return fail("mismatch at " + space.decode(u) + "," + space.decode(v));
        ++pairs;
      }
    }
  }
  std::mt19937_64 rng(5);
  for (unsigned k = 6; k <= 8; ++k) {
    const KmerSpace space(k);
    std::uniform_int_distribution<std::uint64_t> pick(0, space.size() - 1);
    std::vector<std::uint8_t> a(k), b(k);
    for (int i = 0; i < 10000; ++i) {
      const auto u = pick(rng), v = pick(rng);
      space.unpack(u, a.data());
      space.unpack(v, b.data());
      if (kmis::graph_distance(space, u, v) != kmis::edit_full(a, b)) {
        return fail("mismatch at " + space.decode(u) + "," + space.decode(v));
      }
      ++pairs;
    }
  }
  return {true, std::to_string(pairs) + " pairs"};
}

Verdict kernel_correctness() {
  kmis::EditWorkspace ws;
  std::uint64_t checks = 0;
  for (unsigned k = 1; k <= 5; ++k) {
    const KmerSpace space(k);
    std::vector<std::uint8_t> a(k), b(k);
    for (auto u : space.enumerate()) {
      space.unpack(u, a.data());
      for (auto v : space.enumerate()) {
        space.unpack(v, b.data());
        const int full = kmis::edit_full(a, b);
        for (int d = 0; d < static_cast<int>(k); ++d, ++checks) {
          if (kmis::edit_within(a, b, d, ws) != (full <= d)) return fail("band mismatch at " + kd(k, d));
        }
      }
    }
  }
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<unsigned> pick_k(2, 15);
  for (int i = 0; i < 1000000; ++i, ++checks) {
    const unsigned k = pick_k(rng);
    const KmerSpace space(k);
    std::uniform_int_distribution<std::uint64_t> pick(0, space.size() - 1);
    std::uniform_int_distribution<int> pick_d(0, static_cast<int>(k) - 1);
    std::vector<std::uint8_t> a(k), b(k);
    space.unpack(pick(rng), a.data());
    space.unpack(pick(rng), b.data());
    const int d = pick_d(rng);
    if (kmis::edit_within(a, b, d, ws) != (kmis::edit_full(a, b) <= d)) return fail("band mismatch at " + kd(k, d));
  }
  for (unsigned k = 1; k <= 6; ++k) {
    const KmerSpace space(k);
    std::vector<std::uint8_t> a(k), h(k);
    for (auto u : space.enumerate()) {
      space.unpack(u, a.data());
      const auto dist = space.homopolymer_distances(u);
      for (unsigned s = 0; s < 4; ++s, ++checks) {
        std::fill(h.begin(), h.end(), static_cast<std::uint8_t>(s));
        if (dist[s] != kmis::edit_full(a, h)) return fail("homopolymer distance mismatch at " + space.decode(u));
      }
    }
  }
  return {true, std::to_string(checks) + " checks"};
}

Verdict filter_soundness() {
  std::uint64_t rejects = 0, accepts = 0;
  for (unsigned k = 1; k <= 6; ++k) {
    const KmerSpace space(k);
    std::vector<std::vector<int>> anchors;
    std::vector<std::uint8_t> digits(space.size() * k);
    for (auto c : space.enumerate()) {
      anchors.push_back(space.homopolymer_distances(c));
      space.unpack(c, digits.data() + c * k);
    }
    for (std::uint64_t u = 0; u < space.size(); ++u) {
      const std::span<const std::uint8_t> a(digits.data() + u * k, k);
      for (std::uint64_t v = 0; v < space.size(); ++v) {
        const std::span<const std::uint8_t> b(digits.data() + v * k, k);
        const int dist = kmis::edit_full(a, b);
        for (int d = 0; d < static_cast<int>(k); ++d) {
          switch (kmis::filter_bounds(anchors[v], anchors[u], d)) {
            case kmis::FilterVerdict::reject:
              if (dist <= d) return fail("unsound REJECT at " + space.decode(u) + "," + space.decode(v));
              ++rejects;
              break;
            case kmis::FilterVerdict::accept:
              if (dist > d) return fail("unsound ACCEPT at " + space.decode(u) + "," + space.decode(v));
              ++accepts;
              break;
            case kmis::FilterVerdict::undecided:
              break;
          }
        }
      }
    }
  }
  return {true, std::to_string(rejects) + " rejects, " + std::to_string(accepts) + " accepts, none contradicted"};
}

Verdict scale_smoke() {
  constexpr std::uint64_t budget = std::uint64_t{8} << 30;
  kmis::RunConfig config;
  config.k = 12;
  config.d = 4;
  config.memory_budget_bytes = budget;
  std::ostringstream sink;
  const auto stats = kmis::compute(config, sink);
  rusage usage{};
  getrusage(RUSAGE_SELF, &usage);
  const std::uint64_t rss = static_cast<std::uint64_t>(usage.ru_maxrss) * 1024;
  const std::uint64_t expect = kPublishedSizes.at(4).at(12);
  const double rel = std::abs(static_cast<double>(stats.mis_size) - static_cast<double>(expect)) / expect;
  std::ostringstream detail;
  detail << "size " << stats.mis_size << " (published " << expect << "), algorithm "
         << kmis::to_string(stats.algorithm) << ", " << stats.wall_seconds << " s, peak RSS " << rss / (1 << 20)
         << " MiB";
  if (stats.wall_seconds > 7200) return fail(detail.str() + "; over 2 h");
  if (rss > budget) return fail(detail.str() + "; over 8 GiB");
  if (rel > kTolerance) return fail(detail.str() + "; size outside 15%");
  return {true, detail.str()};
}

Verdict reexploration_bound() {
  const KmerSpace space(8);
  const int d = 3;
  kmis::BfsProbe probe;
  probe.count_dequeues = true;
  kmis::run_bfs_mis(space, d, {}, nullptr, &probe);
  const auto worst = probe.max_dequeues;
  const std::string detail = "max dequeues per vertex " + std::to_string(worst) + " (bound " + std::to_string(d) + ")";
  if (worst > d) return fail(detail);
  return {true, detail};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria = {
      {"oracle equivalence", oracle_equivalence},
      {"validity", validity},
      {"forced sizes", forced_entries},
      {"order-dependent sizes", order_dependent_entries},
      {"distance equivalence", distance_equivalence},
      {"kernel correctness", kernel_correctness},
      {"filter soundness", filter_soundness},
      {"scale smoke test", scale_smoke},
      {"re-exploration bound", reexploration_bound},
  };
  std::set<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.insert(std::atoi(argv[i]));

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int n = static_cast<int>(i) + 1;
    if (!wanted.empty() && !wanted.count(n)) continue;
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!v.pass) ++failures;
    std::printf("%s %d %s: %s [%.1f s]\n", v.pass ? "PASS" : "FAIL", n, criteria[i].first, v.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
