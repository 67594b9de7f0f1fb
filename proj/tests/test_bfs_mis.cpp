#include <gtest/gtest.h>

#include <random>
#include <set>

#include "kmis/bfs_mis.hpp"
#include "kmis/edit_distance.hpp"
#include "kmis/error.hpp"
#include "kmis/greedy.hpp"
#include "oracle.hpp"

using kmis::GraphVertex;
using kmis::KmerSpace;
using kmis::Level;

namespace {

std::string vertex_string(const KmerSpace& space, GraphVertex x) {
  if (x.level == Level::full) return space.decode(x.code);
  if (space.k() == 1) return "";
  return KmerSpace(space.k() - 1).decode(x.code);
}

std::set<std::string> neighbor_strings(const KmerSpace& space, GraphVertex x) {
  std::set<std::string> out;
  for (const auto& n : kmis::graph_neighbors(space, x)) {
    EXPECT_TRUE(out.insert(vertex_string(space, n)).second) << "duplicate neighbour";
  }
  return out;
}

}  // namespace

TEST(FlatIndex, Bijection) {
  const KmerSpace space(4);
  EXPECT_EQ(kmis::vertex_count(space), 256u + 64u);
  for (std::uint64_t i = 0; i < kmis::vertex_count(space); ++i) {
    const GraphVertex x = kmis::vertex_at(space, i);
    ASSERT_EQ(x.level, i < 256 ? Level::full : Level::short_);
    ASSERT_EQ(kmis::flat_index(space, x), i);
  }
}

TEST(GraphNeighbors, Examples) {
  const KmerSpace s3(3);
  auto full = kmis::graph_neighbors(s3, GraphVertex{Level::full, s3.encode("AAA")});
  EXPECT_EQ(full.size(), 10u);
  EXPECT_EQ(neighbor_strings(s3, GraphVertex{Level::full, s3.encode("AAA")}),
            (std::set<std::string>{"AAC", "AAG", "AAT", "ACA", "AGA", "ATA", "CAA", "GAA", "TAA", "AA"}));

  const GraphVertex aa{Level::short_, KmerSpace(2).encode("AA")};
  EXPECT_EQ(kmis::graph_neighbors(s3, aa).size(), 10u);
  EXPECT_EQ(neighbor_strings(s3, aa),
            (std::set<std::string>{"AAA", "AAC", "AAG", "AAT", "ACA", "AGA", "ATA", "CAA", "GAA", "TAA"}));

  const KmerSpace s5(5);
  const auto tgatt = neighbor_strings(s5, GraphVertex{Level::full, s5.encode("TGATT")});
  EXPECT_TRUE(tgatt.count("GATT"));
}

TEST(GraphNeighbors, MatchStringOracleExhaustively) {
  for (unsigned k = 1; k <= 5; ++k) {
    const KmerSpace space(k);
    for (std::uint64_t i = 0; i < kmis::vertex_count(space); ++i) {
      const GraphVertex x = kmis::vertex_at(space, i);
      const std::string s = vertex_string(space, x);
      std::set<std::string> expected;
      if (x.level == Level::full) {
        expected = oracle::substitutions(s);
        const auto del = oracle::deletions(s);
        expected.insert(del.begin(), del.end());
      } else {
        expected = oracle::insertions(s);
      }
      ASSERT_EQ(neighbor_strings(space, x), expected) << s;
      for (const auto& n : kmis::graph_neighbors(space, x)) {
        ASSERT_FALSE(x.level == Level::short_ && n.level == Level::short_);
      }
    }
  }
}

TEST(GraphDistance, Examples) {
  const KmerSpace s5(5);
  EXPECT_EQ(kmis::graph_distance(s5, s5.encode("TGATT"), s5.encode("ATTGA")), 4);
  EXPECT_EQ(kmis::graph_distance(s5, s5.encode("TGATT"), s5.encode("TGATT")), 0);
  EXPECT_EQ(kmis::graph_distance(s5, s5.encode("TGATT"), s5.encode("TGCTT")), 1);
  EXPECT_THROW(kmis::graph_distance(s5, s5.size(), 0), kmis::InputError);
}

TEST(GraphDistance, EqualsEditDistanceExhaustivelyUpToK4) {
  for (unsigned k = 1; k <= 4; ++k) {
    const KmerSpace space(k);
    std::vector<std::uint8_t> a(k), b(k);
    for (auto u : space.enumerate()) {
      const auto dist = kmis::graph_distances_from(space, u);
      space.unpack(u, a.data());
      for (auto v : space.enumerate()) {
        space.unpack(v, b.data());
        ASSERT_EQ(dist[v], kmis::edit_full(a, b));
      }
    }
  }
}

TEST(GraphDistance, EqualsEditDistanceOnRandomPairs) {
  std::mt19937_64 rng(21);
  for (unsigned k = 5; k <= 7; ++k) {
    const KmerSpace space(k);
    std::uniform_int_distribution<std::uint64_t> pick(0, space.size() - 1);
    std::vector<std::uint8_t> a(k), b(k);
    for (int i = 0; i < 300; ++i) {
      const auto u = pick(rng), v = pick(rng);
      space.unpack(u, a.data());
      space.unpack(v, b.data());
      ASSERT_EQ(kmis::graph_distance(space, u, v), kmis::edit_full(a, b));
    }
  }
}

TEST(BfsMis, Examples) {
  EXPECT_EQ(kmis::run_bfs_mis(KmerSpace(8), 2).size(), 1025u);
  EXPECT_EQ(kmis::run_bfs_mis(KmerSpace(4), 1).size(), 64u);
  const auto mis = kmis::run_bfs_mis(KmerSpace(5), 4);
  EXPECT_EQ(mis.algorithm, kmis::Algorithm::bfs);
  EXPECT_EQ(mis.members.size(), 4u);
}

TEST(BfsMis, MatchesSimpleGreedy) {
  for (unsigned k = 1; k <= 6; ++k) {
    const KmerSpace space(k);
    for (int d = 0; d < static_cast<int>(k); ++d) {
      ASSERT_EQ(kmis::run_bfs_mis(space, d).members, kmis::run_greedy_simple(space, d).members)
          << "k=" << k << " d=" << d;
    }
  }
}

TEST(BfsMis, DequeueBoundAndMonotoneField) {
  const KmerSpace space(6);
  for (int d = 1; d < 6; ++d) {
    kmis::BfsProbe probe;
    probe.count_dequeues = true;
    std::vector<std::uint8_t> previous(kmis::vertex_count(space), kmis::DistanceField::unreached);
    bool monotone = true;
    probe.after_explore = [&](std::uint64_t member, const kmis::DistanceField& field) {
      const auto cells = field.cells();
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (cells[i] > previous[i]) monotone = false;
        if (cells[i] != kmis::DistanceField::unreached && cells[i] > d) monotone = false;
      }
      if (cells[member] != 0) monotone = false;
      previous.assign(cells.begin(), cells.end());
    };
    kmis::RunCounters counters;
    kmis::run_bfs_mis(space, d, {}, &counters, &probe);
    EXPECT_TRUE(monotone) << "d=" << d;
    EXPECT_LE(probe.max_dequeues, d) << "d=" << d;
    EXPECT_GT(counters.vertices_explored, 0u);
  }
}

TEST(BfsMis, FieldHoldsDistanceToNearestMember) {
  const KmerSpace space(5);
  const int d = 3;
  std::vector<std::uint8_t> final_field;
  std::vector<std::uint64_t> members;
  kmis::BfsProbe probe;
  probe.after_explore = [&](std::uint64_t m, const kmis::DistanceField& f) {
    members.push_back(m);
    final_field.assign(f.cells().begin(), f.cells().end());
  };
  kmis::run_bfs_mis(space, d, {}, nullptr, &probe);
  std::vector<std::uint8_t> a(5), b(5);
  for (auto v : space.enumerate()) {
    int best = 255;
    space.unpack(v, b.data());
    for (auto m : members) {
      space.unpack(m, a.data());
      best = std::min(best, kmis::edit_full(a, b));
    }
    ASSERT_LE(best, d);
    ASSERT_EQ(final_field[v], best);
  }
}

TEST(BfsMis, RejectsBadParameters) {
  EXPECT_THROW(kmis::run_bfs_mis(KmerSpace(4), 4), kmis::ParameterError);
  EXPECT_THROW(kmis::run_bfs_mis(KmerSpace(12), 2, kmis::RunLimits{1 << 20}), kmis::CapacityError);
}
