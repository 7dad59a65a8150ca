#include <gtest/gtest.h>

#include "oracle.hpp"
#include "sbal/acceptance.hpp"
#include "sbal/enumerate.hpp"
#include "sbal/ruskey.hpp"

using namespace sbal;

TEST(Graph, SmallExamples) {
  const auto a = build_graph(antichain(2));
  EXPECT_EQ(a.vertex_count(), 2u);
  EXPECT_EQ(a.edges().size(), 1u);
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto c = build_graph(chain(n));
    EXPECT_EQ(c.vertex_count(), 1u);
    EXPECT_TRUE(c.edges().empty());
  }
  EXPECT_TRUE(is_connected(build_graph(chain(3))));
  const auto s3 = build_graph(antichain(3), Adjacency::Adjacent);
  EXPECT_TRUE(is_connected(s3));
  EXPECT_EQ(s3.edges().size(), 6u);
  EXPECT_EQ(build_graph(antichain(3)).edges().size(), 9u);
}

TEST(Graph, ZigzagBipartition) {
  const auto g = build_graph(zigzag(6));
  EXPECT_EQ(g.vertex_count(), 61u);
  const auto b = bipartition(g);
  EXPECT_TRUE(b.proper);
  EXPECT_EQ(b.difference(), 1u);
}

TEST(Graph, EdgesAreSingleTranspositions) {
  const Poset p = grid(2, 3);
  for (auto mode : {Adjacency::Arbitrary, Adjacency::Adjacent}) {
    const auto g = build_graph(p, mode);
    for (auto [u, v] : g.edges()) {
      const auto& a = g.vertices[u].labels;
      const auto& b = g.vertices[v].labels;
      std::vector<std::size_t> diff;
      for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) diff.push_back(i);
      ASSERT_EQ(diff.size(), 2u);
      ASSERT_EQ(a[diff[0]], b[diff[1]]);
      if (mode == Adjacency::Adjacent) {
        const auto lo = std::min(a[diff[0]], a[diff[1]]);
        const auto hi = std::max(a[diff[0]], a[diff[1]]);
        ASSERT_EQ(hi, lo + 1);
      }
    }
  }
}

TEST(Graph, DifferenceIsImbalance) {
  for (std::size_t n = 0; n <= 5; ++n)
    for (const Poset& p : poset_classes(n)) {
      const auto b = bipartition(build_graph(p));
      ASSERT_EQ(static_cast<std::int64_t>(b.difference()), oracle::extensions(p).imbalance());
      ASSERT_TRUE(is_connected(build_graph(p, Adjacency::Adjacent)));
    }
}

TEST(Graph, Caps) {
  EXPECT_THROW(build_graph(antichain(8), Adjacency::Arbitrary, 100), ResourceLimit);
  const auto g = build_graph(antichain(5));
  EXPECT_THROW(hamiltonian_path(g, 10), ResourceLimit);
}

TEST(Hamilton, Examples) {
  const auto c = build_graph(chain(4));
  const auto p = hamiltonian_path(c);
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(p->size(), 1u);
  const auto a = build_graph(antichain(4));
  const auto pa = hamiltonian_path(a);
  ASSERT_TRUE(pa.has_value());
  EXPECT_TRUE(is_hamiltonian_path(a, *pa));
  EXPECT_FALSE(hamiltonian_path(build_graph(acceptance::eight_cycle())).has_value());
  EXPECT_FALSE(is_hamiltonian_path(a, {0, 0}));
}

TEST(Hamilton, ReportExamples) {
  const auto r = ruskey_report(acceptance::eight_cycle());
  EXPECT_EQ(r.si, 2);
  EXPECT_FALSE(r.path_found);
  EXPECT_TRUE(r.consistent_with_conjecture);
  const auto a = ruskey_report(antichain(2));
  EXPECT_EQ(a.si, 0);
  EXPECT_TRUE(a.path_found);
  EXPECT_TRUE(a.consistent_with_conjecture);
}

TEST(Hamilton, SweepFour) {
  for (std::size_t n = 0; n <= 4; ++n)
    for (const Poset& p : poset_classes(n)) {
      const auto g = build_graph(p);
      const auto path = hamiltonian_path(g);
      if (path) {
        ASSERT_TRUE(is_hamiltonian_path(g, *path));
        ASSERT_LE(sign_imbalance(p), 1);
      }
      ASSERT_TRUE(ruskey_report(p).consistent_with_conjecture);
    }
}

TEST(Hamilton, BudgetExceeded) {
  const auto g = build_graph(antichain(5));
  EXPECT_THROW(hamiltonian_path(g, kDefaultPathCap, 3), ResourceLimit);
}
