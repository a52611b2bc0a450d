#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

using namespace hyperspec;

TEST(Builder, ValidatesEdges) {
  hypergraph_builder b(3, 4);
  EXPECT_THROW(b.add({0, 1}), error);
  EXPECT_THROW(b.add({0, 1, 4}), error);
  EXPECT_THROW(b.add({0, 1, -1}), error);
  EXPECT_THROW(b.add({0, 2, 2}), error);
  EXPECT_THROW(b.add({0, 1, 2}, -1.0), error);
  EXPECT_THROW(b.add({0, 1, 2}, std::nan("")), error);
  EXPECT_THROW(hypergraph(1, 3), error);
}

TEST(Builder, SetAddAndErase) {
  hypergraph_builder b(3, 5);
  b.add({2, 1, 0});
  b.add({0, 1, 2}, 0.5);
  b.set({1, 2, 3}, 2.0);
  b.set({1, 2, 4}, 3.0);
  b.set({1, 2, 4}, 0.0);
  auto g = b.build();
  ASSERT_EQ(g.num_edges(), 2u);
  EXPECT_EQ(g.weight_of({2, 0, 1}), 1.5);
  EXPECT_EQ(g.weight_of({1, 2, 4}), 0.0);
  EXPECT_DOUBLE_EQ(g.size(), 3.5);
  EXPECT_EQ(g.max_weight(), 2.0);
  EXPECT_FALSE(g.unweighted());
  auto e = g.edge(1);
  EXPECT_EQ(std::vector<int>(e.begin(), e.end()), (std::vector<int>{1, 2, 3}));
}

TEST(Families, EdgeCounts) {
  EXPECT_EQ(complete_graph(3, 6).num_edges(), 20u);
  EXPECT_EQ(single_edge(4).num_edges(), 1u);
  EXPECT_EQ(complete_multipartite(3, {1, 2, 3}).num_edges(), 6u);  // 1 * 2 * 3
  EXPECT_EQ(complete_multipartite(2, {2, 3}).num_edges(), 6u);
  EXPECT_EQ(turan_graph(7, 3).num_edges(), 16u);
  EXPECT_EQ(turan_parts(7, 3), (std::vector<int>{3, 2, 2}));
  EXPECT_EQ(cycle_graph(3, 12).num_edges(), 12u);
  EXPECT_EQ(cycle_graph(2, 4).num_edges(), 4u);
  auto bs = beta_star(4, 3);
  EXPECT_EQ(bs.order(), 10);
  EXPECT_EQ(bs.num_edges(), 3u);
  auto ts = t_star(4, 2, 6);
  EXPECT_EQ(ts.num_edges(), 6u);
  EXPECT_THROW(cycle_graph(3, 3), error);
  EXPECT_THROW(turan_graph(3, 4), error);
}

TEST(Families, MultipartiteEdgesCrossAllClasses) {
  auto g = complete_multipartite(3, {2, 2, 2, 1});
  // 2*2*2 + 3 * (2*2*1)
  EXPECT_EQ(g.num_edges(), 20u);
  std::vector<int> cls{0, 0, 1, 1, 2, 2, 3};
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    std::set<int> seen;
    for (int v : g.edge(i)) seen.insert(cls[v]);
    EXPECT_EQ(seen.size(), 3u);
  }
}

TEST(Families, ConstructDispatch) {
  family_spec s;
  s.kind = family::beta_star;
  s.r = 3;
  s.k = 4;
  EXPECT_EQ(construct(s), beta_star(3, 4));
  s.kind = family::multipartite;
  s.parts = {1, 2, 2};
  EXPECT_EQ(construct(s), complete_multipartite(3, {1, 2, 2}));
  s.kind = family::turan;
  s.n = 5;
  s.k = 2;
  EXPECT_EQ(construct(s), turan_graph(5, 2));
}

TEST(Operations, BlowUpCounts) {
  auto g = cycle_graph(3, 5);
  auto b = blow_up(g, std::vector<int>(5, 2));
  EXPECT_EQ(b.order(), 10);
  EXPECT_EQ(b.num_edges(), 5u * 8u);
  auto c = blow_up(single_edge(3), {1, 2, 3});
  EXPECT_EQ(c, complete_multipartite(3, {1, 2, 3}));
}

TEST(Operations, UnionComplementJoin) {
  auto g = single_edge(3);
  auto u = disjoint_union(g, cycle_graph(3, 4));
  EXPECT_EQ(u.order(), 7);
  EXPECT_EQ(u.num_edges(), 5u);
  EXPECT_EQ(u.weight_of({3, 4, 5}), 1.0);

  auto h = cycle_graph(3, 6);
  auto hc = complement(h);
  EXPECT_EQ(hc.num_edges() + h.num_edges(), 20u);
  EXPECT_EQ(weighted_sum(h, hc), complete_graph(3, 6));
  EXPECT_THROW(complement(scaled(h, 2.0)), error);

  auto two = cycle_graph(2, 4);
  auto j1 = join(two, join_kind::k1);
  EXPECT_EQ(j1.rank(), 3);
  EXPECT_EQ(j1.order(), 5);
  EXPECT_EQ(j1.weight_of({0, 1, 4}), 1.0);
  auto jt = join(two, join_kind::t_k1, 3);
  EXPECT_EQ(jt.order(), 7);
  EXPECT_EQ(jt.num_edges(), 12u);
  auto kt = join(two, join_kind::k_t_t, 2);
  EXPECT_EQ(kt.rank(), 4);
  EXPECT_EQ(kt.weight_of({0, 1, 4, 5}), 1.0);
}

TEST(Operations, InducedSubgraphRenumbers) {
  auto g = complete_graph(3, 5);
  auto ind = induced_subgraph(g, {4, 1, 3});
  EXPECT_EQ(ind.graph, complete_graph(3, 3));
  EXPECT_EQ(ind.old_id, (std::vector<int>{1, 3, 4}));
}

TEST(Operations, SectionsAndDifferences) {
  auto g = beta_star(3, 2);
  auto s2 = k_section(g, 2);
  EXPECT_EQ(s2.rank(), 2);
  EXPECT_EQ(s2.num_edges(), 6u);
  EXPECT_EQ(edge_difference(complete_graph(3, 5), cycle_graph(3, 5)), 5u);
  auto keep = std::vector<bool>{true, false};
  EXPECT_EQ(edge_subgraph(g, keep).num_edges(), 1u);
}

TEST(Operations, RandomGraphIsSeeded) {
  auto a = random_gnp(3, 12, 0.3, 9);
  auto b = random_gnp(3, 12, 0.3, 9);
  auto c = random_gnp(3, 12, 0.3, 10);
  EXPECT_EQ(a, b);
  EXPECT_NE(a, c);
  EXPECT_TRUE(random_gnp(3, 8, 0.0, 1).empty());
  EXPECT_EQ(random_gnp(3, 8, 1.0, 1), complete_graph(3, 8));
}
