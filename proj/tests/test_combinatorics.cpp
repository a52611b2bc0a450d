#include <gtest/gtest.h>

#include <queue>

#include "support.hpp"

using namespace hyperspec;
using namespace testing_support;

static hypergraph fano() {
  hypergraph_builder b(3, 7);
  for (auto e : std::vector<std::vector<int>>{{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}})
    b.add(e);
  return b.build();
}

// BFS over the vertex-edge incidence
static int count_components(const hypergraph& g) {
  auto inc = incidence(g);
  std::vector<char> seen(g.order(), 0);
  int comps = 0;
  for (int s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    ++comps;
    std::queue<int> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (auto i : inc[v])
        for (int w : g.edge(i))
          if (!seen[w]) {
            seen[w] = 1;
            q.push(w);
          }
    }
  }
  return comps;
}

// smallest k admitting a map V -> [k] with no monochromatic edge
static int chromatic_brute(const hypergraph& g) {
  const int n = g.order();
  for (int k = 1; k <= n; ++k) {
    std::vector<int> c(n, 0);
    for (;;) {
      bool ok = true;
      for (std::size_t i = 0; i < g.num_edges() && ok; ++i) {
        auto e = g.edge(i);
        ok = !std::all_of(e.begin(), e.end(), [&](int v) { return c[v] == c[e[0]]; });
      }
      if (ok) return k;
      int j = 0;
      while (j < n && c[j] == k - 1) c[j++] = 0;
      if (j == n) break;
      ++c[j];
    }
  }
  return n;
}

TEST(Degrees, VertexAndSetDegrees) {
  auto g = complete_graph(3, 5);
  auto t = degree_profile(g, 2);
  EXPECT_EQ(t.degree, std::vector<double>(5, 6.0));
  EXPECT_EQ(t.max_set_degree, 3.0);
  EXPECT_EQ(t.min_set_degree, 3.0);
  auto s = degree_profile(beta_star(3, 3), 2);
  EXPECT_EQ(s.max_degree, 3.0);
  EXPECT_EQ(s.min_degree, 1.0);
  EXPECT_EQ(s.min_set_degree, 0.0);  // some pairs lie in no edge
}

TEST(Degrees, BetaDegree) {
  EXPECT_EQ(beta_degree(beta_star(3, 5), 0), 5);
  EXPECT_EQ(beta_degree(beta_star(3, 5), 1), 1);
  // in K_5^3 the edges through a vertex meeting pairwise only there: 2
  EXPECT_EQ(beta_degree(complete_graph(3, 5), 0), 2);
  EXPECT_EQ(beta_degree(fano(), 0), 3);
  auto t = degree_profile(fano(), 0, true);
  EXPECT_EQ(t.min_beta, 3);
  EXPECT_EQ(t.max_beta, 3);
}

TEST(Structure, ComponentsMatchBreadthFirstSearch) {
  std::mt19937_64 eng(11);
  for (int trial = 0; trial < 200; ++trial) {
    int r = 2 + trial % 3;
    int n = r + trial % 8;
    auto g = random_graph(eng, r, n, 0.15);
    auto comps = components(g);
    EXPECT_EQ(static_cast<int>(comps.size()), count_components(g));
    for (std::size_t i = 1; i < comps.size(); ++i) EXPECT_LT(comps[i - 1].front(), comps[i].front());
  }
}

TEST(Structure, OneTightIsConnected) {
  std::mt19937_64 eng(12);
  for (int trial = 0; trial < 300; ++trial) {
    int r = 2 + trial % 3;
    int n = r + 1 + trial % 7;
    auto g = random_nonempty(eng, r, n, 0.2);
    EXPECT_EQ(is_k_tight(g, 1).tight, is_connected(g)) << trial;
  }
  for (const auto& f : fixture_catalog())
    EXPECT_EQ(is_k_tight(f.graph, 1).tight, is_connected(f.graph)) << f.name;
}

TEST(Structure, TightnessWitnessViolatesDefinition) {
  auto g = two_edges(5, 2);
  EXPECT_TRUE(is_k_tight(g, 2).tight);
  auto t = is_k_tight(g, 3);
  ASSERT_FALSE(t.tight);
  EXPECT_LT(static_cast<int>(t.witness.size()), g.order());
  bool has_edge = false;
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    auto c = intersection_size(g.edge(i), t.witness);
    if (c == 5u) has_edge = true;
    EXPECT_FALSE(c >= 3 && c <= 4);
  }
  EXPECT_TRUE(has_edge);
  EXPECT_TRUE(is_k_tight(complete_graph(4, 6), 3).tight);
}

TEST(Transversals, GaussianEliminationMatchesExhaustiveSearch) {
  std::mt19937_64 eng(13);
  int odd_found = 0, even_found = 0;
  for (int trial = 0; trial < 400; ++trial) {
    int r = 2 + trial % 4;
    int n = std::min(12, r + 1 + trial % 10);
    auto g = random_graph(eng, r, n, trial % 3 == 0 ? 0.1 : 0.35);
    auto odd = odd_transversal(g);
    auto even = even_transversal(g);
    auto odd_x = transversal_exhaustive(g, true);
    auto even_x = transversal_exhaustive(g, false);
    ASSERT_EQ(odd.has_value(), odd_x.has_value()) << trial;
    ASSERT_EQ(even.has_value(), even_x.has_value()) << trial;
    if (odd) {
      EXPECT_TRUE(is_odd_transversal(g, *odd));
    }
    if (even) {
      EXPECT_TRUE(is_even_transversal(g, *even));
    }
    odd_found += odd.has_value();
    even_found += even.has_value();
  }
  EXPECT_GT(odd_found, 20);
  EXPECT_GT(even_found, 20);
  EXPECT_LT(odd_found, 400);
}

TEST(Transversals, KnownCases) {
  EXPECT_TRUE(odd_transversal(cycle_graph(2, 4)));
  EXPECT_FALSE(odd_transversal(cycle_graph(2, 5)));
  EXPECT_EQ(*odd_transversal(beta_star(4, 3)), vertex_set{0});
  EXPECT_TRUE(odd_transversal(complete_multipartite(4, {2, 2, 2, 2})));
  EXPECT_FALSE(even_transversal(complete_graph(4, 5)));
  auto u = even_transversal(beta_star(3, 2));
  ASSERT_TRUE(u);
  EXPECT_TRUE(is_even_transversal(beta_star(3, 2), *u));
  EXPECT_FALSE(is_even_transversal(single_edge(2), {0, 1}));  // not proper
}

TEST(Linearity, LinearSteinerRegular) {
  auto f = fano();
  EXPECT_TRUE(is_k_linear(f, 1));
  EXPECT_TRUE(is_steiner(f, 2));
  EXPECT_TRUE(is_k_set_regular(f, 2));
  EXPECT_TRUE(is_vertex_regular(f));
  EXPECT_FALSE(is_k_linear(complete_graph(3, 4), 1));
  EXPECT_TRUE(is_k_linear(complete_graph(3, 4), 2));
  EXPECT_FALSE(is_steiner(complete_graph(3, 5), 2));
  EXPECT_TRUE(is_steiner(single_edge(3), 2));
  EXPECT_FALSE(is_k_set_regular(cycle_graph(3, 7), 2));
  EXPECT_TRUE(is_vertex_regular(cycle_graph(3, 7)));
  EXPECT_TRUE(is_k_set_regular(complete_graph(4, 6), 3));
}

TEST(Equivalence, Classes) {
  EXPECT_EQ(equivalence_classes(complete_graph(3, 5)).size(), 1u);
  // center, then one pair per edge: leaves in different edges are not swappable
  auto c = equivalence_classes(beta_star(3, 4));
  std::vector<vertex_set> want{{0}, {1, 2}, {3, 4}, {5, 6}, {7, 8}};
  EXPECT_EQ(c, want);
  auto m = equivalence_classes(complete_multipartite(3, {1, 2, 3}));
  EXPECT_EQ(m, (std::vector<vertex_set>{{0}, {1, 2}, {3, 4, 5}}));
  // weights break symmetry
  hypergraph_builder b(2, 3);
  b.set({0, 1}, 1.0);
  b.set({0, 2}, 2.0);
  EXPECT_EQ(equivalence_classes(b.build()).size(), 3u);
}

TEST(Coloring, ExactMatchesBruteForce) {
  std::mt19937_64 eng(14);
  for (int trial = 0; trial < 150; ++trial) {
    int r = 2 + trial % 3;
    int n = r + trial % 5;
    auto g = random_graph(eng, r, n, 0.5);
    auto col = weak_coloring_exact(g);
    int chi = chromatic_number_exact(g);
    EXPECT_EQ(chi, chromatic_brute(g)) << trial;
    for (std::size_t i = 0; i < g.num_edges(); ++i) {
      auto e = g.edge(i);
      EXPECT_FALSE(std::all_of(e.begin(), e.end(), [&](int v) { return col[v] == col[e[0]]; }));
    }
  }
  EXPECT_EQ(chromatic_number_exact(fano()), 3);
  EXPECT_EQ(chromatic_number_exact(complete_graph(2, 6)), 6);
  EXPECT_EQ(chromatic_number_exact(complete_graph(3, 6)), 3);
}

TEST(Coloring, StrongPartition) {
  auto g = complete_multipartite(3, {2, 2, 2});
  auto lab = strong_partition_exact(g);
  EXPECT_TRUE(is_partition_witness(g, lab));
  EXPECT_EQ(*std::max_element(lab.begin(), lab.end()) + 1, 3);
  EXPECT_FALSE(is_partition_witness(g, std::vector<int>(6, 0)));
  auto f = strong_partition_exact(fano());
  EXPECT_EQ(*std::max_element(f.begin(), f.end()) + 1, 7);  // 2-section is K_7
}
