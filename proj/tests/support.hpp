#pragma once

#include <random>
#include <vector>

#include <hyperspec/hyperspec.hpp>

namespace testing_support {

using namespace hyperspec;

// each r-subset kept with probability prob; weights in [0.5, 2) when weighted
inline hypergraph random_graph(std::mt19937_64& eng, int r, int n, double prob, bool weighted = false) {
  hypergraph_builder b(r, n);
  for_each_subset(n, r, [&](const std::vector<int>& e) {
    if (unit_uniform(eng) < prob) b.set(e, weighted ? 0.5 + 1.5 * unit_uniform(eng) : 1.0);
  });
  return b.build();
}

// same, but never empty
inline hypergraph random_nonempty(std::mt19937_64& eng, int r, int n, double prob, bool weighted = false) {
  for (;;) {
    auto g = random_graph(eng, r, n, prob, weighted);
    if (!g.empty()) return g;
  }
}

inline hypergraph random_connected(std::mt19937_64& eng, int r, int n, double prob, bool weighted = false) {
  for (;;) {
    auto g = random_graph(eng, r, n, prob, weighted);
    if (!g.empty() && is_connected(g)) return g;
  }
}

// random r-partite r-graph on r classes of the given sizes
inline hypergraph random_r_partite(std::mt19937_64& eng, int r, int k, double prob) {
  std::vector<int> parts(r, k);
  auto full = complete_multipartite(r, parts);
  for (;;) {
    hypergraph_builder b(r, full.order());
    for (std::size_t i = 0; i < full.num_edges(); ++i)
      if (unit_uniform(eng) < prob) {
        auto e = full.edge(i);
        b.set(std::vector<int>(e.begin(), e.end()));
      }
    auto g = b.build();
    if (!g.empty()) return g;
  }
}

inline std::vector<double> random_vector(std::mt19937_64& eng, int n) {
  std::vector<double> x(n);
  for (double& v : x) v = 2.0 * unit_uniform(eng) - 1.0;
  return x;
}

inline solve_options quick(std::uint64_t seed = 0, int restarts = 8) {
  solve_options o;
  o.restarts = restarts;
  o.seed = seed;
  return o;
}

}  // namespace testing_support
