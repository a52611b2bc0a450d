#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "numeric.hpp"

namespace hyperspec {

// Calls f(const std::vector<int>&) for every k-subset of {0..n-1} in
// lexicographic order. Stops early if f returns false.
template <class F>
void for_each_subset(int n, int k, F&& f) {
  if (k < 0 || k > n) return;
  std::vector<int> c(k);
  for (int i = 0; i < k; ++i) c[i] = i;
  while (true) {
    if constexpr (std::is_same_v<decltype(f(c)), bool>) {
      if (!f(static_cast<const std::vector<int>&>(c))) return;
    } else {
      f(static_cast<const std::vector<int>&>(c));
    }
    int i = k - 1;
    while (i >= 0 && c[i] == n - k + i) --i;
    if (i < 0) return;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

// Same over the k-subsets of a given sorted vertex list.
template <class F>
void for_each_subset_of(std::span<const int> verts, int k, F&& f) {
  std::vector<int> pick(k);
  for_each_subset(static_cast<int>(verts.size()), k, [&](const std::vector<int>& idx) {
    for (int i = 0; i < k; ++i) pick[i] = verts[idx[i]];
    f(static_cast<const std::vector<int>&>(pick));
  });
}

class hypergraph_builder;

// Weighted r-uniform hypergraph. Edges are kept sorted (lexicographically on
// their sorted vertex tuples) with strictly positive weights.
class hypergraph {
 public:
  hypergraph() = default;
  hypergraph(int rank, int n) : r_(rank), n_(n) {
    if (rank < 2) throw error("rank must be at least 2");
    if (n < 0) throw error("vertex count must be nonnegative");
  }

  int rank() const { return r_; }
  int order() const { return n_; }
  std::size_t num_edges() const { return w_.size(); }
  bool empty() const { return w_.empty(); }

  std::span<const int> edge(std::size_t i) const {
    return {verts_.data() + i * static_cast<std::size_t>(r_), static_cast<std::size_t>(r_)};
  }
  double weight(std::size_t i) const { return w_[i]; }
  const std::vector<double>& weights() const { return w_; }
  const std::vector<int>& flat_edges() const { return verts_; }

  // |G|, the total weight
  double size() const {
    compensated_sum<> s;
    for (double w : w_) s += w;
    return s.value();
  }
  double max_weight() const {
    double m = 0.0;
    for (double w : w_) m = std::max(m, w);
    return m;
  }
  bool unweighted() const {
    return std::all_of(w_.begin(), w_.end(), [](double w) { return w == 1.0; });
  }

  std::optional<std::size_t> find(std::span<const int> sorted) const {
    std::size_t lo = 0, hi = w_.size();
    while (lo < hi) {
      std::size_t mid = (lo + hi) / 2;
      auto e = edge(mid);
      if (std::lexicographical_compare(e.begin(), e.end(), sorted.begin(), sorted.end()))
        lo = mid + 1;
      else
        hi = mid;
    }
    if (lo < w_.size()) {
      auto e = edge(lo);
      if (std::equal(e.begin(), e.end(), sorted.begin(), sorted.end())) return lo;
    }
    return std::nullopt;
  }
  // weight of an arbitrary vertex tuple; 0 when absent
  double weight_of(std::vector<int> verts) const {
    std::sort(verts.begin(), verts.end());
    auto i = find(verts);
    return i ? w_[*i] : 0.0;
  }

  bool operator==(const hypergraph&) const = default;

 private:
  friend class hypergraph_builder;
  int r_ = 2;
  int n_ = 0;
  std::vector<int> verts_;
  std::vector<double> w_;
};

class hypergraph_builder {
 public:
  hypergraph_builder(int rank, int n) : proto_(rank, n) {}

  int rank() const { return proto_.rank(); }
  int order() const { return proto_.order(); }

  // Sorted copy of a validated edge; throws naming the violated constraint.
  std::vector<int> check_edge(std::vector<int> e) const {
    if (static_cast<int>(e.size()) != rank())
      throw error("edge has " + std::to_string(e.size()) + " vertices, rank is " +
                  std::to_string(rank()));
    for (int v : e)
      if (v < 0 || v >= order())
        throw error("vertex " + std::to_string(v) + " out of range [0," +
                    std::to_string(order()) + ")");
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end())
      throw error("repeated vertex " + std::to_string(*std::adjacent_find(e.begin(), e.end())));
    return e;
  }

  // Sets the weight of e; weight 0 removes the edge.
  hypergraph_builder& set(std::vector<int> e, double w = 1.0) {
    if (!(w >= 0.0) || !std::isfinite(w)) throw error("negative or non-finite weight");
    e = check_edge(std::move(e));
    if (w == 0.0)
      edges_.erase(e);
    else
      edges_[e] = w;
    return *this;
  }
  hypergraph_builder& add(std::vector<int> e, double w = 1.0) {
    if (!(w >= 0.0) || !std::isfinite(w)) throw error("negative or non-finite weight");
    e = check_edge(std::move(e));
    if (w != 0.0) edges_[e] += w;
    return *this;
  }
  bool contains(const std::vector<int>& sorted) const { return edges_.count(sorted) > 0; }

  hypergraph build() const {
    hypergraph g = proto_;
    g.verts_.reserve(edges_.size() * static_cast<std::size_t>(rank()));
    g.w_.reserve(edges_.size());
    for (const auto& [e, w] : edges_) {
      g.verts_.insert(g.verts_.end(), e.begin(), e.end());
      g.w_.push_back(w);
    }
    return g;
  }

 private:
  hypergraph proto_;
  std::map<std::vector<int>, double> edges_;
};

// ---------------------------------------------------------------- families

enum class family { complete, multipartite, turan, cycle, beta_star, t_star, single_edge };

struct family_spec {
  family kind = family::complete;
  int r = 2;
  int n = 0;
  int k = 0;
  int t = 0;
  std::vector<int> parts;
};

inline const char* family_name(family f) {
  switch (f) {
    case family::complete: return "complete";
    case family::multipartite: return "multipartite";
    case family::turan: return "turan";
    case family::cycle: return "cycle";
    case family::beta_star: return "beta-star";
    case family::t_star: return "t-star";
    case family::single_edge: return "single-edge";
  }
  return "?";
}

inline hypergraph complete_graph(int r, int n) {
  if (r < 2) throw error("complete: need r >= 2");
  if (n < r) throw error("complete: need n >= r");
  hypergraph_builder b(r, n);
  for_each_subset(n, r, [&](const std::vector<int>& s) { b.set(s); });
  return b.build();
}

inline hypergraph single_edge(int r) { return complete_graph(r, r); }

// Complete r-partite-style graph over the given parts: an edge picks one
// vertex from each of r distinct parts. Parts are labeled consecutively.
inline hypergraph complete_multipartite(int r, const std::vector<int>& parts) {
  if (r < 2) throw error("multipartite: need r >= 2");
  if (static_cast<int>(parts.size()) < r) throw error("multipartite: need at least r parts");
  std::vector<int> start;
  int n = 0;
  for (int s : parts) {
    if (s <= 0) throw error("multipartite: part sizes must be positive");
    start.push_back(n);
    n += s;
  }
  hypergraph_builder b(r, n);
  std::vector<int> e(r);
  for_each_subset(static_cast<int>(parts.size()), r, [&](const std::vector<int>& ps) {
    std::vector<int> idx(r, 0);
    while (true) {
      for (int i = 0; i < r; ++i) e[i] = start[ps[i]] + idx[i];
      b.set(e);
      int i = r - 1;
      while (i >= 0 && idx[i] + 1 == parts[ps[i]]) idx[i--] = 0;
      if (i < 0) break;
      ++idx[i];
    }
  });
  return b.build();
}

inline std::vector<int> turan_parts(int n, int k) {
  std::vector<int> parts(k, n / k);
  for (int i = 0; i < n % k; ++i) ++parts[i];
  return parts;
}

inline hypergraph turan_graph(int n, int k) {
  if (k < 2 || k > n) throw error("turan: need 2 <= k <= n");
  return complete_multipartite(2, turan_parts(n, k));
}

inline hypergraph cycle_graph(int r, int n) {
  if (r < 2) throw error("cycle: need r >= 2");
  if (n <= r) throw error("cycle: need n > r");
  hypergraph_builder b(r, n);
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(r);
    for (int j = 0; j < r; ++j) e[j] = (i + j) % n;
    b.set(e);
  }
  return b.build();
}

// k edges pairwise meeting only in the center 0
inline hypergraph beta_star(int r, int k) {
  if (r < 2) throw error("beta-star: need r >= 2");
  if (k < 1) throw error("beta-star: need k >= 1");
  hypergraph_builder b(r, (r - 1) * k + 1);
  for (int j = 0; j < k; ++j) {
    std::vector<int> e{0};
    for (int i = 1; i < r; ++i) e.push_back(j * (r - 1) + i);
    b.set(e);
  }
  return b.build();
}

// complete t-star: every r-set containing the core {0..t-1}
inline hypergraph t_star(int r, int t, int n) {
  if (!(r > t && t >= 1)) throw error("t-star: need r > t >= 1");
  if (n < r) throw error("t-star: need n >= r");
  hypergraph_builder b(r, n);
  for_each_subset(n - t, r - t, [&](const std::vector<int>& s) {
    std::vector<int> e;
    for (int i = 0; i < t; ++i) e.push_back(i);
    for (int v : s) e.push_back(v + t);
    b.set(e);
  });
  return b.build();
}

inline hypergraph construct(const family_spec& s) {
  switch (s.kind) {
    case family::complete: return complete_graph(s.r, s.n);
    case family::multipartite: return complete_multipartite(s.r, s.parts);
    case family::turan: return turan_graph(s.n, s.k);
    case family::cycle: return cycle_graph(s.r, s.n);
    case family::beta_star: return beta_star(s.r, s.k);
    case family::t_star: return t_star(s.r, s.t, s.n);
    case family::single_edge: return single_edge(s.r);
  }
  throw error("unknown family");
}

// -------------------------------------------------------------- operations

inline hypergraph blow_up(const hypergraph& g, const std::vector<int>& mult) {
  if (static_cast<int>(mult.size()) != g.order())
    throw error("blow_up: multiplicity vector length differs from vertex count");
  std::vector<int> start(mult.size() + 1, 0);
  for (std::size_t v = 0; v < mult.size(); ++v) {
    if (mult[v] < 1) throw error("blow_up: multiplicities must be >= 1");
    start[v + 1] = start[v] + mult[v];
  }
  const int r = g.rank();
  hypergraph_builder b(r, start.back());
  std::vector<int> e(r), idx(r);
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    auto ed = g.edge(i);
    std::fill(idx.begin(), idx.end(), 0);
    while (true) {
      for (int j = 0; j < r; ++j) e[j] = start[ed[j]] + idx[j];
      b.set(e, g.weight(i));
      int j = r - 1;
      while (j >= 0 && idx[j] + 1 == mult[ed[j]]) idx[j--] = 0;
      if (j < 0) break;
      ++idx[j];
    }
  }
  return b.build();
}

inline hypergraph disjoint_union(const hypergraph& g, const hypergraph& h) {
  if (g.rank() != h.rank()) throw error("disjoint_union: rank mismatch");
  hypergraph_builder b(g.rank(), g.order() + h.order());
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    auto e = g.edge(i);
    b.set({e.begin(), e.end()}, g.weight(i));
  }
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    std::vector<int> e(h.edge(i).begin(), h.edge(i).end());
    for (int& v : e) v += g.order();
    b.set(e, h.weight(i));
  }
  return b.build();
}

inline hypergraph complement(const hypergraph& g) {
  if (!g.unweighted()) throw error("complement: defined only for unweighted graphs");
  hypergraph_builder b(g.rank(), g.order());
  for_each_subset(g.order(), g.rank(), [&](const std::vector<int>& s) {
    if (!g.find(s)) b.set(s);
  });
  return b.build();
}

enum class join_kind { k1, t_k1, k_t_t };

// G v K_1 (one apex in every edge), G v tK_1 (each edge extended by each of
// t new vertices separately) and G v K_t^t (each edge extended by a t-core).
inline hypergraph join(const hypergraph& g, join_kind kind, int t = 1) {
  if (t < 1) throw error("join: t must be >= 1");
  const int n = g.order();
  if (kind == join_kind::k1) t = 1;
  const int rank = kind == join_kind::k_t_t ? g.rank() + t : g.rank() + 1;
  hypergraph_builder b(rank, n + t);
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    std::vector<int> e(g.edge(i).begin(), g.edge(i).end());
    if (kind == join_kind::k_t_t) {
      for (int j = 0; j < t; ++j) e.push_back(n + j);
      b.set(e, g.weight(i));
    } else {
      for (int j = 0; j < t; ++j) {
        auto f = e;
        f.push_back(n + j);
        b.set(f, g.weight(i));
      }
    }
  }
  return b.build();
}

struct induced_result {
  hypergraph graph;
  std::vector<int> old_id;  // new vertex i was old_id[i]
};

inline induced_result induced_subgraph(const hypergraph& g, std::vector<int> u) {
  std::sort(u.begin(), u.end());
  u.erase(std::unique(u.begin(), u.end()), u.end());
  std::vector<int> pos(g.order(), -1);
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] < 0 || u[i] >= g.order())
      throw error("induced_subgraph: vertex " + std::to_string(u[i]) + " out of range");
    pos[u[i]] = static_cast<int>(i);
  }
  hypergraph_builder b(g.rank(), static_cast<int>(u.size()));
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    std::vector<int> e;
    for (int v : g.edge(i)) {
      if (pos[v] < 0) break;
      e.push_back(pos[v]);
    }
    if (static_cast<int>(e.size()) == g.rank()) b.set(e, g.weight(i));
  }
  return {b.build(), u};
}

// Each r-subset enters independently with probability prob; subsets are
// visited in lexicographic order so the graph depends only on the arguments.
inline hypergraph random_gnp(int r, int n, double prob, std::uint64_t seed) {
  if (!(prob >= 0.0 && prob <= 1.0)) throw error("random_gnp: need 0 <= prob <= 1");
  if (n < r) throw error("random_gnp: need n >= r");
  std::mt19937_64 eng(mix_seed(seed));
  hypergraph_builder b(r, n);
  for_each_subset(n, r, [&](const std::vector<int>& s) {
    if (unit_uniform(eng) < prob) b.set(s);
  });
  return b.build();
}

inline hypergraph k_section(const hypergraph& g, int k) {
  if (k < 2 || k >= g.rank()) throw error("k_section: need 2 <= k < r");
  hypergraph_builder b(k, g.order());
  for (std::size_t i = 0; i < g.num_edges(); ++i)
    for_each_subset_of(g.edge(i), k, [&](const std::vector<int>& s) { b.set(s); });
  return b.build();
}

// G1 + G2 on a common vertex set
inline hypergraph weighted_sum(const hypergraph& g, const hypergraph& h) {
  if (g.rank() != h.rank() || g.order() != h.order())
    throw error("weighted_sum: graphs differ in rank or vertex count");
  hypergraph_builder b(g.rank(), g.order());
  for (const hypergraph* x : {&g, &h})
    for (std::size_t i = 0; i < x->num_edges(); ++i)
      b.add({x->edge(i).begin(), x->edge(i).end()}, x->weight(i));
  return b.build();
}

inline hypergraph scaled(const hypergraph& g, double c) {
  if (!(c >= 0.0)) throw error("scaled: factor must be nonnegative");
  hypergraph_builder b(g.rank(), g.order());
  for (std::size_t i = 0; i < g.num_edges(); ++i)
    b.set({g.edge(i).begin(), g.edge(i).end()}, c * g.weight(i));
  return b.build();
}

// number of r-sets in exactly one of the two supports
inline std::size_t edge_difference(const hypergraph& g, const hypergraph& h) {
  if (g.rank() != h.rank() || g.order() != h.order())
    throw error("edge_difference: graphs differ in rank or vertex count");
  std::size_t k = 0;
  for (std::size_t i = 0; i < g.num_edges(); ++i)
    if (!h.find(g.edge(i))) ++k;
  for (std::size_t i = 0; i < h.num_edges(); ++i)
    if (!g.find(h.edge(i))) ++k;
  return k;
}

// edges of g kept where keep[i] is true
inline hypergraph edge_subgraph(const hypergraph& g, const std::vector<bool>& keep) {
  hypergraph_builder b(g.rank(), g.order());
  for (std::size_t i = 0; i < g.num_edges(); ++i)
    if (keep.at(i)) b.set({g.edge(i).begin(), g.edge(i).end()}, g.weight(i));
  return b.build();
}

}  // namespace hyperspec
