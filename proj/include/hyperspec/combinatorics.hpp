#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "hypergraph.hpp"

namespace hyperspec {

using vertex_set = std::vector<int>;

inline std::vector<std::vector<std::size_t>> incidence(const hypergraph& g) {
  std::vector<std::vector<std::size_t>> inc(g.order());
  for (std::size_t i = 0; i < g.num_edges(); ++i)
    for (int v : g.edge(i)) inc[v].push_back(i);
  return inc;
}

inline std::size_t intersection_size(std::span<const int> a, std::span<const int> b) {
  std::size_t c = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j)
      ++i;
    else if (*j < *i)
      ++j;
    else {
      ++c;
      ++i;
      ++j;
    }
  }
  return c;
}

// ------------------------------------------------------------------ degrees

// k-set degrees of every k-set that lies in some edge
inline std::map<std::vector<int>, double> set_degrees(const hypergraph& g, int k) {
  if (k < 1 || k >= g.rank()) throw error("set degree: need 1 <= k < r");
  std::map<std::vector<int>, compensated_sum<>> acc;
  for (std::size_t i = 0; i < g.num_edges(); ++i)
    for_each_subset_of(g.edge(i), k, [&](const std::vector<int>& s) { acc[s] += g.weight(i); });
  std::map<std::vector<int>, double> out;
  for (auto& [s, v] : acc) out.emplace(s, v.value());
  return out;
}

// Largest set of edges through u pairwise meeting only in u. Exact branch
// and bound; throws when the search exceeds its node budget.
inline int beta_degree(const hypergraph& g, int u, long budget = 20'000'000) {
  std::vector<std::size_t> inc;
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    auto e = g.edge(i);
    if (std::find(e.begin(), e.end(), u) != e.end()) inc.push_back(i);
  }
  const std::size_t m = inc.size();
  std::vector<std::vector<char>> clash(m, std::vector<char>(m, 0));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      clash[a][b] = clash[b][a] = intersection_size(g.edge(inc[a]), g.edge(inc[b])) >= 2;
  int best = 0;
  long nodes = 0;
  std::vector<std::size_t> chosen;
  std::function<void(std::vector<std::size_t>&)> grow = [&](std::vector<std::size_t>& cand) {
    if (++nodes > budget) throw error("beta-degree exceeds exact-search budget");
    if (static_cast<int>(chosen.size() + cand.size()) <= best) return;
    if (cand.empty()) {
      best = static_cast<int>(chosen.size());
      return;
    }
    std::size_t a = cand.back();
    cand.pop_back();
    std::vector<std::size_t> with;
    for (std::size_t b : cand)
      if (!clash[a][b]) with.push_back(b);
    chosen.push_back(a);
    grow(with);
    chosen.pop_back();
    grow(cand);
    cand.push_back(a);
  };
  std::vector<std::size_t> all(m);
  std::iota(all.begin(), all.end(), 0);
  grow(all);
  return best;
}

struct degree_table {
  std::vector<double> degree;
  double min_degree = 0.0;  // delta
  double max_degree = 0.0;  // Delta
  int k = 0;                // set size of the table below, 0 when absent
  std::map<std::vector<int>, double> set_degree;  // only k-sets with d(U) > 0
  double min_set_degree = 0.0;  // over all k-sets of V
  double max_set_degree = 0.0;
  std::vector<int> beta;  // empty unless requested
  int min_beta = 0;
  int max_beta = 0;
};

inline degree_table degree_profile(const hypergraph& g, int k = 0, bool with_beta = false) {
  degree_table t;
  std::vector<compensated_sum<>> acc(g.order());
  for (std::size_t i = 0; i < g.num_edges(); ++i)
    for (int v : g.edge(i)) acc[v] += g.weight(i);
  for (auto& a : acc) t.degree.push_back(a.value());
  if (!t.degree.empty()) {
    t.min_degree = *std::min_element(t.degree.begin(), t.degree.end());
    t.max_degree = *std::max_element(t.degree.begin(), t.degree.end());
  }
  if (k != 0) {
    t.k = k;
    t.set_degree = set_degrees(g, k);
    for (const auto& [s, d] : t.set_degree) t.max_set_degree = std::max(t.max_set_degree, d);
    bool all_covered = static_cast<double>(t.set_degree.size()) == binomial(g.order(), k);
    if (all_covered && !t.set_degree.empty()) {
      t.min_set_degree = t.max_set_degree;
      for (const auto& [s, d] : t.set_degree) t.min_set_degree = std::min(t.min_set_degree, d);
    }
  }
  if (with_beta) {
    for (int u = 0; u < g.order(); ++u) t.beta.push_back(beta_degree(g, u));
    if (!t.beta.empty()) {
      t.min_beta = *std::min_element(t.beta.begin(), t.beta.end());
      t.max_beta = *std::max_element(t.beta.begin(), t.beta.end());
    }
  }
  return t;
}

// --------------------------------------------------------------- structure

// finest partition with every edge inside a block; blocks ordered by their
// smallest vertex
inline std::vector<vertex_set> components(const hypergraph& g) {
  std::vector<int> parent(g.order());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> root = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    auto e = g.edge(i);
    for (int v : e) {
      int a = root(e[0]), b = root(v);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::map<int, vertex_set> blocks;
  for (int v = 0; v < g.order(); ++v) blocks[root(v)].push_back(v);
  std::vector<vertex_set> out;
  for (auto& [r, b] : blocks) out.push_back(std::move(b));
  return out;
}

inline bool is_connected(const hypergraph& g) { return components(g).size() <= 1; }

struct tightness {
  bool tight = false;
  vertex_set witness;  // a violating proper subset when !tight
};

inline constexpr int tightness_budget = 20;

inline tightness is_k_tight(const hypergraph& g, int k) {
  const int r = g.rank();
  const int n = g.order();
  if (k < 1 || k > r - 1) throw error("k-tight: need 1 <= k <= r-1");
  if (n > tightness_budget) throw error("k-tight: n exceeds exact-check budget");
  if (g.empty()) return {false, {}};
  std::vector<std::uint32_t> masks;
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    std::uint32_t m = 0;
    for (int v : g.edge(i)) m |= 1u << v;
    masks.push_back(m);
  }
  const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
  for (std::uint32_t u = 1; u < full; ++u) {
    bool has_edge = false, crossing = false;
    for (std::uint32_t e : masks) {
      int c = std::popcount(e & u);
      if (c == r) has_edge = true;
      if (c >= k && c <= r - 1) {
        crossing = true;
        break;
      }
    }
    if (has_edge && !crossing) {
      vertex_set w;
      for (int v = 0; v < n; ++v)
        if (u >> v & 1u) w.push_back(v);
      return {false, w};
    }
  }
  return {true, {}};
}

// ------------------------------------------------------------- transversals

// Affine system over GF(2), one equation per edge: sum_{v in e} z_v = rhs.
class gf2_system {
 public:
  gf2_system(int n) : n_(n), words_((n + 64) / 64) {}

  void add_equation(std::span<const int> vars, bool rhs) {
    std::vector<std::uint64_t> row(words_, 0);
    for (int v : vars) row[v / 64] ^= 1ULL << (v % 64);
    if (rhs) row[n_ / 64] ^= 1ULL << (n_ % 64);
    rows_.push_back(std::move(row));
  }

  // Reduced row echelon form; pivot columns chosen left to right.
  // Returns false when inconsistent.
  bool reduce() {
    pivots_.clear();
    std::size_t next = 0;
    for (int c = 0; c < n_ && next < rows_.size(); ++c) {
      std::size_t sel = next;
      while (sel < rows_.size() && !bit(rows_[sel], c)) ++sel;
      if (sel == rows_.size()) continue;
      std::swap(rows_[sel], rows_[next]);
      for (std::size_t i = 0; i < rows_.size(); ++i)
        if (i != next && bit(rows_[i], c))
          for (std::size_t w = 0; w < words_; ++w) rows_[i][w] ^= rows_[next][w];
      pivots_.push_back(c);
      ++next;
    }
    for (std::size_t i = next; i < rows_.size(); ++i)
      if (bit(rows_[i], n_)) return false;
    rank_ = next;
    return true;
  }

  // particular solution with all free variables zero
  std::vector<char> particular() const {
    std::vector<char> z(n_, 0);
    for (std::size_t i = 0; i < rank_; ++i) z[pivots_[i]] = bit(rows_[i], n_);
    return z;
  }

  // one null-space vector per free variable, in increasing free index
  std::vector<std::vector<char>> kernel_basis() const {
    std::vector<char> is_pivot(n_, 0);
    for (int c : pivots_) is_pivot[c] = 1;
    std::vector<std::vector<char>> basis;
    for (int f = 0; f < n_; ++f) {
      if (is_pivot[f]) continue;
      std::vector<char> z(n_, 0);
      z[f] = 1;
      for (std::size_t i = 0; i < rank_; ++i) z[pivots_[i]] = bit(rows_[i], f);
      basis.push_back(std::move(z));
    }
    return basis;
  }

 private:
  static bool bit(const std::vector<std::uint64_t>& row, int c) { return row[c / 64] >> (c % 64) & 1ULL; }
  int n_;
  std::size_t words_;
  std::vector<std::vector<std::uint64_t>> rows_;
  std::vector<int> pivots_;
  std::size_t rank_ = 0;
};

namespace detail {
inline vertex_set to_set(const std::vector<char>& z) {
  vertex_set s;
  for (std::size_t v = 0; v < z.size(); ++v)
    if (z[v]) s.push_back(static_cast<int>(v));
  return s;
}
}  // namespace detail

// a set meeting every edge in an odd number of vertices
inline std::optional<vertex_set> odd_transversal(const hypergraph& g) {
  gf2_system sys(g.order());
  for (std::size_t i = 0; i < g.num_edges(); ++i) sys.add_equation(g.edge(i), true);
  if (!sys.reduce()) return std::nullopt;
  return detail::to_set(sys.particular());
}

// a nonempty proper set meeting every edge in an even number of vertices
inline std::optional<vertex_set> even_transversal(const hypergraph& g) {
  gf2_system sys(g.order());
  for (std::size_t i = 0; i < g.num_edges(); ++i) sys.add_equation(g.edge(i), false);
  sys.reduce();
  for (const auto& z : sys.kernel_basis()) {
    auto s = detail::to_set(z);
    if (static_cast<int>(s.size()) < g.order()) return s;
  }
  return std::nullopt;
}

// Exhaustive counterparts, used as test oracles (n <= 24).
inline std::optional<vertex_set> transversal_exhaustive(const hypergraph& g, bool odd) {
  const int n = g.order();
  if (n > 24) throw error("exhaustive transversal search: n exceeds budget");
  std::vector<std::uint32_t> masks;
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    std::uint32_t m = 0;
    for (int v : g.edge(i)) m |= 1u << v;
    masks.push_back(m);
  }
  const std::uint32_t full = (1u << n) - 1;
  for (std::uint32_t u = 0; u <= full; ++u) {
    if (!odd && (u == 0 || u == full)) continue;
    bool ok = true;
    for (std::uint32_t e : masks)
      if ((std::popcount(e & u) & 1) != (odd ? 1 : 0)) {
        ok = false;
        break;
      }
    if (ok) {
      vertex_set s;
      for (int v = 0; v < n; ++v)
        if (u >> v & 1u) s.push_back(v);
      return s;
    }
    if (u == full) break;
  }
  return std::nullopt;
}

inline bool is_odd_transversal(const hypergraph& g, const vertex_set& u) {
  for (std::size_t i = 0; i < g.num_edges(); ++i)
    if (intersection_size(g.edge(i), u) % 2 != 1) return false;
  return true;
}

inline bool is_even_transversal(const hypergraph& g, const vertex_set& u) {
  if (u.empty() || static_cast<int>(u.size()) >= g.order()) return false;
  for (std::size_t i = 0; i < g.num_edges(); ++i)
    if (intersection_size(g.edge(i), u) % 2 != 0) return false;
  return true;
}

// ---------------------------------------------------- linearity, regularity

inline bool is_k_linear(const hypergraph& g, int k) {
  if (k < 1 || k > g.rank() - 1) throw error("k-linear: need 1 <= k <= r-1");
  for (std::size_t i = 0; i < g.num_edges(); ++i)
    for (std::size_t j = i + 1; j < g.num_edges(); ++j)
      if (static_cast<int>(intersection_size(g.edge(i), g.edge(j))) > k) return false;
  return true;
}

// every k-set of V lies in exactly one edge
inline bool is_steiner(const hypergraph& g, int k) {
  if (k < 1 || k >= g.rank()) throw error("steiner: need 1 <= k < r");
  std::map<std::vector<int>, int> count;
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    bool ok = true;
    for_each_subset_of(g.edge(i), k, [&](const std::vector<int>& s) {
      if (++count[s] > 1) ok = false;
    });
    if (!ok) return false;
  }
  return static_cast<double>(count.size()) == binomial(g.order(), k);
}

inline bool is_k_set_regular(const hypergraph& g, int k) {
  if (k < 1 || k >= g.rank()) throw error("k-set regular: need 1 <= k < r");
  auto d = set_degrees(g, k);
  if (d.empty()) return true;
  if (static_cast<double>(d.size()) != binomial(g.order(), k)) return false;
  const double ref = d.begin()->second;
  for (const auto& [s, v] : d)
    if (std::abs(v - ref) > 1e-12 * std::max(1.0, std::abs(ref))) return false;
  return true;
}

inline bool is_vertex_regular(const hypergraph& g) {
  auto t = degree_profile(g);
  return t.max_degree - t.min_degree <= 1e-12 * std::max(1.0, t.max_degree);
}

// ------------------------------------------------------ equivalence classes

// u ~ v when swapping u and v maps the weighted edge set onto itself
inline bool equivalent(const hypergraph& g, const std::vector<std::vector<std::size_t>>& inc, int u,
                       int v) {
  if (u == v) return true;
  std::vector<int> f;
  for (auto [a, b] : {std::pair{u, v}, std::pair{v, u}}) {
    for (std::size_t i : inc[a]) {
      auto e = g.edge(i);
      if (std::find(e.begin(), e.end(), b) != e.end()) continue;
      f.assign(e.begin(), e.end());
      std::replace(f.begin(), f.end(), a, b);
      std::sort(f.begin(), f.end());
      auto j = g.find(f);
      if (!j || g.weight(*j) != g.weight(i)) return false;
    }
  }
  return true;
}

inline std::vector<vertex_set> equivalence_classes(const hypergraph& g) {
  auto inc = incidence(g);
  std::vector<vertex_set> classes;
  for (int v = 0; v < g.order(); ++v) {
    bool placed = false;
    for (auto& c : classes)
      if (inc[c.front()].size() == inc[v].size() && equivalent(g, inc, c.front(), v)) {
        c.push_back(v);
        placed = true;
        break;
      }
    if (!placed) classes.push_back({v});
  }
  return classes;
}

// ---------------------------------------------------------------- coloring

inline constexpr int chromatic_budget = 16;

// Least-color weak coloring of the support (no monochromatic edge), by
// backtracking; returns the color of each vertex.
inline std::vector<int> weak_coloring_exact(const hypergraph& g) {
  const int n = g.order();
  if (n > chromatic_budget) throw error("chromatic number: n exceeds exact-search budget");
  if (n == 0) return {};
  // edges indexed by their largest vertex: checked once it is colored
  std::vector<std::vector<std::size_t>> closing(n);
  for (std::size_t i = 0; i < g.num_edges(); ++i) closing[g.edge(i).back()].push_back(i);
  std::vector<int> color(n, -1);
  for (int k = 1; k <= n; ++k) {
    std::function<bool(int, int)> place = [&](int v, int used) -> bool {
      if (v == n) return true;
      for (int c = 0; c < std::min(k, used + 1); ++c) {
        color[v] = c;
        bool ok = true;
        for (std::size_t i : closing[v]) {
          auto e = g.edge(i);
          if (std::all_of(e.begin(), e.end(), [&](int w) { return color[w] == c; })) {
            ok = false;
            break;
          }
        }
        if (ok && place(v + 1, std::max(used, c + 1))) return true;
      }
      color[v] = -1;
      return false;
    };
    if (place(0, 0)) return color;
  }
  throw error("chromatic number: no coloring found");
}

inline int chromatic_number_exact(const hypergraph& g) {
  auto c = weak_coloring_exact(g);
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

// Smallest k with a partition into k classes meeting every edge at most
// once, as class labels per vertex (a proper coloring of the 2-section).
inline std::vector<int> strong_partition_exact(const hypergraph& g) {
  if (g.rank() == 2) return weak_coloring_exact(g);
  return weak_coloring_exact(k_section(g, 2));
}

inline bool is_partition_witness(const hypergraph& g, const std::vector<int>& label) {
  if (static_cast<int>(label.size()) != g.order()) return false;
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    std::vector<int> c;
    for (int v : g.edge(i)) c.push_back(label[v]);
    std::sort(c.begin(), c.end());
    if (std::adjacent_find(c.begin(), c.end()) != c.end()) return false;
  }
  return true;
}

}  // namespace hyperspec
