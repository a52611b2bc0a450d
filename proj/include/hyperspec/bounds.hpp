#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "closed_forms.hpp"
#include "combinatorics.hpp"
#include "solver.hpp"

namespace hyperspec {

enum class side { upper, lower };

// One inequality instance. `value` is the computed quantity the bound
// constrains (usually a lambda estimate); slack = bound - value for upper
// bounds and value - bound for lower bounds.
struct bound_report {
  std::string name;
  std::string quantity = "lambda";
  side kind = side::upper;
  double bound = 0.0;
  bool applies = false;
  std::string source;
  std::optional<double> value;
  std::optional<double> slack;

  bound_report& against(double v) {
    value = v;
    slack = kind == side::upper ? bound - v : v - bound;
    return *this;
  }
  // holds within tolerance, or does not apply
  bool ok(double tol) const { return !applies || !slack || *slack >= -tol; }
};

inline void audit(std::vector<bound_report>& reps, double value) {
  for (auto& b : reps)
    if (!b.value) b.against(value);
}

inline bool all_hold(const std::vector<bound_report>& reps, double tol) {
  return std::all_of(reps.begin(), reps.end(), [&](const bound_report& b) { return b.ok(tol); });
}

namespace detail {
inline bound_report make(std::string name, side s, double bound, bool applies, std::string source,
                         std::string quantity = "lambda") {
  bound_report b;
  b.name = std::move(name);
  b.kind = s;
  b.bound = bound;
  b.applies = applies;
  b.source = std::move(source);
  b.quantity = std::move(quantity);
  return b;
}
}  // namespace detail

// Size/order bounds on lambda^(p) that need no structure.
inline std::vector<bound_report> bound_suite_max(const hypergraph& g, double p,
                                                 std::optional<double> lambda = std::nullopt) {
  if (!(p >= 1.0)) throw error("bound_suite_max: need p >= 1");
  const int r = g.rank();
  const double n = g.order();
  const double fr = factorial(r);
  const double size = g.size();
  const bool any = n > 0;
  const double nr = any ? std::pow(n, r / p) : 1.0;
  std::vector<bound_report> out;
  out.push_back(detail::make("uniform-vector", side::lower, any ? fr * size / nr : 0.0, true,
                             "value of P at the uniform vector"));
  out.push_back(detail::make("max-weight-complete", side::upper, any ? g.max_weight() * falling(g.order(), r) / nr : 0.0,
                             true, "complete graph scaled by the largest weight"));
  {
    double b = 0.0;
    if (p > 1.0 && any) {
      const double q = p / (p - 1.0);
      compensated_sum<> s;
      for (double w : g.weights()) s += std::pow(w, q);
      b = std::pow(falling(g.order(), r) / std::pow(n, r), 1.0 / p) * fr * std::pow(s.value(), 1.0 / q);
    }
    out.push_back(detail::make("holder", side::upper, b, p > 1.0, "Holder inequality on the weights"));
  }
  out.push_back(detail::make("lagrangian", side::upper,
                             any ? falling(g.order(), r) / std::pow(n, r) * g.max_weight() : 0.0, p == 1.0,
                             "Lagrangian of the complete graph"));
  out.push_back(detail::make("edge-count", side::upper, fr * std::pow(size, 1.0 - 1.0 / p),
                             g.unweighted() && p > 1.0, "edge count, unweighted"));
  if (lambda) audit(out, *lambda);
  return out;
}

// Bounds conditioned on structure: partiteness, weak chromatic number,
// linearity, set degrees, maximum degree. `partition` is an optional
// witness labeling (classes meeting each edge at most once); without one a
// minimal labeling is searched for when n <= 16.
inline std::vector<bound_report> structural_bounds(const hypergraph& g, double p,
                                                   std::optional<double> lambda = std::nullopt,
                                                   std::optional<std::vector<int>> partition = std::nullopt) {
  if (!(p >= 1.0)) throw error("structural_bounds: need p >= 1");
  const int r = g.rank();
  const int n = g.order();
  const double fr = factorial(r);
  const double size = g.size();
  const bool plain = g.unweighted();
  std::vector<bound_report> out;
  if (n == 0 || g.empty()) return out;

  // partiteness
  std::optional<std::vector<int>> label;
  if (partition) {
    if (!is_partition_witness(g, *partition)) throw error("structural_bounds: partition witness is invalid");
    label = partition;
  } else if (n <= chromatic_budget) {
    label = strong_partition_exact(g);
  }
  if (label) {
    std::vector<int> classes(*label);
    std::sort(classes.begin(), classes.end());
    classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
    const int k = static_cast<int>(classes.size());
    if (k == r) {
      out.push_back(detail::make("r-partite", side::upper, fr / std::pow(r, r / p) * std::pow(size, 1.0 - 1.0 / p),
                                 plain, "r-partite graphs"));
      double prod = 1.0;
      for (int c : classes) prod *= static_cast<double>(std::count(label->begin(), label->end(), c));
      out.push_back(detail::make("r-partite-classes", side::upper,
                                 fr / std::pow(r, r / p) * std::pow(prod, 1.0 - 1.0 / p), plain,
                                 "r-partite graphs, class sizes"));
    } else if (k > r) {
      const double c = falling(k, r) / std::pow(k, r);
      out.push_back(detail::make("k-partite", side::upper,
                                 std::pow(c, 1.0 / p) * std::pow(fr * size, 1.0 - 1.0 / p), plain,
                                 "k-partite graphs, k > r"));
      out.push_back(detail::make("k-partite-order", side::upper, c * std::pow(n, r - r / p), plain,
                                 "k-partite graphs, k > r, order form"));
    }
  }

  // weak chromatic number
  if (n <= chromatic_budget) {
    const int chi = chromatic_number_exact(g);
    const double c = 1.0 - std::pow(static_cast<double>(chi), 1.0 - r);
    out.push_back(detail::make("chromatic", side::upper, std::pow(c, 1.0 / p) * std::pow(fr * size, 1.0 - 1.0 / p),
                               plain, "weak chromatic number"));
    out.push_back(detail::make("chromatic-order", side::upper, c * std::pow(n, r - r / p), plain,
                               "weak chromatic number, order form"));
  }

  // k-linear graphs
  for (int k = 1; k <= r - 2; ++k) {
    if (!is_k_linear(g, k)) continue;
    const double pk = static_cast<double>(r) / (k + 1);
    if (std::abs(p - pk) <= 1e-12) {
      double b = fr / binomial(r, k + 1) * binomial(n, k + 1) / std::pow(n, k + 1);
      out.push_back(detail::make("linear-" + std::to_string(k), side::upper, b, plain,
                                 "k-linear graphs at p = r/(k+1)"));
    }
    if (p <= pk + 1e-12)
      out.push_back(detail::make("linear-" + std::to_string(k) + "-small-p", side::upper, fr / falling(r, k + 1),
                                 plain, "k-linear graphs, p <= r/(k+1)"));
  }

  // set degrees
  for (int k = 2; k <= r - 1; ++k) {
    if (p < static_cast<double>(r) / k) continue;
    const double dk = degree_profile(g, k).max_set_degree;
    const double base = fr * size / std::pow(n, r / p);
    const double b = base * std::pow(falling(n, k) * dk / (falling(r, k) * size), r / (k * p));
    out.push_back(detail::make("set-degree-" + std::to_string(k), side::upper, b, true,
                               "maximum k-set degree, p >= r/k"));
  }

  // vertex degrees
  const auto deg = degree_profile(g);
  const double delta = deg.max_degree;
  if (p >= r)
    out.push_back(detail::make("max-degree", side::upper, factorial(r - 1) * delta / std::pow(n, r / p - 1.0), true,
                               "maximum degree, p >= r"));
  if (p > 1.0 && p < r)
    out.push_back(detail::make("max-degree-small-p", side::upper,
                               factorial(r - 1) * std::pow(delta, (1.0 - 1.0 / p) / (1.0 - 1.0 / r)), plain,
                               "maximum degree, 1 < p < r"));
  out.push_back(detail::make("beta-star-degree", side::lower,
                             fr / std::pow(r, r / p) * std::pow(delta, 1.0 - (r - 1) / p), plain,
                             "beta-star spanned by a maximum-degree vertex"));
  if (lambda) audit(out, *lambda);
  return out;
}

// Lower bounds on lambda_min^(p). `lambda_max` enables the sign-flip bound.
inline std::vector<bound_report> bound_suite_min(const hypergraph& g, double p,
                                                 std::optional<double> lambda_min = std::nullopt,
                                                 std::optional<double> lambda_max = std::nullopt) {
  if (!(p >= 1.0)) throw error("bound_suite_min: need p >= 1");
  const int r = g.rank();
  const bool even = r % 2 == 0;
  std::vector<bound_report> out;
  out.push_back(detail::make("size-min", side::lower,
                             -std::pow(factorial(r) * g.size(), 1.0 - 1.0 / p) / std::pow(2.0, 1.0 / p),
                             even && g.unweighted(), "even rank, edge count", "lambda_min"));
  out.push_back(detail::make("order-min", side::lower, -std::pow(g.order(), r - r / p) / 2.0,
                             even && g.unweighted(), "even rank, order", "lambda_min"));
  out.push_back(detail::make("sign-flip", side::lower, lambda_max ? -*lambda_max : 0.0, lambda_max.has_value(),
                             "lambda_min >= -lambda", "lambda_min"));
  if (lambda_min) audit(out, *lambda_min);
  return out;
}

struct spectral_pair {
  double max = 0.0;
  double min = 0.0;
};

// Weyl-type inequalities for G1 + G2 on a common vertex set.
inline std::vector<bound_report> weyl_check(const hypergraph& g1, const hypergraph& g2, spectral_pair a,
                                            spectral_pair b, spectral_pair sum) {
  if (g1.rank() != g2.rank() || g1.order() != g2.order())
    throw error("weyl_check: graphs differ in rank or vertex set");
  std::vector<bound_report> out;
  out.push_back(detail::make("weyl-max", side::upper, a.max + b.max, true, "subadditivity of lambda"));
  out.back().against(sum.max);
  out.push_back(detail::make("weyl-min-lower", side::lower, a.min + b.min, true, "superadditivity of lambda_min",
                             "lambda_min"));
  out.back().against(sum.min);
  out.push_back(detail::make("weyl-min-upper", side::upper, a.max + b.min, true, "lambda_min(G1+G2) <= lambda(G1)+lambda_min(G2)",
                             "lambda_min"));
  out.back().against(sum.min);
  out.push_back(detail::make("weyl-min-upper-swapped", side::upper, a.min + b.max, true,
                             "lambda_min(G1+G2) <= lambda_min(G1)+lambda(G2)", "lambda_min"));
  out.back().against(sum.min);
  return out;
}

// |lambda(G1) - lambda(G2)| and the lambda_min analogue against (r! k)^{1-1/p}
inline std::vector<bound_report> perturbation_check(const hypergraph& g1, const hypergraph& g2, double p,
                                                    spectral_pair a, spectral_pair b) {
  if (!g1.unweighted() || !g2.unweighted()) throw error("perturbation_check: graphs must be unweighted");
  const double k = static_cast<double>(edge_difference(g1, g2));
  const double bound = std::pow(factorial(g1.rank()) * k, 1.0 - 1.0 / p);
  std::vector<bound_report> out;
  out.push_back(detail::make("perturbation-max", side::upper, bound, true, "edge perturbation", "|delta lambda|"));
  out.back().against(std::abs(a.max - b.max));
  out.push_back(detail::make("perturbation-min", side::upper, bound, true, "edge perturbation",
                             "|delta lambda_min|"));
  out.back().against(std::abs(a.min - b.min));
  return out;
}

// lambda(G) + lambda(complement) between (n)_r / n^{r/p} and 2^{1/p} (n)_r^{1-1/p}
inline std::vector<bound_report> nordhaus_check(const hypergraph& g, double p, double lambda_g,
                                                double lambda_complement) {
  if (!g.unweighted()) throw error("nordhaus_check: graph must be unweighted");
  const double fn = falling(g.order(), g.rank());
  const double s = lambda_g + lambda_complement;
  std::vector<bound_report> out;
  out.push_back(detail::make("nordhaus-lower", side::lower, g.order() ? fn / std::pow(g.order(), g.rank() / p) : 0.0,
                             true, "graph plus complement", "lambda sum"));
  out.back().against(s);
  out.push_back(detail::make("nordhaus-upper", side::upper, std::pow(2.0, 1.0 / p) * std::pow(fn, 1.0 - 1.0 / p),
                             true, "graph plus complement", "lambda sum"));
  out.back().against(s);
  return out;
}

// Audits of a maximizing eigenvector's entries.
inline std::vector<bound_report> entry_bounds(const hypergraph& g, double p, const eigen_result& res) {
  const int r = g.rank();
  const int n = g.order();
  std::vector<bound_report> out;
  if (n == 0 || g.empty()) return out;
  std::vector<double> xp(n);
  for (int k = 0; k < n; ++k) xp[k] = std::pow(std::abs(res.vector[k]), p);

  auto mx = std::max_element(xp.begin(), xp.end());
  out.push_back(detail::make("entry-cap", side::upper, 1.0 / r, true, "single entry", "max |x_k|^p"));
  out.back().against(*mx);

  // greedy set meeting each edge at most once, largest entries first
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return xp[a] > xp[b]; });
  auto inc = incidence(g);
  std::vector<char> blocked(n, 0);
  double mass = 0.0;
  for (int v : order) {
    if (blocked[v]) continue;
    mass += xp[v];
    for (std::size_t i : inc[v])
      for (int w : g.edge(i)) blocked[w] = 1;
  }
  out.push_back(detail::make("star-set-cap", side::upper, 1.0 / r, true, "set meeting each edge at most once",
                             "sum |x_k|^p"));
  out.back().against(mass);

  if (p > 1.0 && res.value > 0.0) {
    auto deg = degree_profile(g).degree;
    double worst = std::numeric_limits<double>::infinity();
    int at = 0;
    for (int k = 0; k < n; ++k) {
      double cap = factorial(r - 1) * deg[k] / std::pow(res.value, p / (p - 1.0));
      if (cap - xp[k] < worst) {
        worst = cap - xp[k];
        at = k;
      }
    }
    double cap = factorial(r - 1) * deg[at] / std::pow(res.value, p / (p - 1.0));
    out.push_back(detail::make("degree-entry-cap", side::upper, cap, g.unweighted(), "entry versus degree",
                               "|x_k|^p at the tightest vertex"));
    out.back().against(xp[at]);
  }

  if (p > 1.0 && p <= r && n >= 2) {
    const double delta = degree_profile(g).min_degree;
    const double sigma = *std::min_element(xp.begin(), xp.end());
    const double lhs =
        (std::pow(res.value * std::pow(n, r / p - 1.0) / factorial(r - 1), p) - std::pow(delta, p)) *
        std::pow(sigma, r - 1);
    const double rhs = binomial(n - 1, r - 1) * std::pow(delta, p - 1.0) *
                       (std::pow(1.0 - sigma, r - 1) / std::pow(n - 1.0, r - 1) - std::pow(sigma, r - 1));
    out.push_back(detail::make("min-entry", side::upper, rhs, g.unweighted(), "smallest entry versus degree",
                               "min-entry expression"));
    out.back().against(lhs);
  }
  return out;
}

// ------------------------------------------------------- fixture-specific

struct bracket {
  double lower = 0.0;
  double upper = 0.0;
};

// Turan 2-graph T_k(n): exact at p = 1, two-sided for p > 1
inline bracket turan_bracket(int n, int k, double p) {
  if (p == 1.0) return {1.0 - 1.0 / k, 1.0 - 1.0 / k};
  const double t = turan_graph(n, k).size();
  const double base = 2.0 * t * std::pow(n, -2.0 / p);
  // (1-1/k)^{1/p} (2t)^{1-1/p} with 2t >= (1-1/k)n^2 - k/4, then Bernoulli
  return {base, base * (1.0 + k / (8.0 * p * t))};
}

// The complete r-partite graph with classes 1, k, ..., k has
// lambda^(r) = (r-1)! k^{(r-1)^2/r}, below (r-1)! times the
// (r/(r-1)+eps)-power mean of the degrees.
struct power_mean_demo {
  hypergraph graph;
  double lambda = 0.0;
  double power_mean_bound = 0.0;
};

inline power_mean_demo hofmeister_limitation(int r, int k, double eps) {
  std::vector<int> parts(r, k);
  parts[0] = 1;
  power_mean_demo d;
  d.graph = complete_multipartite(r, parts);
  d.lambda = factorial(r - 1) * std::pow(d.graph.size(), 1.0 - 1.0 / r);
  const double s = r / (r - 1.0) + eps;
  compensated_sum<> acc;
  for (double v : degree_profile(d.graph).degree) acc += std::pow(v, s);
  d.power_mean_bound = factorial(r - 1) * std::pow(acc.value() / d.graph.order(), 1.0 / s);
  return d;
}

// chi(G) <= lambda(G_(2)) / (r-1) + 1, read as a lower bound on the
// 2-section's lambda
inline hypergraph two_section(const hypergraph& g) { return g.rank() == 2 ? g : k_section(g, 2); }

inline bound_report two_section_coloring(const hypergraph& g, double lambda_two_section) {
  const int chi = chromatic_number_exact(g);
  auto b = detail::make("two-section-coloring", side::lower, (g.rank() - 1.0) * (chi - 1.0), true,
                        "weak chromatic number versus the 2-section", "lambda of 2-section");
  b.against(lambda_two_section);
  return b;
}

}  // namespace hyperspec
