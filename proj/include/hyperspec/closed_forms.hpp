#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "combinatorics.hpp"
#include "hypergraph.hpp"

namespace hyperspec {

struct closed_form {
  double value = 0.0;                // lambda^(p)
  std::optional<double> min_value;   // lambda_min^(p) when known
  std::string eigenvector;           // uniform | two-level | canonical-edge
};

// Exact lambda^(p) (and lambda_min^(p) where known) of the supported
// families. Throws for families or p outside the catalog.
inline closed_form closed_form_value(const family_spec& s, double p) {
  if (!(p >= 1.0)) throw error("closed form: need p >= 1");
  closed_form c;
  switch (s.kind) {
    case family::single_edge: {
      const int r = s.r;
      c.value = factorial(r) / std::pow(r, r / p);
      c.min_value = -c.value;
      c.eigenvector = "canonical-edge";
      return c;
    }
    case family::complete: {
      const int r = s.r, n = s.n;
      if (n < r) throw error("closed form: complete graph needs n >= r");
      c.value = falling(n, r) / std::pow(n, r / p);
      if (r % 2 == 1 || n == r) c.min_value = -c.value;
      c.eigenvector = "uniform";
      return c;
    }
    case family::beta_star: {
      const int r = s.r, k = s.k;
      if (k < 1) throw error("closed form: beta-star needs k >= 1");
      const double base = factorial(r) / std::pow(r, r / p);
      if (k == 1) {
        c.value = base;
        c.eigenvector = "canonical-edge";
      } else if (std::abs(p - (r - 1)) <= 1e-12) {
        throw error("closed form: beta-star at p = r-1 is not in the catalog");
      } else if (p > r - 1) {
        c.value = base * std::pow(k, 1.0 - (r - 1) / p);
        c.eigenvector = "two-level";
      } else {
        c.value = base;
        c.eigenvector = "canonical-edge";
      }
      c.min_value = -c.value;  // the center is an odd transversal
      return c;
    }
    case family::t_star: {
      const int r = s.r, t = s.t, n = s.n;
      if (!(r > t && t >= 1) || n < r) throw error("closed form: t-star needs r > t >= 1 and n >= r");
      c.value = falling(r, t) * std::pow(r - t, (r - t) / p) * falling(n - t, r - t) /
                (std::pow(r, r / p) * std::pow(n - t, (r - t) / p));
      c.min_value = -c.value;
      c.eigenvector = "two-level";
      return c;
    }
    case family::cycle: {
      if (s.r != 2 || s.n != 4)
        throw error("closed form: among cycles only C_4 (r = 2, n = 4) is in the catalog");
      c.value = std::pow(2.0, 3.0 - 4.0 / p);
      c.min_value = -c.value;
      c.eigenvector = "uniform";
      return c;
    }
    case family::multipartite:
    case family::turan:
      break;
  }
  throw error(std::string("closed form: family '") + family_name(s.kind) + "' is not in the catalog");
}

// lambda of the k-fold blow-up from lambda of G (same factor for lambda_min)
inline double blowup_scale(double lambda, int r, double p, int k) {
  if (k < 1) throw error("blowup_scale: need k >= 1");
  return std::pow(static_cast<double>(k), r - r / p) * lambda;
}

// lambda of a disjoint union from the lambdas of its parts
inline double union_combine(const std::vector<double>& parts, int r, double p) {
  if (parts.empty()) return 0.0;
  for (double v : parts)
    if (v < 0.0) throw error("union_combine: part values must be nonnegative");
  if (p <= r) return *std::max_element(parts.begin(), parts.end());
  const double q = p / (p - r);
  compensated_sum<> s;
  for (double v : parts) s += std::pow(v, q);
  return std::pow(s.value(), 1.0 / q);
}

// lambda_min analogue: parts are lambda_min values (<= 0)
inline double union_combine_min(const std::vector<double>& parts, int r, double p) {
  std::vector<double> a;
  for (double v : parts) a.push_back(std::abs(v));
  return -union_combine(a, r, p);
}

// factor c with lambda(join) = c * lambda(G); r is the rank of the join.
// lambda_min(join) = -c * lambda(G).
inline double join_factor(int r, double p, join_kind kind, int t = 1) {
  if (t < 1) throw error("join_factor: need t >= 1");
  switch (kind) {
    case join_kind::k1:
      return std::pow(r, 1.0 - r / p) * std::pow(r - 1, (r - 1) / p);
    case join_kind::t_k1:
      return std::pow(t, 1.0 - 1.0 / p) * std::pow(r, 1.0 - r / p) * std::pow(r - 1, (r - 1) / p);
    case join_kind::k_t_t:
      if (t >= r) throw error("join_factor: need t < r");
      return factorial(r) * std::pow(r - t, (r - t) / p) / (std::pow(r, r / p) * factorial(r - t));
  }
  throw error("join_factor: unknown kind");
}

inline double join_scale(double lambda, int r, double p, join_kind kind, int t = 1) {
  return join_factor(r, p, kind, t) * lambda;
}

// r!|G| / n^{r/p} when the graph's regularity forces it to equal lambda^(p):
// complete with constant weight (any p), vertex-regular with p >= r, or
// k-set regular (2 <= k < r) with p >= r/k.
inline std::optional<double> regular_value(const hypergraph& g, double p) {
  const int r = g.rank();
  const int n = g.order();
  if (n == 0) return std::nullopt;
  const double v = factorial(r) * g.size() / std::pow(n, r / p);
  const double w = g.empty() ? 0.0 : g.weight(0);
  const bool constant =
      std::all_of(g.weights().begin(), g.weights().end(), [&](double x) { return x == w; });
  if (constant && static_cast<double>(g.num_edges()) == binomial(n, r)) return v;
  if (p >= r && is_vertex_regular(g)) return v;
  for (int k = r - 1; k >= 2; --k)
    if (p >= static_cast<double>(r) / k && is_k_set_regular(g, k)) return v;
  return std::nullopt;
}

}  // namespace hyperspec
