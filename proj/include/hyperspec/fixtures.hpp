#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "combinatorics.hpp"
#include "hypergraph.hpp"
#include "solver.hpp"

namespace hyperspec {

// What a fixture asserts about its graph at its p.
enum class fixture_check {
  many_maximizers,   // value matches, >= 2 distinct converged maximizers
  zero_entry,        // value matches, the maximizer has a zero entry
  beats_spurious,    // a non-maximal fixed point exists; solver exceeds it by `gap`
  beats_uniform,     // the uniform vector is a fixed point; solver exceeds it by `gap`
  zero_eigenvalue,   // (0, sparse vector) solves the eigenequations exactly
  mixed_sign,        // an even transversal yields a maximizer with mixed signs
  tight_not_tighter  // k-tight but not (k+1)-tight
};

struct fixture {
  std::string name;
  hypergraph graph;
  double p = 2.0;
  fixture_check check = fixture_check::many_maximizers;
  std::optional<double> expected;  // closed value of lambda^(p)
  double gap = 0.0;                // required improvement over `baseline`
  double baseline = 0.0;
  int k = 0;
  std::string claim;
  std::string citation;
};

struct fixture_outcome {
  bool passed = false;
  double value = 0.0;
  std::string detail;
};

// two r-edges {0..r-1} and {r-s..2r-s-1} sharing s vertices
inline hypergraph two_edges(int r, int s) {
  hypergraph_builder b(r, 2 * r - s);
  std::vector<int> e(r), f(r);
  for (int i = 0; i < r; ++i) {
    e[i] = i;
    f[i] = r - s + i;
  }
  b.add(e);
  b.add(f);
  return b.build();
}

inline std::vector<fixture> fixture_catalog() {
  std::vector<fixture> out;
  const double s3 = std::sqrt(3.0);
  out.push_back({"two-triples-p2", two_edges(3, 1), 2.0, fixture_check::many_maximizers, 2.0 / s3, 0.0, 0.0, 0,
                 "value 2/sqrt(3) with a continuum of maximizers",
                 "two 3-edges sharing one vertex, p = r - 1"});
  out.push_back({"two-triples-p1.5", two_edges(3, 1), 1.5, fixture_check::zero_entry, 2.0 / 3.0, 0.0, 0.0, 0,
                 "value 6/9 attained on one edge only; no positive eigenvector",
                 "two 3-edges sharing one vertex, 1 < p < r - 1"});
  for (int r : {3, 4})
    out.push_back({"spurious-fixed-point-r" + std::to_string(r), two_edges(r, r - 2), static_cast<double>(r),
                   fixture_check::beats_spurious, std::nullopt, 0.05, factorial(r - 1), 0,
                   "((r-1)!, single-edge vector) solves the eigenequations at p = r, lambda is larger",
                   "two r-edges sharing r - 2 vertices"});
  out.push_back({"cycle-3-12-p2", cycle_graph(3, 12), 2.0, fixture_check::beats_uniform, std::nullopt, 0.01,
                 6.0 / std::sqrt(12.0), 0,
                 "uniform vector solves the eigenequations at 1 < p < r but is not maximal",
                 "tight cycle C_12^3 at p = 2"});
  out.push_back({"zero-eigenvalue-k4-3", complete_graph(3, 4), 2.0, fixture_check::zero_eigenvalue, std::nullopt,
                 0.0, 0.0, 0, "unit vectors are nonnegative eigenvectors to 0 for r >= 3",
                 "zero eigenvalue with sparse support"});
  out.push_back({"even-transversal-star", beta_star(3, 2), 3.0, fixture_check::mixed_sign,
                 factorial(3) / 3.0 * std::cbrt(2.0), 0.0, 0.0, 0,
                 "connected, proper even transversal, p > r - 1: a maximizer with mixed signs",
                 "even transversals and sign patterns"});
  out.push_back({"two-edges-2-tight", two_edges(4, 2), 4.0, fixture_check::tight_not_tighter, std::nullopt, 0.0, 0.0,
                 2, "two r-edges sharing k vertices are k-tight but not (k+1)-tight",
                 "two edges sharing k vertices"});
  return out;
}

namespace detail {
inline double linf(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}
}  // namespace detail

inline fixture_outcome run_fixture(const fixture& f, const solve_options& o = {}) {
  fixture_outcome out;
  const auto& g = f.graph;
  const double vtol = 1e-5;
  auto value_ok = [&](double v) { return !f.expected || std::abs(v - *f.expected) <= vtol; };
  switch (f.check) {
    case fixture_check::many_maximizers: {
      auto cs = max_candidates(g, f.p, o);
      double best = -1.0;
      for (const auto& c : cs) best = std::max(best, c.value);
      std::vector<std::vector<double>> found;
      for (const auto& c : cs) {
        if (!c.converged || best - c.value > 1e-8) continue;
        bool fresh = std::all_of(found.begin(), found.end(),
                                 [&](const auto& y) { return detail::linf(y, c.vector) > 1e-4; });
        if (fresh) found.push_back(c.vector);
      }
      out.value = best;
      out.passed = value_ok(best) && found.size() >= 2;
      out.detail = std::to_string(found.size()) + " distinct maximizers";
      return out;
    }
    case fixture_check::zero_entry: {
      auto res = lambda_max(g, f.p, o);
      double mn = 1.0;
      for (double v : res.vector) mn = std::min(mn, std::abs(v));
      out.value = res.value;
      out.passed = value_ok(res.value) && mn <= 1e-6;
      out.detail = "min |entry| " + std::to_string(mn);
      return out;
    }
    case fixture_check::beats_spurious:
    case fixture_check::beats_uniform: {
      std::vector<double> x(g.order(), 0.0);
      if (f.check == fixture_check::beats_spurious)
        for (int v : g.edge(0)) x[v] = 1.0;
      else
        std::fill(x.begin(), x.end(), 1.0);
      normalize_p(x, f.p);
      const double lam0 = evaluate(g, x);
      const double res0 = eigen_residual(g, f.p, lam0, x);
      auto res = lambda_max(g, f.p, o);
      out.value = res.value;
      out.passed = res0 <= 1e-12 && std::abs(lam0 - f.baseline) <= 1e-9 && res.value >= f.baseline + f.gap;
      out.detail = "fixed point " + std::to_string(lam0) + " residual " + std::to_string(res0);
      return out;
    }
    case fixture_check::zero_eigenvalue: {
      double worst = 0.0;
      for (int k = 0; k < g.order(); ++k) {
        std::vector<double> x(g.order(), 0.0);
        x[k] = 1.0;
        worst = std::max(worst, eigen_residual(g, f.p, 0.0, x));
      }
      out.passed = g.rank() >= 3 && worst == 0.0;
      out.detail = "largest residual " + std::to_string(worst);
      return out;
    }
    case fixture_check::mixed_sign: {
      auto u = even_transversal(g);
      if (!u || !is_connected(g) || static_cast<int>(u->size()) == g.order()) {
        out.detail = "no proper even transversal";
        return out;
      }
      auto res = lambda_max(g, f.p, o);
      auto y = detail::flip(res.vector, *u);
      const double vy = evaluate(g, y);
      const double ry = eigen_residual(g, f.p, res.value, y);
      bool neg = false, pos = false;
      for (double v : y) {
        neg |= v < 0.0;
        pos |= v > 0.0;
      }
      out.value = res.value;
      out.passed = value_ok(res.value) && neg && pos && std::abs(vy - res.value) <= 1e-9 && ry <= 1e-8;
      out.detail = "flipped residual " + std::to_string(ry);
      return out;
    }
    case fixture_check::tight_not_tighter: {
      auto a = is_k_tight(g, f.k);
      auto b = is_k_tight(g, f.k + 1);
      out.passed = a.tight && !b.tight;
      out.detail = std::string(a.tight ? "" : "not ") + std::to_string(f.k) + "-tight, " + (b.tight ? "" : "not ") +
                   std::to_string(f.k + 1) + "-tight";
      return out;
    }
  }
  return out;
}

}  // namespace hyperspec
