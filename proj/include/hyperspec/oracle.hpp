#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "polyform.hpp"
#include "solver.hpp"

namespace hyperspec {

namespace detail {

// P(x) / |x|_p^r, invariant under rescaling
inline double ratio(const hypergraph& g, const std::vector<double>& x, double p) {
  double nr = norm_p(x, p);
  if (nr == 0.0) return 0.0;
  return evaluate(g, x) / std::pow(nr, g.rank());
}

// coordinate and pairwise pattern search with step halving
inline double pattern_polish(const hypergraph& g, std::vector<double> x, double p, int sense) {
  const int n = g.order();
  normalize_p(x, p);
  double best = sense * ratio(g, x, p);
  double h = 0.25;
  long evals = 0;
  auto attempt = [&](std::vector<double>& y) {
    ++evals;
    double v = sense * ratio(g, y, p);
    if (v > best) {
      best = v;
      x = y;
      normalize_p(x, p);
      return true;
    }
    return false;
  };
  std::vector<double> y;
  while (h > 1e-11 && evals < 400000) {
    bool improved = false;
    for (int i = 0; i < n; ++i)
      for (double s : {h, -h}) {
        y = x;
        y[i] += s;
        improved |= attempt(y);
      }
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (double s : {h, -h}) {
          y = x;
          y[i] += s;
          y[j] -= s;
          improved |= attempt(y);
          y = x;
          y[i] += s;
          y[j] += s;
          improved |= attempt(y);
        }
    if (!improved) h *= 0.5;
  }
  return sense * best;
}

}  // namespace detail

// Independent estimate of the extreme of P_G on the unit sphere: random
// sphere points, every {-1,0,1} pattern, then a pattern-search polish of the
// 100 best. The result is attained by a point, so it never overshoots.
inline double brute_force_lambda(const hypergraph& g, double p, target t, long samples = 100000,
                                 std::uint64_t seed = 1) {
  if (!(p >= 1.0)) throw error("brute_force_lambda: need p >= 1");
  const int n = g.order();
  if (g.empty() || n == 0) return 0.0;
  const int sense = t == target::max ? 1 : -1;
  std::mt19937_64 eng(mix_seed(seed));
  std::gamma_distribution<double> gam(1.0 / p, 1.0);

  std::vector<std::pair<double, std::vector<double>>> pool;
  auto offer = [&](std::vector<double> x) {
    double v = sense * detail::ratio(g, x, p);
    pool.emplace_back(v, std::move(x));
    if (pool.size() >= 4000) {
      std::nth_element(pool.begin(), pool.begin() + 100, pool.end(),
                       [](const auto& a, const auto& b) { return a.first > b.first; });
      pool.resize(100);
    }
  };
  std::vector<double> x(n);
  for (long s = 0; s < samples; ++s) {
    for (int k = 0; k < n; ++k) {
      double m = std::pow(gam(eng), 1.0 / p);
      x[k] = (eng() & 1) ? m : -m;
    }
    offer(x);
  }
  if (n <= 10) {
    long total = 1;
    for (int k = 0; k < n; ++k) total *= 3;
    for (long code = 1; code < total; ++code) {
      long c = code;
      for (int k = 0; k < n; ++k, c /= 3) x[k] = static_cast<double>(c % 3) - 1.0;
      offer(x);
    }
  }
  std::sort(pool.begin(), pool.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  if (pool.size() > 100) pool.resize(100);
  double best = -std::numeric_limits<double>::infinity();
  for (auto& [v, y] : pool) best = std::max(best, sense * detail::pattern_polish(g, y, p, sense));
  return sense * best;
}

}  // namespace hyperspec
