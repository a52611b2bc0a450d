#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <thread>
#include <vector>

#include "combinatorics.hpp"
#include "polyform.hpp"

namespace hyperspec {

enum class status { converged, best_effort };
enum class solve_mode { automatic, fixed_point, projected_gradient };
enum class target { max, min };

inline const char* status_name(status s) {
  return s == status::converged ? "converged" : "best-effort";
}

struct solve_options {
  double tol = 1e-10;
  long max_iter = 100000;
  int restarts = 32;
  std::optional<double> shift;  // rho; (r-1)! * Delta when unset
  std::uint64_t seed = 0;
  solve_mode mode = solve_mode::automatic;
  int threads = 1;
  std::vector<double> warm_start;  // extra starting point, used when nonempty
};

struct eigen_result {
  double value = 0.0;
  std::vector<double> vector;
  double residual = 0.0;  // NaN at p = 1
  long iterations = 0;
  int restarts_used = 0;
  status state = status::best_effort;
  bool converged() const { return state == status::converged; }
};

// one local solve
struct candidate {
  double value = 0.0;
  std::vector<double> vector;
  double residual = 0.0;
  long iterations = 0;
  bool converged = false;
};

inline double eigen_residual(const hypergraph& g, double p, double lambda, std::span<const double> x,
                             std::span<const double> grad) {
  const double r = g.rank();
  double res = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k)
    res = std::max(res, std::abs(lambda * signed_pow(x[k], p - 1.0) - grad[k] / r));
  return res;
}

// max_k | lambda x_k |x_k|^{p-2} - (1/r) dP/dx_k |
inline double eigen_residual(const hypergraph& g, double p, double lambda, const std::vector<double>& x) {
  if (!(p > 1.0)) throw error("eigen_residual: the eigenequations need p > 1");
  if (std::abs(norm_p(x, p) - 1.0) > 1e-9) throw error("eigen_residual: vector is not on the unit sphere");
  auto grad = gradient(g, x);
  return eigen_residual(g, p, lambda, x, grad);
}

namespace detail {

struct problem {
  const hypergraph& g;
  double p;
  int r;
  int n;
  double tol;
  long max_iter;
  std::vector<vertex_set> classes;  // empty: no symmetrization
};

inline void symmetrize(const problem& pr, std::vector<double>& x) {
  for (const auto& c : pr.classes) {
    if (c.size() < 2) continue;
    compensated_sum<> s;
    for (int v : c) s += x[v];
    double m = s.value() / static_cast<double>(c.size());
    for (int v : c) x[v] = m;
  }
}

// convergence bookkeeping shared by all local solvers
struct stopper {
  double tol;
  int stable = 0;
  double prev = std::numeric_limits<double>::quiet_NaN();
  bool update(double measure, double value) {
    bool ok = measure <= tol && std::abs(value - prev) <= tol * std::max(1.0, std::abs(value));
    stable = ok ? stable + 1 : 0;
    prev = value;
    return stable >= 10;
  }
};

// Shifted fixed-point iteration on the nonnegative sphere:
// x <- normalize_p((grad/r + rho x^{p-1})^{1/(p-1)}).
// Doubles rho whenever a step would lower P (auto shift only).
inline candidate fixed_point_ascent(const problem& pr, std::vector<double> x, double rho, bool auto_rho) {
  const double p = pr.p;
  const double e = 1.0 / (p - 1.0);
  const double rho_cap = rho * 1e8;
  for (double& v : x) v = std::abs(v);
  symmetrize(pr, x);
  if (norm_p(x, p) == 0.0) std::fill(x.begin(), x.end(), 1.0);
  normalize_p(x, p);
  std::vector<double> grad(pr.n), y(pr.n);
  gradient(pr.g, x, grad);
  double lam = evaluate<double>(pr.g, x);
  stopper stop{pr.tol};
  candidate c;
  long it = 0;
  for (; it < pr.max_iter; ++it) {
    double res = eigen_residual(pr.g, p, lam, x, grad);
    c.residual = res;
    if (stop.update(res, lam)) {
      c.converged = true;
      break;
    }
    double ly = 0.0;
    while (true) {
      double gmax = 0.0;
      for (int k = 0; k < pr.n; ++k) {
        y[k] = grad[k] / pr.r + rho * std::pow(x[k], p - 1.0);
        gmax = std::max(gmax, y[k]);
      }
      if (gmax <= 0.0) break;
      for (int k = 0; k < pr.n; ++k) y[k] = std::pow(y[k] / gmax, e);
      symmetrize(pr, y);
      normalize_p(y, p);
      ly = evaluate<double>(pr.g, y);
      if (ly >= lam - 1e-13 * std::max(1.0, std::abs(lam)) || !auto_rho || rho > rho_cap) break;
      rho *= 2.0;
    }
    x.swap(y);
    lam = ly;
    gradient(pr.g, x, grad);
  }
  c.value = lam;
  c.vector = std::move(x);
  c.iterations = it;
  return c;
}

// Gradient steps along the tangent direction d = grad - r P phi(x), retracted
// by p-normalization, Armijo backtracking (halving) from a Barzilai-Borwein
// trial step. sense = +1 ascends, -1 descends.
inline candidate sphere_gradient(const problem& pr, std::vector<double> x, int sense, bool keep_nonneg) {
  const double p = pr.p;
  const int n = pr.n;
  if (norm_p(x, p) == 0.0) std::fill(x.begin(), x.end(), 1.0);
  normalize_p(x, p);
  std::vector<double> grad(n), d(n), y(n), dnew(n), gy(n);
  auto direction = [&](const std::vector<double>& v, const std::vector<double>& g, double val,
                       std::vector<double>& out) {
    for (int k = 0; k < n; ++k) out[k] = g[k] - pr.r * val * signed_pow(v[k], p - 1.0);
  };
  gradient(pr.g, x, grad);
  double lam = evaluate<double>(pr.g, x);
  direction(x, grad, lam, d);
  double eta = 0.0;
  {
    double dm = 0.0;
    for (double v : d) dm = std::max(dm, std::abs(v));
    eta = dm > 0 ? 0.1 / dm : 1.0;
  }
  stopper stop{pr.tol};
  candidate c;
  long it = 0;
  for (; it < pr.max_iter; ++it) {
    double res = 0.0, dd = 0.0;
    for (int k = 0; k < n; ++k) {
      res = std::max(res, std::abs(d[k]) / pr.r);
      dd += d[k] * d[k];
    }
    c.residual = res;
    if (stop.update(res, lam)) {
      c.converged = true;
      break;
    }
    if (dd == 0.0) {
      c.converged = true;
      break;
    }
    bool moved = false;
    double ly = lam;
    while (eta > 1e-300) {
      for (int k = 0; k < n; ++k) {
        y[k] = x[k] + sense * eta * d[k];
        if (keep_nonneg) y[k] = std::abs(y[k]);
      }
      normalize_p(y, p);
      ly = evaluate<double>(pr.g, y);
      if (sense * (ly - lam) >= 1e-4 * eta * dd) {
        moved = true;
        break;
      }
      eta *= 0.5;
    }
    if (!moved) {
      c.converged = res <= pr.tol;
      break;
    }
    gradient(pr.g, y, gy);
    direction(y, gy, ly, dnew);
    double ss = 0.0, sy = 0.0;
    for (int k = 0; k < n; ++k) {
      double s = y[k] - x[k];
      ss += s * s;
      sy += s * (dnew[k] - d[k]);
    }
    eta = (sy != 0.0) ? std::clamp(ss / std::abs(sy), 1e-12, 1e6) : eta * 2.0;
    x.swap(y);
    grad.swap(gy);
    d.swap(dnew);
    lam = ly;
  }
  c.value = lam;
  c.vector = std::move(x);
  c.iterations = it;
  return c;
}

// Euclidean projection onto {y >= 0, sum y = 1}.
inline void project_simplex(std::vector<double>& y) {
  std::vector<double> s = y;
  std::sort(s.begin(), s.end(), std::greater<>());
  double cum = 0.0, theta = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    cum += s[i];
    double t = (cum - 1.0) / static_cast<double>(i + 1);
    if (i + 1 == s.size() || s[i + 1] <= t) {
      theta = t;
      break;
    }
  }
  for (double& v : y) v = std::max(0.0, v - theta);
}

// p = 1: projected gradient on the simplex for f(y) = sense * P(sigma o y).
inline candidate simplex_gradient(const problem& pr, const std::vector<int>& sigma, std::vector<double> y,
                                  int sense) {
  const int n = pr.n;
  project_simplex(y);
  std::vector<double> x(n), grad(n), g(n), z(n);
  auto value_at = [&](const std::vector<double>& v) {
    for (int k = 0; k < n; ++k) x[k] = sigma[k] * v[k];
    return sense * evaluate<double>(pr.g, x);
  };
  auto grad_at = [&](const std::vector<double>& v) {
    for (int k = 0; k < n; ++k) x[k] = sigma[k] * v[k];
    gradient(pr.g, x, grad);
    for (int k = 0; k < n; ++k) g[k] = sense * sigma[k] * grad[k];
  };
  double f = value_at(y);
  grad_at(y);
  double eta = 1.0;
  {
    double gm = 0.0;
    for (double v : g) gm = std::max(gm, std::abs(v));
    if (gm > 0) eta = 1.0 / gm;
  }
  stopper stop{pr.tol};
  candidate c;
  long it = 0;
  for (; it < pr.max_iter; ++it) {
    double gmax = -std::numeric_limits<double>::infinity(), gy = 0.0;
    for (int k = 0; k < n; ++k) {
      gmax = std::max(gmax, g[k]);
      gy += g[k] * y[k];
    }
    double gap = std::max(0.0, gmax - gy);
    c.residual = gap;
    if (stop.update(gap, f)) {
      c.converged = true;
      break;
    }
    bool moved = false;
    double fz = f;
    while (eta > 1e-300) {
      for (int k = 0; k < n; ++k) z[k] = y[k] + eta * g[k];
      project_simplex(z);
      double lin = 0.0;
      for (int k = 0; k < n; ++k) lin += g[k] * (z[k] - y[k]);
      fz = value_at(z);
      if (lin > 0.0 && fz - f >= 1e-4 * lin) {
        moved = true;
        break;
      }
      if (lin <= 0.0) break;
      eta *= 0.5;
    }
    if (!moved) {
      // no ascent direction left within the simplex
      c.converged = gap <= pr.tol;
      break;
    }
    y.swap(z);
    f = fz;
    grad_at(y);
    eta *= 2.0;
  }
  for (int k = 0; k < n; ++k) x[k] = sigma[k] * y[k];
  c.value = evaluate<double>(pr.g, x);
  c.vector = x;
  c.iterations = it;
  return c;
}

template <class Engine>
std::vector<double> random_simplex(Engine& eng, int n) {
  std::vector<double> y(n);
  double s = 0.0;
  for (auto& v : y) {
    v = -std::log(1.0 - unit_uniform(eng));
    s += v;
  }
  for (auto& v : y) v /= s;
  return y;
}

inline std::mt19937_64 restart_engine(std::uint64_t seed, std::size_t index) {
  return std::mt19937_64(mix_seed(seed ^ mix_seed(0x5eed0000ULL + index)));
}

// Runs `count` independent jobs, possibly on several threads; each job
// writes only its own slot, so the output does not depend on scheduling.
template <class Job>
std::vector<candidate> run_all(std::size_t count, int threads, Job job) {
  std::vector<candidate> out(count);
  int t = std::max(1, std::min<int>(threads, static_cast<int>(count)));
  if (t == 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = job(i);
    return out;
  }
  std::vector<std::jthread> pool;
  for (int w = 0; w < t; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += t) out[i] = job(i);
    });
  pool.clear();
  return out;
}

// Winner: extreme value; among values within tol of it, converged before
// unconverged, then the lexicographically smallest vector.
inline std::size_t pick(const std::vector<candidate>& cs, int sense, double tol) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < cs.size(); ++i)
    if (sense * cs[i].value > sense * cs[best].value) best = i;
  const double v = cs[best].value;
  const double slack = tol * std::max(1.0, std::abs(v));
  std::optional<std::size_t> win;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (sense * (v - cs[i].value) > slack) continue;
    if (!win) {
      win = i;
      continue;
    }
    const auto& a = cs[i];
    const auto& b = cs[*win];
    if (a.converged != b.converged) {
      if (a.converged) win = i;
      continue;
    }
    if (std::lexicographical_compare(a.vector.begin(), a.vector.end(), b.vector.begin(), b.vector.end())) win = i;
  }
  return *win;
}

inline std::vector<double> flip(std::vector<double> x, const vertex_set& u) {
  for (int v : u) x[v] = -x[v];
  return x;
}

inline eigen_result finish(const hypergraph& g, double p, const candidate& c, long iters, int used,
                           bool certified) {
  eigen_result res;
  res.vector = c.vector;
  res.value = evaluate(g, res.vector);
  res.residual = p > 1.0 ? eigen_residual(g, p, res.value, res.vector, gradient(g, res.vector))
                         : std::numeric_limits<double>::quiet_NaN();
  res.iterations = iters;
  res.restarts_used = used;
  res.state = certified ? status::converged : status::best_effort;
  return res;
}

inline eigen_result empty_result(const hypergraph& g) {
  eigen_result res;
  res.vector.assign(g.order(), 0.0);
  res.state = status::converged;
  return res;
}

inline void check_args(double p, const solve_options& o) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw error("p must be a finite number >= 1");
  if (!(o.tol > 0.0)) throw error("tol must be positive");
  if (o.restarts < 1) throw error("restarts must be >= 1");
}

}  // namespace detail

// Every local solve of the maximization, in start order: warm start (if
// any), uniform vector, evenly spaced single-edge starts, random simplex
// starts.
inline std::vector<candidate> max_candidates(const hypergraph& g, double p, const solve_options& o) {
  detail::check_args(p, o);
  const int n = g.order();
  const int r = g.rank();
  detail::problem pr{g, p, r, n, o.tol, o.max_iter, {}};
  if (p > 1.0) pr.classes = equivalence_classes(g);

  std::vector<std::vector<double>> starts;
  if (!o.warm_start.empty()) {
    if (static_cast<int>(o.warm_start.size()) != n) throw error("warm start has wrong length");
    starts.push_back(o.warm_start);
  }
  starts.emplace_back(n, 1.0);
  const std::size_t m = g.num_edges();
  const std::size_t n_edge = std::min<std::size_t>(m, static_cast<std::size_t>(o.restarts));
  for (std::size_t j = 0; j < n_edge; ++j) {
    std::vector<double> x(n, p > 1.0 ? 0.05 : 0.0);
    for (int v : g.edge(j * m / n_edge)) x[v] = 1.0;
    starts.push_back(std::move(x));
  }
  const std::size_t fixed = starts.size();
  const std::size_t total = fixed + static_cast<std::size_t>(o.restarts);

  double rho = o.shift ? *o.shift : factorial(r - 1) * degree_profile(g).max_degree;
  const bool auto_rho = !o.shift;
  const bool fixed_point = o.mode != solve_mode::projected_gradient;
  const std::vector<int> ones(n, 1);

  return detail::run_all(total, o.threads, [&](std::size_t i) {
    std::vector<double> x0;
    if (i < fixed) {
      x0 = starts[i];
    } else {
      auto eng = detail::restart_engine(o.seed, i);
      x0 = detail::random_simplex(eng, n);
    }
    if (p == 1.0) {
      double s = 0.0;
      for (double& v : x0) s += (v = std::abs(v));
      for (double& v : x0) v /= s;
      return detail::simplex_gradient(pr, ones, x0, +1);
    }
    if (i >= fixed)
      for (double& v : x0) v = std::pow(v, 1.0 / p);
    if (fixed_point) return detail::fixed_point_ascent(pr, x0, rho, auto_rho);
    auto c = detail::sphere_gradient(pr, x0, +1, true);
    return c;
  });
}

// lambda^(p)(G) = max over the unit l^p sphere of P_G
inline eigen_result lambda_max(const hypergraph& g, double p, const solve_options& o = {}) {
  detail::check_args(p, o);
  if (g.empty()) return detail::empty_result(g);
  auto cs = max_candidates(g, p, o);
  long iters = 0;
  for (const auto& c : cs) iters += c.iterations;
  const auto& win = cs[detail::pick(cs, +1, o.tol)];
  bool certified = win.converged && p > 1.0 && p >= g.rank();
  auto res = detail::finish(g, p, win, iters, static_cast<int>(cs.size()), certified);
  if (certified && res.residual > o.tol * 10) res.state = status::best_effort;
  return res;
}

// lambda_min^(p)(G) = min over the unit l^p sphere of P_G
inline eigen_result lambda_min(const hypergraph& g, double p, const solve_options& o = {}) {
  detail::check_args(p, o);
  if (g.empty()) return detail::empty_result(g);
  const int n = g.order();
  const int r = g.rank();
  solve_options mo = o;
  mo.warm_start.clear();  // the caller's start belongs to the minimization
  eigen_result mx = lambda_max(g, p, mo);
  auto ot = odd_transversal(g);

  if (r % 2 == 1) {
    eigen_result res = mx;
    res.vector = ot ? detail::flip(mx.vector, *ot) : mx.vector;
    if (!ot)
      for (double& v : res.vector) v = -v;
    res.value = evaluate(g, res.vector);
    if (p > 1.0) res.residual = eigen_residual(g, p, res.value, res.vector);
    return res;
  }

  detail::problem pr{g, p, r, n, o.tol, o.max_iter, {}};
  struct start {
    std::vector<int> sigma;   // p = 1 only
    std::vector<double> x;    // signed start (p > 1) or simplex point (p = 1)
  };
  std::vector<start> starts;
  auto split = [&](const std::vector<double>& x) {
    start s;
    s.sigma.resize(n);
    s.x.resize(n);
    for (int k = 0; k < n; ++k) {
      s.sigma[k] = x[k] < 0 ? -1 : 1;
      s.x[k] = std::abs(x[k]);
    }
    return s;
  };
  if (ot) starts.push_back(split(detail::flip(mx.vector, *ot)));
  if (!o.warm_start.empty()) starts.push_back(split(o.warm_start));
  const int pattern_cap = p == 1.0 ? 10 : 8;
  if (n <= pattern_cap) {
    // every sign pattern up to global sign (P is even for even r)
    for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
      auto eng = detail::restart_engine(o.seed ^ 0xabcdefULL, mask);
      start s;
      s.sigma.assign(n, 1);
      s.x.assign(n, 1.0);
      for (int k = 1; k < n; ++k)
        if (mask >> (k - 1) & 1u) s.sigma[k] = -1;
      for (double& v : s.x) v *= 0.9 + 0.2 * unit_uniform(eng);
      starts.push_back(std::move(s));
    }
  }
  const std::size_t fixed = starts.size();
  const std::size_t total = fixed + static_cast<std::size_t>(o.restarts);

  auto cs = detail::run_all(total, o.threads, [&](std::size_t i) {
    start s;
    if (i < fixed) {
      s = starts[i];
    } else {
      auto eng = detail::restart_engine(o.seed ^ 0x6d696eULL, i);
      s.x = detail::random_simplex(eng, n);
      s.sigma.resize(n);
      for (int k = 0; k < n; ++k) s.sigma[k] = unit_uniform(eng) < 0.5 ? -1 : 1;
      if (p > 1.0)
        for (double& v : s.x) v = std::pow(v, 1.0 / p);
    }
    if (p == 1.0) {
      double t = 0.0;
      for (double v : s.x) t += v;
      for (double& v : s.x) v /= t;
      return detail::simplex_gradient(pr, s.sigma, s.x, -1);
    }
    std::vector<double> x(n);
    for (int k = 0; k < n; ++k) x[k] = s.sigma[k] * s.x[k];
    return detail::sphere_gradient(pr, x, -1, false);
  });
  long iters = mx.iterations;
  for (const auto& c : cs) iters += c.iterations;
  const auto& win = cs[detail::pick(cs, -1, o.tol)];
  // certified when it meets the sign-flip bound lambda_min >= -lambda
  bool certified = win.converged && p > 1.0 && mx.converged() &&
                   win.value <= -mx.value + o.tol * std::max(1.0, mx.value);
  auto res = detail::finish(g, p, win, iters, static_cast<int>(cs.size()) + mx.restarts_used, certified);
  if (certified && res.residual > o.tol * 10) res.state = status::best_effort;
  return res;
}

inline eigen_result solve(const hypergraph& g, double p, target t, const solve_options& o = {}) {
  return t == target::max ? lambda_max(g, p, o) : lambda_min(g, p, o);
}

// ----------------------------------------------------------------- helpers

struct cw_envelope {
  double lower = 0.0;
  double upper = 0.0;
};

// min and max over k of (1/r) dP/dx_k x_k^{1-p} at a positive x (rescaled
// onto the sphere first)
inline cw_envelope collatz_wielandt(const hypergraph& g, double p, std::vector<double> x) {
  if (!(p > 1.0)) throw error("collatz_wielandt: need p > 1");
  if (static_cast<int>(x.size()) != g.order()) throw error("collatz_wielandt: wrong vector length");
  for (double v : x)
    if (!(v > 0.0)) throw error("collatz_wielandt: entries must be positive");
  normalize_p(x, p);
  auto grad = gradient(g, x);
  cw_envelope e{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
  for (std::size_t k = 0; k < x.size(); ++k) {
    double q = grad[k] / g.rank() * std::pow(x[k], 1.0 - p);
    e.lower = std::min(e.lower, q);
    e.upper = std::max(e.upper, q);
  }
  return e;
}

struct curve_point {
  double p = 1.0;
  eigen_result max;
  eigen_result min;
  double h = 0.0;  // lambda * n^{r/p}, nonincreasing in p
  double f = 0.0;  // (lambda / (r! |G|))^p
};

// per-point solves, each warm-started from the previous grid point
inline std::vector<curve_point> lambda_curve(const hypergraph& g, const std::vector<double>& grid,
                                             const solve_options& o = {}) {
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (!(grid[i] > grid[i - 1])) throw error("lambda_curve: grid must be strictly ascending");
  std::vector<curve_point> out;
  solve_options mo = o, no = o;
  const double size = g.size();
  for (double p : grid) {
    curve_point pt;
    pt.p = p;
    pt.max = lambda_max(g, p, mo);
    pt.min = lambda_min(g, p, no);
    if (!g.empty()) {
      mo.warm_start = pt.max.vector;
      no.warm_start = pt.min.vector;
      pt.h = pt.max.value * std::pow(static_cast<double>(g.order()), g.rank() / p);
      pt.f = std::pow(pt.max.value / (factorial(g.rank()) * size), p);
    }
    out.push_back(std::move(pt));
  }
  return out;
}

struct modulus_report {
  double residual = 0.0;  // of (lambda, x) in the p = r eigenequations
  double lambda_bound = 0.0;
  bool holds = false;
};

// Any solution of the p = r eigenequations has |lambda| <= lambda^(r)(G).
// Returns nothing when (lambda, x) is not such a solution (residual > 1e-6).
inline std::optional<modulus_report> algebraic_modulus_check(const hypergraph& g, double lambda,
                                                             std::vector<double> x,
                                                             const solve_options& o = {}) {
  const double p = g.rank();
  normalize_p(x, p);
  if (norm_p(x, p) == 0.0) return std::nullopt;
  modulus_report rep;
  rep.residual = eigen_residual(g, p, lambda, x);
  if (rep.residual > 1e-6) return std::nullopt;
  rep.lambda_bound = lambda_max(g, p, o).value;
  rep.holds = std::abs(lambda) <= rep.lambda_bound + 1e-6;
  return rep;
}

}  // namespace hyperspec
