#pragma once

#include <span>
#include <vector>

#include "hypergraph.hpp"

namespace hyperspec {

// P_G(x) = r! * sum_e G(e) prod_{i in e} x_i, summed in stored edge order.
template <class Real = double>
Real evaluate(const hypergraph& g, std::span<const Real> x) {
  if (static_cast<int>(x.size()) != g.order())
    throw error("evaluate: vector length differs from vertex count");
  const int r = g.rank();
  const int* v = g.flat_edges().data();
  compensated_sum<Real> s;
  for (std::size_t i = 0; i < g.num_edges(); ++i, v += r) {
    Real prod = static_cast<Real>(g.weight(i));
    for (int j = 0; j < r; ++j) prod *= x[v[j]];
    s += prod;
  }
  return static_cast<Real>(factorial(r)) * s.value();
}

inline double evaluate(const hypergraph& g, const std::vector<double>& x) {
  return evaluate<double>(g, std::span<const double>(x));
}

// Component k: r! * sum_{e ni k} G(e) prod_{i in e, i != k} x_i. Products of
// the other coordinates use prefix/suffix products, so zeros need no division.
inline void gradient(const hypergraph& g, std::span<const double> x, std::span<double> out) {
  if (static_cast<int>(x.size()) != g.order() || out.size() != x.size())
    throw error("gradient: vector length differs from vertex count");
  const int r = g.rank();
  std::vector<compensated_sum<>> acc(x.size());
  std::vector<double> pre(r + 1), suf(r + 1);
  const int* v = g.flat_edges().data();
  for (std::size_t i = 0; i < g.num_edges(); ++i, v += r) {
    pre[0] = 1.0;
    for (int j = 0; j < r; ++j) pre[j + 1] = pre[j] * x[v[j]];
    suf[r] = 1.0;
    for (int j = r - 1; j >= 0; --j) suf[j] = suf[j + 1] * x[v[j]];
    const double w = g.weight(i);
    for (int j = 0; j < r; ++j) acc[v[j]] += w * (pre[j] * suf[j + 1]);
  }
  const double f = factorial(r);
  for (std::size_t k = 0; k < x.size(); ++k) out[k] = f * acc[k].value();
}

inline std::vector<double> gradient(const hypergraph& g, const std::vector<double>& x) {
  std::vector<double> out(x.size());
  gradient(g, std::span<const double>(x), std::span<double>(out));
  return out;
}

}  // namespace hyperspec
