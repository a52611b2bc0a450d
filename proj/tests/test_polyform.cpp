#include <gtest/gtest.h>

#include "support.hpp"

using namespace hyperspec;
using namespace testing_support;

// sum over ordered r-tuples of distinct vertices of G(tuple) x_i1 ... x_ir
static double tensor_form(const hypergraph& g, const std::vector<double>& x) {
  const int n = g.order(), r = g.rank();
  std::vector<int> idx(r, 0);
  double s = 0.0;
  for (;;) {
    std::vector<int> t(idx);
    std::sort(t.begin(), t.end());
    if (std::adjacent_find(t.begin(), t.end()) == t.end()) {
      double prod = g.weight_of(t);
      for (int i : idx) prod *= x[i];
      s += prod;
    }
    int k = r - 1;
    while (k >= 0 && idx[k] == n - 1) idx[k--] = 0;
    if (k < 0) break;
    ++idx[k];
  }
  return s;
}

TEST(Polyform, MatchesTensorContraction) {
  std::mt19937_64 eng(1);
  for (int trial = 0; trial < 40; ++trial) {
    int r = 2 + trial % 3;
    int n = r + 1 + trial % 3;
    auto g = random_graph(eng, r, n, 0.6, trial % 2 == 0);
    auto x = random_vector(eng, n);
    EXPECT_NEAR(evaluate(g, x), tensor_form(g, x), 1e-12 * (1 + std::abs(tensor_form(g, x))));
  }
}

TEST(Polyform, KnownValues) {
  std::vector<double> x{1, 2, 3};
  EXPECT_DOUBLE_EQ(evaluate(single_edge(3), x), 36.0);
  auto c4 = cycle_graph(2, 4);
  std::vector<double> y{1, -1, 1, -1};
  EXPECT_DOUBLE_EQ(evaluate(c4, y), -8.0);
  EXPECT_EQ(evaluate(hypergraph(3, 4), std::vector<double>{1, 1, 1, 1}), 0.0);
}

TEST(Polyform, GradientMatchesCentralDifferences) {
  std::mt19937_64 eng(2);
  for (int trial = 0; trial < 30; ++trial) {
    int r = 2 + trial % 4;
    int n = r + 2;
    auto g = random_nonempty(eng, r, n, 0.5, true);
    auto x = random_vector(eng, n);
    auto grad = gradient(g, x);
    for (int k = 0; k < n; ++k) {
      const double h = 1e-5;
      auto a = x, b = x;
      a[k] += h;
      b[k] -= h;
      double fd = (evaluate(g, a) - evaluate(g, b)) / (2 * h);
      EXPECT_NEAR(grad[k], fd, 1e-6 * (1 + std::abs(fd)));
    }
  }
}

TEST(Polyform, GradientWithZeroEntriesIsExact) {
  // prefix/suffix products must not divide by zero entries
  auto g = complete_graph(3, 4);
  std::vector<double> x{0.0, 0.0, 2.0, 3.0};
  auto grad = gradient(g, x);
  EXPECT_DOUBLE_EQ(grad[0], 6.0 * 6.0);
  EXPECT_DOUBLE_EQ(grad[1], 6.0 * 6.0);
  EXPECT_EQ(grad[2], 0.0);
  EXPECT_EQ(grad[3], 0.0);
}

TEST(Polyform, EulerIdentityAndHomogeneity) {
  std::mt19937_64 eng(3);
  for (int trial = 0; trial < 50; ++trial) {
    int r = 2 + trial % 4;
    int n = r + trial % 4;
    auto g = random_graph(eng, r, n, 0.5, true);
    auto x = random_vector(eng, n);
    auto grad = gradient(g, x);
    double dot = 0.0;
    for (int k = 0; k < n; ++k) dot += x[k] * grad[k];
    double p = evaluate(g, x);
    EXPECT_NEAR(dot, r * p, 1e-11 * (1 + std::abs(dot)));
    auto y = x;
    for (double& v : y) v *= -1.7;
    EXPECT_NEAR(evaluate(g, y), std::pow(-1.7, r) * p, 1e-11 * (1 + std::abs(p)));
  }
}

TEST(Polyform, LongDoubleInstantiation) {
  auto g = cycle_graph(3, 6);
  std::vector<long double> x{0.1L, 0.2L, 0.3L, 0.4L, 0.5L, 0.6L};
  std::vector<double> xd(x.begin(), x.end());
  long double v = evaluate<long double>(g, std::span<const long double>(x));
  EXPECT_NEAR(static_cast<double>(v), evaluate(g, xd), 1e-14);
}
