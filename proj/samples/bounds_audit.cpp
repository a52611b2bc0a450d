// Print every applicable bound for a graph next to the computed value.

#include <cstdio>

#include <hyperspec/hyperspec.hpp>

namespace hs = hyperspec;

static void table(const std::vector<hs::bound_report>& reps) {
  for (const auto& b : reps) {
    if (!b.applies) continue;
    std::printf("  %-22s %-6s %12.6f  value %12.6f  slack %10.3e\n", b.name.c_str(),
                b.kind == hs::side::upper ? "upper" : "lower", b.bound, b.value.value_or(NAN), b.slack.value_or(NAN));
  }
}

int main(int argc, char** argv) {
  auto g = argc > 1 ? hs::load(argv[1]) : hs::complete_multipartite(3, {2, 2, 2});
  const double p = argc > 2 ? std::stod(argv[2]) : 3.0;
  hs::solve_options o;
  o.seed = 3;
  auto mx = hs::lambda_max(g, p, o);
  auto mn = hs::lambda_min(g, p, o);
  std::printf("rank %d, order %d, %zu edges, p = %g\n", g.rank(), g.order(), g.num_edges(), p);
  std::printf("lambda = %.9f (%s), lambda_min = %.9f (%s)\n", mx.value, hs::status_name(mx.state), mn.value,
              hs::status_name(mn.state));
  std::printf("upper and lower bounds on lambda:\n");
  table(hs::bound_suite_max(g, p, mx.value));
  table(hs::structural_bounds(g, p, mx.value));
  std::printf("bounds on lambda_min:\n");
  table(hs::bound_suite_min(g, p, mn.value, mx.value));
  std::printf("eigenvector entries:\n");
  table(hs::entry_bounds(g, p, mx));
}
