// Build a few graphs, solve for the extreme values of the polyform and
// compare against the closed forms.

#include <cstdio>

#include <hyperspec/hyperspec.hpp>

namespace hs = hyperspec;

int main() {
  hs::solve_options o;
  o.seed = 1;

  // K_4^3 at p = 3: the classical spectral radius
  auto k43 = hs::complete_graph(3, 4);
  auto res = hs::lambda_max(k43, 3.0, o);
  auto want = hs::closed_form_value({hs::family::complete, 3, 4}, 3.0);
  std::printf("K_4^3, p=3: lambda = %.9f (closed form %.9f, %s, residual %.1e)\n", res.value, want.value,
              hs::status_name(res.state), res.residual);

  // C_4 has an odd transversal, so lambda_min = -lambda
  auto c4 = hs::cycle_graph(2, 4);
  auto mn = hs::lambda_min(c4, 2.0, o);
  std::printf("C_4, p=2: lambda_min = %.9f, vector", mn.value);
  for (double x : mn.vector) std::printf(" %.4f", x);
  std::printf("\n");

  // a weighted graph read from text
  auto g = hs::parse_text("3 5 3\n0 1 2 1.5\n1 2 3\n2 3 4 0.5\n");
  for (double p : {1.0, 2.0, 3.0, 6.0}) {
    auto r = hs::lambda_max(g, p, o);
    std::printf("weighted path, p=%g: lambda = %.9f (%s)\n", p, r.value, hs::status_name(r.state));
  }

  // blow-up scales lambda by k^{r - r/p}
  auto big = hs::blow_up(k43, {2, 2, 2, 2});
  auto rb = hs::lambda_max(big, 3.0, o);
  std::printf("K_4^3 blown up by 2: %.9f, predicted %.9f\n", rb.value, hs::blowup_scale(res.value, 3, 3.0, 2));
}
