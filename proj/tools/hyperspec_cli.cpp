// hyperspec: command-line front end.
//
// Exit codes: 0 converged (or predicate evaluated), 1 usage or parse error,
// 2 best-effort result.

#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include <hyperspec/hyperspec.hpp>

namespace hs = hyperspec;
using nlohmann::json;

namespace {

struct shared {
  std::string input;
  double p = 2.0;
  std::uint64_t seed = 0;
  double tol = 1e-10;
  int restarts = 32;
  int threads = 1;
  long max_iter = 100000;
  bool as_json = false;

  hs::solve_options options() const {
    hs::solve_options o;
    o.tol = tol;
    o.restarts = restarts;
    o.seed = seed;
    o.threads = threads;
    o.max_iter = max_iter;
    return o;
  }
};

void add_shared(CLI::App* c, shared& s, bool with_input, bool with_p) {
  if (with_input) c->add_option("--input", s.input, "graph file (JSON or text)")->required()->check(CLI::ExistingFile);
  if (with_p) c->add_option("--p", s.p, "exponent p >= 1")->check(CLI::Range(1.0, 1e6));
  c->add_option("--seed", s.seed, "restart seed");
  c->add_option("--tol", s.tol, "convergence tolerance")->check(CLI::PositiveNumber);
  c->add_option("--restarts", s.restarts, "random restarts")->check(CLI::Range(1, 1 << 20));
  c->add_option("--threads", s.threads, "worker threads for restarts")->check(CLI::Range(1, 256));
  c->add_option("--max-iter", s.max_iter, "iteration cap per local solve")->check(CLI::Range(1L, 1L << 40));
  c->add_flag("--json", s.as_json, "machine-readable report");
}

std::string g12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string f7(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.7f", v == 0.0 ? 0.0 : v);
  return buf;
}

// doubles in reports carry 12 significant digits
json num(double v) {
  if (!std::isfinite(v)) return nullptr;
  return std::strtod(g12(v).c_str(), nullptr);
}

json nums(const std::vector<double>& v) {
  json a = json::array();
  for (double x : v) a.push_back(num(x));
  return a;
}

std::string digest(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// argv minus the program name and --threads, which never changes results
json echo(int argc, char** argv) {
  json a = json::array();
  for (int i = 1; i < argc; ++i) {
    std::string s = argv[i];
    if (s == "--threads") {
      ++i;
      continue;
    }
    if (s.rfind("--threads=", 0) == 0) continue;
    a.push_back(s);
  }
  return a;
}

struct loaded {
  hs::hypergraph graph;
  std::string digest;
};

loaded load_input(const std::string& path) {
  std::string bytes = hs::read_file(path);
  return {hs::parse(bytes), digest(bytes)};
}

json result_json(const hs::eigen_result& r, bool with_vector) {
  json j{{"value", num(r.value)},
         {"residual", num(r.residual)},
         {"status", hs::status_name(r.state)},
         {"iterations", r.iterations},
         {"restarts", r.restarts_used}};
  if (with_vector) j["vector"] = nums(r.vector);
  return j;
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string vector_line(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + g12(v[i]);
  return s;
}

// ------------------------------------------------------------------ compute

int cmd_compute(const shared& s, const std::string& tgt, bool vec, const json& cmd) {
  auto in = load_input(s.input);
  const auto t = tgt == "min" ? hs::target::min : hs::target::max;
  auto r = hs::solve(in.graph, s.p, t, s.options());
  const std::string label = t == hs::target::min ? "lambda_min" : "lambda";
  if (s.as_json) {
    json j{{"command", cmd}, {"input_digest", in.digest}, {"p", num(s.p)}, {"target", tgt}};
    j["result"] = result_json(r, vec);
    print(j);
  } else {
    std::cout << label << " = " << f7(r.value) << "\n";
    std::cout << "residual = " << (std::isnan(r.residual) ? "n/a" : g12(r.residual)) << "\n";
    std::cout << "status = " << hs::status_name(r.state) << "\n";
    if (vec) std::cout << "vector = " << vector_line(r.vector) << "\n";
  }
  return r.converged() ? 0 : 2;
}

// ------------------------------------------------------------------- bounds

json bound_json(const hs::bound_report& b) {
  json j{{"name", b.name},
         {"quantity", b.quantity},
         {"side", b.kind == hs::side::upper ? "upper" : "lower"},
         {"bound", num(b.bound)},
         {"applies", b.applies},
         {"source", b.source}};
  j["value"] = b.value ? num(*b.value) : json(nullptr);
  j["slack"] = b.slack ? num(*b.slack) : json(nullptr);
  return j;
}

int cmd_bounds(const shared& s, const json& cmd) {
  auto in = load_input(s.input);
  const auto& g = in.graph;
  auto o = s.options();
  auto mx = hs::lambda_max(g, s.p, o);
  auto mn = hs::lambda_min(g, s.p, o);
  auto reps = hs::bound_suite_max(g, s.p, mx.value);
  for (auto& b : hs::structural_bounds(g, s.p, mx.value)) reps.push_back(b);
  for (auto& b : hs::bound_suite_min(g, s.p, mn.value, mx.value)) reps.push_back(b);
  int violated = 0;
  for (const auto& b : reps)
    if (!b.ok(2 * s.tol * std::max(1.0, std::abs(mx.value)))) ++violated;
  const bool ok = mx.converged() && mn.converged();
  if (s.as_json) {
    json j{{"command", cmd}, {"input_digest", in.digest}, {"p", num(s.p)}};
    j["lambda"] = result_json(mx, false);
    j["lambda_min"] = result_json(mn, false);
    json t = json::array();
    for (const auto& b : reps) t.push_back(bound_json(b));
    j["bounds"] = t;
    j["violations"] = violated;
    print(j);
  } else {
    std::cout << "lambda = " << f7(mx.value) << " (" << hs::status_name(mx.state) << ")\n";
    std::cout << "lambda_min = " << f7(mn.value) << " (" << hs::status_name(mn.state) << ")\n";
    std::printf("%-24s %-10s %-6s %-8s %16s %16s\n", "bound", "quantity", "side", "applies", "value", "slack");
    for (const auto& b : reps)
      std::printf("%-24s %-10s %-6s %-8s %16s %16s\n", b.name.c_str(), b.quantity.substr(0, 10).c_str(),
                  b.kind == hs::side::upper ? "upper" : "lower", b.applies ? "yes" : "no", g12(b.bound).c_str(),
                  b.slack ? g12(*b.slack).c_str() : "-");
    std::cout << "violations = " << violated << "\n";
  }
  return ok ? 0 : 2;
}

// -------------------------------------------------------------------- check

std::string set_line(const std::vector<int>& u) {
  std::string s = "{";
  for (std::size_t i = 0; i < u.size(); ++i) s += (i ? "," : "") + std::to_string(u[i]);
  return s + "}";
}

int cmd_check(const shared& s, const std::string& prop, std::optional<int> k, const json& cmd) {
  auto in = load_input(s.input);
  const auto& g = in.graph;
  auto need_k = [&]() {
    if (!k) throw CLI::ValidationError("--k", "property '" + prop + "' needs --k");
    return *k;
  };
  json j{{"command", cmd}, {"input_digest", in.digest}, {"property", prop}};
  std::string text;
  if (prop == "connected") {
    bool v = hs::is_connected(g);
    j["holds"] = v;
    text = v ? "true" : "false";
  } else if (prop == "k-tight") {
    auto t = hs::is_k_tight(g, need_k());
    j["holds"] = t.tight;
    text = t.tight ? "true" : "false";
    if (!t.tight) {
      j["witness"] = t.witness;
      text += " witness U = " + set_line(t.witness);
    }
  } else if (prop == "odd-transversal" || prop == "even-transversal") {
    auto u = prop == "odd-transversal" ? hs::odd_transversal(g) : hs::even_transversal(g);
    j["holds"] = u.has_value();
    text = u ? "true " + set_line(*u) : "false";
    if (u) j["set"] = *u;
  } else if (prop == "k-linear") {
    bool v = hs::is_k_linear(g, need_k());
    j["holds"] = v;
    text = v ? "true" : "false";
  } else if (prop == "k-set-regular") {
    bool v = hs::is_k_set_regular(g, need_k());
    j["holds"] = v;
    text = v ? "true" : "false";
  } else if (prop == "steiner") {
    bool v = hs::is_steiner(g, need_k());
    j["holds"] = v;
    text = v ? "true" : "false";
  } else if (prop == "equivalence-classes") {
    auto cl = hs::equivalence_classes(g);
    j["classes"] = cl;
    for (const auto& c : cl) text += set_line(c) + " ";
    if (!text.empty()) text.pop_back();
  } else if (prop == "chromatic") {
    auto col = hs::weak_coloring_exact(g);
    int chi = hs::chromatic_number_exact(g);
    j["chromatic_number"] = chi;
    j["coloring"] = col;
    text = std::to_string(chi);
  }
  if (s.as_json)
    print(j);
  else
    std::cout << text << "\n";
  return 0;
}

// -------------------------------------------------------------------- curve

int cmd_curve(const shared& s, double from, double to, int steps, const json& cmd) {
  if (to < from) throw CLI::ValidationError("--p-to", "must be >= --p-from");
  auto in = load_input(s.input);
  std::vector<double> grid;
  for (int i = 0; i < steps; ++i) grid.push_back(steps == 1 ? from : from + (to - from) * i / (steps - 1));
  auto pts = hs::lambda_curve(in.graph, grid, s.options());
  if (s.as_json) {
    json rows = json::array();
    for (const auto& c : pts)
      rows.push_back({{"p", num(c.p)}, {"lambda", num(c.max.value)}, {"lambda_min", num(c.min.value)}, {"h", num(c.h)},
                      {"f", num(c.f)}});
    print(json{{"command", cmd}, {"input_digest", in.digest}, {"curve", rows}});
  } else {
    std::cout << "p,lambda,lambda_min,h,f\n";
    for (const auto& c : pts)
      std::cout << g12(c.p) << "," << g12(c.max.value) << "," << g12(c.min.value) << "," << g12(c.h) << "," << g12(c.f) << "\n";
  }
  return 0;
}

// ------------------------------------------------------------------- oracle

int cmd_oracle(const shared& s, const std::string& tgt, long samples, const json& cmd) {
  auto in = load_input(s.input);
  const auto t = tgt == "min" ? hs::target::min : hs::target::max;
  double v = hs::brute_force_lambda(in.graph, s.p, t, samples, s.seed);
  if (s.as_json)
    print(json{{"command", cmd}, {"input_digest", in.digest}, {"p", num(s.p)}, {"target", tgt}, {"brute_force", num(v)}});
  else
    std::cout << "brute_force = " << f7(v) << "\n";
  return 0;
}

// ---------------------------------------------------------------- construct

int cmd_construct(const std::string& fam, hs::family_spec spec, const std::string& parts, const std::string& out) {
  static const std::map<std::string, hs::family> names{
      {"complete", hs::family::complete},   {"multipartite", hs::family::multipartite},
      {"turan", hs::family::turan},         {"cycle", hs::family::cycle},
      {"beta-star", hs::family::beta_star}, {"t-star", hs::family::t_star},
      {"single-edge", hs::family::single_edge}};
  spec.kind = names.at(fam);
  if (!parts.empty()) {
    std::stringstream ss(parts);
    for (std::string tok; std::getline(ss, tok, ',');) {
      int v = 0;
      if (!hs::detail::parse_number(hs::detail::trim(tok), v)) throw CLI::ValidationError("--parts", "bad entry '" + tok + "'");
      spec.parts.push_back(v);
    }
  }
  auto g = hs::construct(spec);
  if (out.empty())
    std::cout << hs::serialize_json(g);
  else
    hs::save(g, out);
  return 0;
}

// ------------------------------------------------------------------- random

int cmd_random(const shared& s, int r, int n, double prob, double q, int trials, const json& cmd) {
  if (n < r) throw CLI::ValidationError("--n", "must be >= --r");
  const double scale = prob * std::pow(n, r - r / q);
  json rows = json::array();
  bool all_in = true;
  bool all_conv = true;
  for (int t = 0; t < trials; ++t) {
    auto g = hs::random_gnp(r, n, prob, hs::mix_seed(s.seed) + static_cast<std::uint64_t>(t));
    auto res = hs::lambda_max(g, q, s.options());
    double ratio = res.value / scale;
    all_in &= ratio >= 0.9 && ratio <= 1.1;
    all_conv &= res.converged();
    rows.push_back({{"trial", t}, {"edges", g.num_edges()}, {"lambda", num(res.value)}, {"ratio", num(ratio)},
                    {"status", hs::status_name(res.state)}});
    if (!s.as_json)
      std::cout << "trial " << t << ": edges = " << g.num_edges() << ", lambda = " << f7(res.value)
                << ", ratio = " << g12(ratio) << " (" << hs::status_name(res.state) << ")\n";
  }
  if (s.as_json)
    print(json{{"command", cmd}, {"trials", rows}, {"all_in_range", all_in}});
  else
    std::cout << "all ratios in [0.9, 1.1]: " << (all_in ? "true" : "false") << "\n";
  return all_conv ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"p-spectral radii of uniform hypergraphs"};
  app.require_subcommand(1);
  const json cmd = echo(argc, argv);

  shared s;
  std::string tgt = "max";
  bool vec = false;
  auto* compute = app.add_subcommand("compute", "lambda^(p) or lambda_min^(p) of a graph");
  add_shared(compute, s, true, true);
  compute->add_option("--target", tgt)->check(CLI::IsMember({"max", "min"}));
  compute->add_flag("--vector", vec, "print the eigenvector");

  auto* bounds = app.add_subcommand("bounds", "audit the bound suite against computed values");
  add_shared(bounds, s, true, true);

  std::string prop;
  std::optional<int> k;
  auto* check = app.add_subcommand("check", "evaluate a combinatorial predicate");
  add_shared(check, s, true, false);
  check->add_option("--property", prop)
      ->required()
      ->check(CLI::IsMember({"connected", "k-tight", "odd-transversal", "even-transversal", "k-linear",
                             "k-set-regular", "steiner", "equivalence-classes", "chromatic"}));
  check->add_option("--k", k)->check(CLI::Range(1, 1 << 20));

  double from = 1.0, to = 6.0;
  int steps = 11;
  auto* curve = app.add_subcommand("curve", "CSV of p, lambda, lambda_min, h, f over a p grid");
  add_shared(curve, s, true, false);
  curve->add_option("--p-from", from)->check(CLI::Range(1.0, 1e6));
  curve->add_option("--p-to", to)->check(CLI::Range(1.0, 1e6));
  curve->add_option("--steps", steps)->check(CLI::Range(1, 100000));

  long samples = 100000;
  auto* oracle = app.add_subcommand("oracle", "brute-force estimate");
  add_shared(oracle, s, true, true);
  oracle->add_option("--target", tgt)->check(CLI::IsMember({"max", "min"}));
  oracle->add_option("--samples", samples)->check(CLI::Range(0L, 1L << 40));

  std::string fam, parts, out;
  hs::family_spec spec;
  auto* construct = app.add_subcommand("construct", "write a family graph");
  construct->add_option("--family", fam)
      ->required()
      ->check(CLI::IsMember({"complete", "multipartite", "turan", "cycle", "beta-star", "t-star", "single-edge"}));
  construct->add_option("--r", spec.r)->check(CLI::Range(2, 64));
  construct->add_option("--n", spec.n)->check(CLI::Range(0, 1 << 20));
  construct->add_option("--k", spec.k)->check(CLI::Range(0, 1 << 20));
  construct->add_option("--t", spec.t)->check(CLI::Range(0, 64));
  construct->add_option("--parts", parts, "comma-separated part sizes");
  construct->add_option("--output", out, "file to write (.txt for text, JSON otherwise)");

  int rr = 3, rn = 40, trials = 5;
  double prob = 0.3, q = 2.0;
  auto* random = app.add_subcommand("random", "lambda^(q) of G^r(n, prob) against prob n^{r - r/q}");
  add_shared(random, s, false, false);
  random->add_option("--r", rr)->check(CLI::Range(2, 16));
  random->add_option("--n", rn)->check(CLI::Range(1, 100000));
  random->add_option("--prob", prob)->check(CLI::Range(0.0, 1.0));
  random->add_option("--q", q)->check(CLI::Range(1.0, 1e6));
  random->add_option("--trials", trials)->check(CLI::Range(1, 100000));

  try {
    app.parse(argc, argv);
    if (*compute) return cmd_compute(s, tgt, vec, cmd);
    if (*bounds) return cmd_bounds(s, cmd);
    if (*check) return cmd_check(s, prop, k, cmd);
    if (*curve) return cmd_curve(s, from, to, steps, cmd);
    if (*oracle) return cmd_oracle(s, tgt, samples, cmd);
    if (*construct) return cmd_construct(fam, spec, parts, out);
    if (*random) return cmd_random(s, rr, rn, prob, q, trials, cmd);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  } catch (const hs::parse_error& e) {
    std::cerr << "parse error at " << e.location << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
