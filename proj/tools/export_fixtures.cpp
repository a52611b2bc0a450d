// Writes every catalog fixture as <dir>/<name>.json: the graph plus p, the
// asserted check and the expected value.

#include <filesystem>
#include <fstream>
#include <iostream>

#include <hyperspec/hyperspec.hpp>

namespace {
const char* check_name(hyperspec::fixture_check c) {
  using hyperspec::fixture_check;
  switch (c) {
    case fixture_check::many_maximizers: return "many-maximizers";
    case fixture_check::zero_entry: return "zero-entry";
    case fixture_check::beats_spurious: return "beats-spurious";
    case fixture_check::beats_uniform: return "beats-uniform";
    case fixture_check::zero_eigenvalue: return "zero-eigenvalue";
    case fixture_check::mixed_sign: return "mixed-sign";
    case fixture_check::tight_not_tighter: return "tight-not-tighter";
  }
  return "?";
}
}  // namespace

int main(int argc, char** argv) {
  std::filesystem::path dir = argc > 1 ? argv[1] : "fixtures";
  std::filesystem::create_directories(dir);
  for (const auto& f : hyperspec::fixture_catalog()) {
    auto j = hyperspec::to_json(f.graph);
    j["p"] = f.p;
    j["check"] = check_name(f.check);
    j["claim"] = f.claim;
    j["citation"] = f.citation;
    if (f.expected) j["expected"] = *f.expected;
    if (f.gap > 0) {
      j["baseline"] = f.baseline;
      j["gap"] = f.gap;
    }
    if (f.k) j["k"] = f.k;
    std::ofstream(dir / (f.name + ".json")) << j.dump(2) << "\n";
    std::cout << (dir / (f.name + ".json")).string() << "\n";
  }
}
