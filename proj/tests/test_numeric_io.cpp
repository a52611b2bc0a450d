#include <gtest/gtest.h>

#include <filesystem>

#include "support.hpp"

using namespace hyperspec;

TEST(Numeric, CompensatedSumRecoversSmallTerms) {
  compensated_sum<> s;
  s += 1e16;
  for (int i = 0; i < 1000; ++i) s += 1.0;
  s += -1e16;
  EXPECT_EQ(s.value(), 1000.0);
}

TEST(Numeric, FallingAndBinomialAgreeWithProducts) {
  for (int n = 0; n <= 20; ++n)
    for (int k = 0; k <= n; ++k) {
      double f = 1.0;
      for (int i = 0; i < k; ++i) f *= n - i;
      EXPECT_EQ(falling(n, k), f);
      EXPECT_EQ(binomial(n, k), f / factorial(k));
    }
  EXPECT_EQ(falling(3, 5), 0.0);
  EXPECT_EQ(binomial(3, 5), 0.0);
  EXPECT_EQ(factorial(10), 3628800.0);
  EXPECT_NEAR(binomial(200, 100) / 9.054851465610328e58, 1.0, 1e-9);
  EXPECT_THROW(falling(5, -1), error);
}

TEST(Numeric, NormIsScaleSafe) {
  std::vector<double> x{3e200, 4e200};
  EXPECT_NEAR(norm_p(x, 2.0) / 5e200, 1.0, 1e-15);
  std::vector<double> y{1.0, -2.0, 3.0};
  EXPECT_DOUBLE_EQ(norm_p(y, 1.0), 6.0);
  normalize_p(y, 3.0);
  EXPECT_NEAR(norm_p(y, 3.0), 1.0, 1e-15);
  std::vector<double> z(4, 0.0);
  normalize_p(z, 2.0);
  EXPECT_EQ(z, std::vector<double>(4, 0.0));
}

TEST(Numeric, SignedPowKeepsSign) {
  EXPECT_DOUBLE_EQ(signed_pow(-8.0, 1.0 / 3.0), -2.0);
  EXPECT_DOUBLE_EQ(signed_pow(4.0, 0.5), 2.0);
  EXPECT_EQ(signed_pow(0.0, 0.5), 0.0);
}

TEST(Numeric, UnitUniformInRangeAndReproducible) {
  std::mt19937_64 a(mix_seed(5)), b(mix_seed(5));
  for (int i = 0; i < 10000; ++i) {
    double u = unit_uniform(a);
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    ASSERT_EQ(u, unit_uniform(b));
  }
  EXPECT_NE(mix_seed(1), mix_seed(2));
}

// ---------------------------------------------------------------- io

TEST(Io, JsonRoundTripKeepsWeights) {
  hypergraph_builder b(3, 5);
  b.set({4, 0, 2}, 0.1);
  b.set({1, 2, 3}, 2.5);
  auto g = b.build();
  auto h = parse(serialize_json(g));
  EXPECT_EQ(g, h);
  EXPECT_EQ(h.weight_of({0, 2, 4}), 0.1);
}

TEST(Io, TextRoundTripWithCommentsAndDefaults) {
  auto g = parse("# comment\n\n3 5 2\n0 1 2\n  2 3 4 0.25  # trailing\n");
  ASSERT_EQ(g.num_edges(), 2u);
  EXPECT_EQ(g.weight_of({0, 1, 2}), 1.0);
  EXPECT_EQ(g.weight_of({2, 3, 4}), 0.25);
  EXPECT_EQ(parse(serialize_text(g)), g);
}

TEST(Io, EmptyGraphParses) {
  auto g = parse(R"({"rank": 4, "vertices": 7, "edges": []})");
  EXPECT_TRUE(g.empty());
  EXPECT_EQ(g.order(), 7);
  EXPECT_EQ(g.rank(), 4);
}

static std::string location_of(const std::string& text) {
  try {
    parse(text);
  } catch (const parse_error& e) {
    return e.location;
  }
  return "no error";
}

TEST(Io, ErrorsNameTheirLocation) {
  EXPECT_EQ(location_of(R"({"rank":3,"vertices":4,"edges":[{"verts":[0,1,2]},{"verts":[0,1]}]})"), "edges[1]");
  EXPECT_EQ(location_of(R"({"rank":3,"vertices":4,"edges":[{"verts":[0,1,9]}]})"), "edges[0]");
  EXPECT_EQ(location_of(R"({"rank":3,"vertices":4,"edges":[{"verts":[0,1,1]}]})"), "edges[0]");
  EXPECT_EQ(location_of(R"({"rank":3,"vertices":4,"edges":[{"verts":[0,1,2],"w":-1}]})"), "edges[0]");
  EXPECT_EQ(location_of(R"({"rank":3,"vertices":4,"edges":[{"verts":[0,1,2]},{"verts":[2,1,0]}]})"), "edges[1]");
  EXPECT_EQ(location_of(R"({"rank":1,"vertices":4,"edges":[]})"), "rank");
  EXPECT_EQ(location_of(R"({"vertices":4,"edges":[]})"), "header");
  EXPECT_EQ(location_of("3 4 1\n0 1 2\n0 1 3\n"), "line 3");
  EXPECT_EQ(location_of("3 4 2\n0 1 2\n"), "line 3");
  EXPECT_EQ(location_of("3 4 1\n0 x 2\n"), "line 2 field 2");
  EXPECT_EQ(location_of("3 4\n"), "line 1");
  EXPECT_EQ(location_of("3 4 1\n0 1 2 abc\n"), "line 2 field 4");
  EXPECT_EQ(location_of("{\"rank\": 3,"), "byte 12");
}

TEST(Io, SaveAndLoadBothFormats) {
  auto dir = std::filesystem::temp_directory_path() / "hyperspec_io_test";
  std::filesystem::create_directories(dir);
  auto g = cycle_graph(3, 7);
  save(g, (dir / "g.txt").string());
  save(g, (dir / "g.json").string());
  EXPECT_EQ(load((dir / "g.txt").string()), g);
  EXPECT_EQ(load((dir / "g.json").string()), g);
  EXPECT_EQ(read_file((dir / "g.json").string()).front(), '{');
  EXPECT_THROW(load((dir / "missing.json").string()), error);
}
