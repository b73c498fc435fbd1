#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "detcount/harness.hpp"

using namespace detcount;

namespace {

CountSeries series(std::initializer_list<std::pair<long, long>> xs) {
  CountSeries s;
  for (auto [b, n] : xs) s.entries.emplace_back(Integer(b), Integer(n));
  return s;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Fit, ExactLines) {
  EXPECT_NEAR(fit_exponent(series({{10, 10}, {100, 100}, {1000, 1000}})).slope, 1.0, 1e-12);
  auto r = fit_exponent(series({{10, 100}, {100, 10000}, {1000, 1000000}}));
  EXPECT_NEAR(r.slope, 2.0, 1e-12);
  EXPECT_NEAR(r.residual, 0.0, 1e-12);
}

TEST(Fit, ZeroCountsExcludedAndInsufficientData) {
  auto r = fit_exponent(series({{1, 0}, {10, 10}, {100, 100}, {1000, 1000}}));
  EXPECT_EQ(r.used, 3u);
  EXPECT_THROW(fit_exponent(series({{10, 10}, {100, 0}, {1000, 1000}})), Error);
  EXPECT_THROW(fit_exponent(series({})), Error);
}

TEST(Fit, InvariantUnderScaling) {
  auto a = fit_exponent(series({{16, 30}, {32, 70}, {64, 150}, {128, 290}}));
  auto b = fit_exponent(series({{16, 300}, {32, 700}, {64, 1500}, {128, 2900}}));
  EXPECT_NEAR(a.slope, b.slope, 1e-12);
}

TEST(Fit, Verdict) {
  auto r = fit_exponent(series({{10, 10}, {100, 100}, {1000, 1000}}), 1.1, 0.2);
  ASSERT_TRUE(r.pass);
  EXPECT_TRUE(*r.pass);
  EXPECT_NEAR(*r.margin, 0.1, 1e-12);
  EXPECT_FALSE(*fit_exponent(series({{10, 10}, {100, 100}, {1000, 1000}}), 2.0, 0.2).pass);
}

TEST(Grid, Geometric) {
  EXPECT_EQ(geometric_grid(256, 2, 16), (std::vector<Integer>{16, 32, 64, 128, 256}));
  EXPECT_EQ(geometric_grid(10000, 10, 100), (std::vector<Integer>{100, 1000, 10000}));
  EXPECT_EQ(parse_grid("geometric:3", 27), (std::vector<Integer>{1, 3, 9, 27}));
  EXPECT_EQ(parse_grid("5,7,9", 0), (std::vector<Integer>{5, 7, 9}));
  EXPECT_THROW(parse_grid("geometric:x", 10), Error);
}

TEST(Filter, Parse) {
  auto f = parse_filter("7:1,2,3");
  EXPECT_EQ(f.p, 7);
  EXPECT_EQ(f.residues, (std::vector<Integer>{1, 2, 3}));
  EXPECT_THROW(parse_filter("7"), Error);
}

TEST(Config, ParseAndValidate) {
  auto c = parse_config(R"({
    "name": "parabola",
    "variety": {"polynomial": "t1 - t2^2", "num_vars": 2, "degree": 2},
    "grid": [100, 1000, 10000],
    "function": "M",
    "target": 0.5,
    "tolerance": 0.05
  })");
  EXPECT_EQ(c.name, "parabola");
  EXPECT_EQ(c.function, CountFunction::M);
  EXPECT_EQ(c.grid.size(), 3u);
  EXPECT_NO_THROW(validate_config(c));
  c.variety.degree = 3;
  EXPECT_THROW(validate_config(c), Error);
  c.variety.degree = 2;
  c.grid = {};
  EXPECT_THROW(validate_config(c), Error);
  c.grid = {10, 10};
  EXPECT_THROW(validate_config(c), Error);
  EXPECT_THROW(parse_config("{"), Error);
  EXPECT_THROW(parse_config(R"({"variety": "x0", "grid": [1], "function": "Q"})"), Error);
  auto g = parse_config(R"({"variety": "x0*x2 - x1^2", "grid": {"bmax": 64, "ratio": 4}})");
  EXPECT_EQ(g.grid, (std::vector<Integer>{1, 4, 16, 64}));
}

TEST(Experiment, ParabolaSlope) {
  ExperimentConfig c;
  c.variety.polynomial = "t1 - t2^2";
  c.variety.num_vars = 2;
  c.function = CountFunction::M;
  c.grid = {100, 1000, 10000};
  c.target = 0.5;
  auto r = run_experiment(c);
  ASSERT_TRUE(r.fit);
  // Closed form: 2 floor(sqrt B) + 1.
  for (const auto& [B, n] : r.series.entries) EXPECT_EQ(n, 2 * sqrt(B) + 1);
  EXPECT_NEAR(r.fit->slope, 0.5, 0.05);
  EXPECT_EQ(r.csv.substr(0, 8), "B,count\n");
}

TEST(Experiment, ByteIdenticalReruns) {
  auto dir = std::filesystem::temp_directory_path() / "detcount_harness_test";
  std::filesystem::remove_all(dir);
  ExperimentConfig c;
  c.name = "fermat";
  c.variety.polynomial = "x0^3 + x1^3 + x2^3 + x3^3";
  c.variety.integral = true;
  c.grid = {2, 4, 8, 16};
  c.out_dir = (dir / "a").string();
  c.threads = 1;
  auto a = run_experiment(c);
  c.out_dir = (dir / "b").string();
  c.threads = 3;
  auto b = run_experiment(c);
  EXPECT_EQ(a.json, b.json);
  EXPECT_EQ(slurp(dir / "a" / "fermat.csv"), slurp(dir / "b" / "fermat.csv"));
  EXPECT_EQ(slurp(dir / "a" / "fermat.json"), slurp(dir / "b" / "fermat.json"));
  EXPECT_EQ(a.integrality, "Yes");
  std::filesystem::remove_all(dir);
}

TEST(Experiment, SeedFromEnvironment) {
  setenv("DETCOUNT_SEED", "42", 1);
  EXPECT_EQ(resolve_seed(1), 42u);
  setenv("DETCOUNT_SEED", "x", 1);
  EXPECT_THROW(resolve_seed(1), Error);
  unsetenv("DETCOUNT_SEED");
  EXPECT_EQ(resolve_seed(7), 7u);
}

TEST(Experiment, NaffWithFilter) {
  ExperimentConfig c;
  c.variety.polynomial = "x0*x3 - x1*x2";
  c.function = CountFunction::Naff;
  c.grid = {4, 8, 16};
  c.filters = {parse_filter("2:0,0,0")};
  auto r = run_experiment(c);
  EXPECT_EQ(r.series.entries.size(), 3u);
  c.function = CountFunction::N;
  EXPECT_THROW(run_experiment(c), Error);
}
