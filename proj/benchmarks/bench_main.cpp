#include <benchmark/benchmark.h>

#include "detcount/curves.hpp"
#include "detcount/detmethod.hpp"
#include "detcount/enumeration.hpp"
#include "detcount/graded.hpp"
#include "detcount/linalg.hpp"
#include "detcount/parse.hpp"
#include "detcount/roots.hpp"

using namespace detcount;

static void BM_FermatCount(benchmark::State& st) {
  IntPoly F = parse_poly("x0^3 + x1^3 + x2^3 + x3^3").poly;
  EnumOptions opt;
  opt.threads = 1;
  for (auto _ : st) benchmark::DoNotOptimize(count_projective(F, st.range(0), opt).count);
}
BENCHMARK(BM_FermatCount)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

static void BM_FullLoopCount(benchmark::State& st) {
  IntPoly F = parse_poly("x0^3 + x1^3 + x2^3 + x3^3").poly;
  EnumOptions opt;
  opt.threads = 1;
  opt.strategy = Strategy::FullLoop;
  for (auto _ : st) benchmark::DoNotOptimize(count_projective(F, st.range(0), opt).count);
}
BENCHMARK(BM_FullLoopCount)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_IntegerRoots(benchmark::State& st) {
  UniPoly p(std::vector<Integer>{-30, 31, -10, 1, 0, 1});
  for (auto _ : st) benchmark::DoNotOptimize(integer_roots(p, -1000000, 1000000));
}
BENCHMARK(BM_IntegerRoots);

static void BM_Determinant(benchmark::State& st) {
  std::size_t k = static_cast<std::size_t>(st.range(0));
  Matrix m(k, std::vector<Integer>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) m[i][j] = Integer((i * 7 + j * j * 13 + 5) % 101) - 50;
  for (auto _ : st) benchmark::DoNotOptimize(determinant(m));
}
BENCHMARK(BM_Determinant)->Arg(10)->Arg(40);

static void BM_SelectMonomials(benchmark::State& st) {
  std::vector<IntPoly> J{parse_poly("x0*x2 - x1^2", 4).poly, parse_poly("x1*x3 - x2^2", 4).poly,
                         parse_poly("x0*x3 - x1*x2", 4).poly};
  for (auto _ : st) benchmark::DoNotOptimize(select_monomials(J, 3, st.range(0)).degree_sum);
}
BENCHMARK(BM_SelectMonomials)->Arg(20)->Arg(80)->Unit(benchmark::kMillisecond);

static void BM_ConicPoints(benchmark::State& st) {
  IntPoly Q = parse_poly("x0*x1 - x2^2", 4).poly;
  auto data = plane_eliminate({1, 0, 0, 1}, Q);
  Integer B = st.range(0);
  for (auto _ : st) {
    auto r = conic_parameterize(data, B);
    benchmark::DoNotOptimize(conic_points(std::get<ConicParam>(r), B).size());
  }
}
BENCHMARK(BM_ConicPoints)->Arg(1000)->Arg(10000);
BENCHMARK_MAIN();
