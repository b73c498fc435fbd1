#include <gtest/gtest.h>

#include <cstdlib>
#include <random>

#include "detcount/enumeration.hpp"
#include "support.hpp"

using namespace detcount;
using testing_support::P;

namespace {

EnumOptions with(Strategy s, unsigned threads = 1, bool collect = false) {
  EnumOptions o;
  o.strategy = s;
  o.threads = threads;
  o.collect_points = collect;
  return o;
}

}  // namespace

TEST(CountProjective, PositiveDefiniteHasNoPoints) {
  auto F = P("x0^2 + x1^2 + x2^2");
  for (long B : {1, 5, 20}) EXPECT_EQ(count_projective(F, B).count, 0);
}

TEST(CountProjective, ConicAtHeightOne) {
  auto F = P("x0*x2 - x1^2");
  // Sign vectors in {-1,0,1}^3 with x0 x2 = x1^2 and gcd 1.
  long n = 0;
  for (long a = -1; a <= 1; ++a)
    for (long b = -1; b <= 1; ++b)
      for (long c = -1; c <= 1; ++c)
        if ((a || b || c) && a * c == b * b) ++n;
  EXPECT_EQ(count_projective(F, 1).count, n);
}

TEST(CountProjective, EvenAndMatchesBruteForce) {
  std::mt19937_64 rng(31);
  for (int it = 0; it < 25; ++it) {
    std::size_t n = 3 + it % 2;
    auto F = testing_support::random_form(rng, n, 2 + it % 2, 2);
    if (F.is_zero()) continue;
    long B = n == 3 ? 6 : 3;
    Integer want = testing_support::brute_projective(F, B);
    auto a = count_projective(F, B, with(Strategy::SolveLast));
    auto b = count_projective(F, B, with(Strategy::FullLoop));
    EXPECT_EQ(a.count, want) << F.to_string();
    EXPECT_EQ(b.count, want) << F.to_string();
    EXPECT_EQ(a.count % 2, 0);
  }
}

TEST(CountProjective, CollectedPointsAreZeros) {
  auto F = P("x0^3 + x1^3 + x2^3 + x3^3");
  auto r = count_projective(F, 5, with(Strategy::SolveLast, 1, true));
  EXPECT_EQ(Integer(static_cast<unsigned long>(r.points.size())), r.count);
  EXPECT_TRUE(std::is_sorted(r.points.begin(), r.points.end()));
  for (const auto& x : r.points) {
    EXPECT_EQ(F.eval(x), 0);
    EXPECT_EQ(gcd_of(x), 1);
    EXPECT_LE(max_abs(x), 5);
  }
}

TEST(CountProjective, ThreadCountDoesNotChangeResult) {
  auto F = P("x0^3 + x1^3 + x2^3 + x3^3");
  auto a = count_projective(F, 12, with(Strategy::SolveLast, 1, true));
  auto b = count_projective(F, 12, with(Strategy::SolveLast, 3, true));
  EXPECT_EQ(a.count, b.count);
  EXPECT_EQ(a.points, b.points);
}

TEST(CountAffine, Examples) {
  EXPECT_EQ(count_affine(P("t1 - t2^2", 2), 4).count, 5);
  EXPECT_EQ(count_affine(P("t1^2 + t2^2 + 1", 2), 10).count, 0);
  EXPECT_EQ(count_affine(P("t1 - t2^2", 3), 4).count, 45);
}

TEST(CountAffine, StrategiesAgreeWithBruteForce) {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<long> c(-3, 3);
  for (int it = 0; it < 30; ++it) {
    IntPoly f(3);
    for (unsigned d = 0; d <= 3; ++d)
      for (const auto& e : monomials_of_degree(3, d))
        if (c(rng) > 1) f.add_term(e, c(rng));
    if (f.is_zero()) continue;
    Integer want = testing_support::brute_affine(f, 5);
    EXPECT_EQ(count_affine(f, 5, with(Strategy::SolveLast)).count, want) << f.to_string(VarStyle::T);
    EXPECT_EQ(count_affine(f, 5, with(Strategy::FullLoop)).count, want);
  }
}

TEST(CountAffineSurface, QuadricAtHeightOne) {
  auto F = P("x0*x3 - x1*x2");
  long n = 0;
  for (long a = -1; a <= 1; ++a)
    for (long b = -1; b <= 1; ++b)
      for (long c = -1; c <= 1; ++c)
        if (c == a * b) ++n;
  auto r = count_affine_surface(F, 1, {}, with(Strategy::SolveLast, 1, true));
  EXPECT_EQ(r.count, n);
  for (const auto& x : r.points) EXPECT_EQ(x[0], 1);
}

TEST(CountAffineSurface, Filters) {
  auto F = P("x0*x3 - x1*x2");
  auto r = count_affine_surface(F, 6, {{2, {0, 0, 0}}}, with(Strategy::SolveLast, 1, true));
  Integer n = 0;
  for (long a = -6; a <= 6; a += 2)
    for (long b = -6; b <= 6; b += 2)
      if (std::labs(a * b) <= 6) ++n;
  EXPECT_EQ(r.count, n);
  for (const auto& x : r.points)
    for (std::size_t i = 1; i < 4; ++i) EXPECT_EQ(mod_pos(x[i], 2), 0);
  EXPECT_EQ(count_affine_surface(F, 6, {{3, {0, 0, 0}}, {3, {1, 0, 0}}}).count, 0);
}

TEST(Slicing, InequalityHolds) {
  auto c = verify_slicing(P("x0*x2 - x1^2"), 3);
  EXPECT_EQ(c.lhs, testing_support::brute_projective(P("x0*x2 - x1^2"), 3));
  EXPECT_TRUE(c.holds());
  auto z = verify_slicing(P("x0^2 + x1^2 + x2^2"), 4);
  EXPECT_EQ(z.lhs, 0);
  // The b = 0 slice x1^2 + x2^2 keeps the origin.
  EXPECT_EQ(z.rhs, 1);
  std::mt19937_64 rng(5);
  for (int it = 0; it < 10; ++it) {
    auto F = testing_support::random_form(rng, 3, 3, 3);
    if (F.is_zero()) continue;
    EXPECT_TRUE(verify_slicing(F, 1).holds());
  }
}

TEST(Threads, EnvironmentOverride) {
  setenv("DETCOUNT_THREADS", "3", 1);
  EXPECT_EQ(resolve_threads(0), 3u);
  EXPECT_EQ(resolve_threads(2), 2u);
  unsetenv("DETCOUNT_THREADS");
  EXPECT_GE(resolve_threads(0), 1u);
}

TEST(SolveVariable, MinimalDegreeTiesLast) {
  EXPECT_EQ(solve_variable(P("x0*x2 - x1^2")), 2u);
  EXPECT_EQ(solve_variable(P("x0^3 + x1^3 + x2^3 + x3^3")), 3u);
  EXPECT_FALSE(solve_variable(IntPoly::constant(2, 3)).has_value());
}
