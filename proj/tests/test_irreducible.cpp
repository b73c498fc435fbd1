#include <gtest/gtest.h>

#include <random>

#include "detcount/irreducible.hpp"
#include "detcount/linalg.hpp"
#include "support.hpp"

using namespace detcount;
using testing_support::P;

TEST(Irreducible, QuadricRankFour) {
  auto F = P("x0*x3 - x1*x2");
  EXPECT_EQ(quadric_rank(F), 4u);
  auto r = is_absolutely_irreducible(F);
  EXPECT_EQ(r.verdict, Verdict::Yes);
  // Gram matrix determinant oracle.
  Matrix gram{{0, 0, 0, 1}, {0, 0, -1, 0}, {0, -1, 0, 0}, {1, 0, 0, 0}};
  EXPECT_NE(determinant(gram), 0);
}

TEST(Irreducible, DifferenceOfSquares) {
  EXPECT_EQ(is_absolutely_irreducible(P("x1^2 - x2^2", 3)).verdict, Verdict::No);
  // Sum of two squares factors over the algebraic closure.
  EXPECT_EQ(is_absolutely_irreducible(P("x1^2 + x2^2", 3)).verdict, Verdict::No);
}

TEST(Irreducible, CubeOfLinearForm) {
  EXPECT_EQ(is_absolutely_irreducible(P("-t2^3", 2)).verdict, Verdict::No);
}

TEST(Irreducible, LinearAndFermat) {
  EXPECT_EQ(is_absolutely_irreducible(P("x0 + 2*x1")).verdict, Verdict::Yes);
  EXPECT_EQ(is_absolutely_irreducible(P("x0^3 + x1^3 + x2^3 + x3^3")).verdict, Verdict::Yes);
  EXPECT_EQ(is_absolutely_irreducible(P("x0^3 + x1^3 + x2^3")).verdict, Verdict::Yes);
}

TEST(Irreducible, ProductsAreNeverYes) {
  std::mt19937_64 rng(21);
  for (int it = 0; it < 30; ++it) {
    auto a = testing_support::random_form(rng, 4, 1, 3);
    auto b = testing_support::random_form(rng, 4, 1 + it % 2, 3);
    if (a.is_zero() || b.is_zero()) continue;
    EXPECT_NE(is_absolutely_irreducible(a * b).verdict, Verdict::Yes) << (a * b).to_string();
  }
}

TEST(Irreducible, EssentialVariables) {
  EXPECT_EQ(essential_variables(P("(x0 + x1)^3 + x2^3")), 2u);
  EXPECT_EQ(essential_variables(P("x0^3 + x1^3 + x2^3 + x3^3")), 4u);
}

TEST(Irreducible, PlaneCurveSingularity) {
  EXPECT_TRUE(is_nonsingular_plane_curve(P("x0^3 + x1^3 + x2^3")));
  EXPECT_FALSE(is_nonsingular_plane_curve(P("x0*x2^2 - x1^3")));
}
