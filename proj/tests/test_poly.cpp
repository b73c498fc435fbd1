#include <gtest/gtest.h>

#include <random>

#include "detcount/parse.hpp"
#include "detcount/poly.hpp"
#include "support.hpp"

using namespace detcount;
using testing_support::P;

TEST(Parse, RoundTrip) {
  auto f = P("x0^3 + 2*x1*x2^2 - x3^3");
  EXPECT_EQ(f.num_vars(), 4u);
  EXPECT_EQ(f.to_string(), "x0^3 + 2*x1*x2^2 - x3^3");
  EXPECT_EQ(P(f.to_string().c_str()), f);
}

TEST(Parse, ParenthesesAndPowers) {
  EXPECT_EQ(P("(x0 + x1)^2"), P("x0^2 + 2*x0*x1 + x1^2"));
  EXPECT_EQ(P("-(x0 - 3)*2", 1), P("-2*x0 + 6", 1));
}

TEST(Parse, AffineVariables) {
  auto r = parse_poly("t1 - t2^2", 3);
  EXPECT_EQ(r.style, VarStyle::T);
  EXPECT_EQ(r.poly.num_vars(), 3u);
  EXPECT_EQ(r.poly.to_string(VarStyle::T), "-t2^2 + t1");
}

TEST(Parse, Errors) {
  EXPECT_THROW(parse_poly("x0^2 +"), ParseError);
  EXPECT_THROW(parse_poly("x0 t1"), ParseError);
  EXPECT_THROW(parse_poly("x0 + t1"), ParseError);
  EXPECT_THROW(parse_poly("t0"), ParseError);
  EXPECT_THROW(parse_poly("x0 x1"), ParseError);
  EXPECT_THROW(parse_poly("x5", 3), Error);
  try {
    parse_poly("x0 + $");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 5u);
  }
}

TEST(Poly, NoZeroCoefficientsStored) {
  auto f = P("x0 + x1") - P("x0", 2);
  EXPECT_EQ(f.num_terms(), 1u);
  EXPECT_EQ(f.degree(), 1);
  EXPECT_TRUE((f - f).is_zero());
  EXPECT_EQ((f - f).degree(), -1);
}

TEST(Poly, RingAxiomsOnRandomInputs) {
  std::mt19937_64 rng(1);
  for (int it = 0; it < 50; ++it) {
    auto a = testing_support::random_form(rng, 3, 1 + it % 3, 5);
    auto b = testing_support::random_form(rng, 3, 1 + it % 2, 5);
    auto c = testing_support::random_form(rng, 3, 2, 5);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    std::vector<Integer> x{it - 3, 2 * it + 1, -it};
    EXPECT_EQ((a * b).eval(x), a.eval(x) * b.eval(x));
    EXPECT_EQ((a * b).degree(), a.degree() + b.degree());
    EXPECT_TRUE((a * b).is_homogeneous());
  }
}

TEST(Homogenize, Examples) {
  EXPECT_EQ(homogenize(P("t1^2 + t2*t3 - 1", 3), 2), P("x1^2 + x2*x3 - x0^2", 4));
  EXPECT_EQ(homogenize(P("t1 - t2^3", 2), 3), P("x0^2*x1 - x2^3", 3));
  EXPECT_EQ(homogenize(P("t1", 1), 2), P("x0*x1", 2));
  EXPECT_THROW(homogenize(P("t1^3", 1), 2), Error);
}

TEST(Homogenize, InverseOfDehomogenize) {
  std::mt19937_64 rng(2);
  for (int it = 0; it < 20; ++it) {
    auto F = testing_support::random_form(rng, 4, 3, 4);
    if (F.degree_in(0) == 0) continue;
    auto f = dehomogenize(F);
    int missing = F.degree() - f.degree();
    auto G = homogenize(f, F.degree());
    EXPECT_EQ(G, F) << missing;
  }
}

TEST(LeadingForm, Examples) {
  EXPECT_EQ(leading_form(P("t1 - t2^3", 2)), P("-t2^3", 2));
  EXPECT_EQ(leading_form(P("x0*x3 - x1*x2")), P("x0*x3 - x1*x2"));
  EXPECT_EQ(leading_form(P("3*t1*t2 + t1 + 5", 2)), P("3*t1*t2", 2));
}

TEST(CoeffHeight, Examples) {
  EXPECT_EQ(coeff_height(P("x0^2 - 7*x1*x2")), 7);
  EXPECT_EQ(coeff_height(P("12*x0^3")), 12);
  auto f = P("x0^2 - 7*x1*x2");
  EXPECT_EQ(f.primitive_part(), f);
  EXPECT_EQ(P("-6*x0 + 4*x1").primitive_part(), P("3*x0 - 2*x1"));
}

TEST(ReduceModP, Examples) {
  EXPECT_EQ(reduce_mod_p(P("7*x0 + x1"), 7).lift(), P("x1", 2));
  auto r = reduce_mod_p(P("x0^3 - 10*x1^3"), 3);
  EXPECT_EQ(r.lift(), P("x0^3 + 2*x1^3"));
  EXPECT_EQ(reduce_mod_p(r, 3), r);
  EXPECT_THROW(reduce_mod_p(P("x0"), 9), Error);
}

TEST(ReduceModP, EvaluationCommutes) {
  std::mt19937_64 rng(4);
  for (int it = 0; it < 50; ++it) {
    auto F = testing_support::random_form(rng, 4, 3, 100);
    Integer p = it % 2 ? 7 : 13;
    auto Fp = reduce_mod_p(F, p);
    std::vector<Integer> x{it, it * it - 5, 3, -it};
    EXPECT_EQ(Fp.eval(x), mod_pos(F.eval(x), p));
    EXPECT_EQ(F.eval_mod(x, p), mod_pos(F.eval(x), p));
  }
}

TEST(Divides, ExactDivision) {
  auto F = P("x0^3 + x1^3 + x2^3 + x3^3");
  auto G = P("x0 + x1", 4) * F;
  EXPECT_TRUE(divides(F, G));
  EXPECT_FALSE(divides(F, G + P("x0^4", 4)));
  EXPECT_TRUE(divides(P("x0 - x1"), P("x0^2 - x1^2")));
  EXPECT_FALSE(divides(P("x0 - x1"), P("x0^2 + x1^2")));
}

TEST(Calculus, DerivativeAndSubstitution) {
  auto F = P("x0^2*x1 - 3*x1*x2^2");
  EXPECT_EQ(F.derivative(1), P("x0^2 - 3*x2^2", 3));
  EXPECT_EQ(F.substitute(0, 2), P("4*x1 - 3*x1*x2^2", 3));
  EXPECT_EQ(slice(P("x0*x2 - x1^2"), 1), P("t2 - t1^2", 2));
  EXPECT_EQ(slice(P("x0^3", 3), 2), IntPoly::constant(2, 8));
  EXPECT_EQ(slice(P("x0*x2 - x1^2"), 0), P("-t1^2", 2));
}

TEST(Monomials, CountAndOrder) {
  auto ms = monomials_of_degree(4, 3);
  EXPECT_EQ(ms.size(), 20u);
  EXPECT_EQ(ms.front(), (Exponents{3, 0, 0, 0}));
  EXPECT_EQ(ms.back(), (Exponents{0, 0, 0, 3}));
  EXPECT_TRUE(std::is_sorted(ms.rbegin(), ms.rend()));
}
