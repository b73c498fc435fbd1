#include <gtest/gtest.h>

#include <random>

#include "detcount/roots.hpp"

using namespace detcount;

namespace {

UniPoly U(std::initializer_list<long> c) {
  std::vector<Integer> v;
  for (long x : c) v.emplace_back(x);
  return UniPoly(v);
}

}  // namespace

TEST(IntegerRoots, SmallCases) {
  EXPECT_EQ(integer_roots(U({-6, 11, -6, 1}), -100, 100), (std::vector<Integer>{1, 2, 3}));
  EXPECT_EQ(integer_roots(U({0, 0, 1}), -5, 5), (std::vector<Integer>{0}));
  EXPECT_EQ(integer_roots(U({-27, 0, 0, 1}), -1000, 1000), (std::vector<Integer>{3}));
  EXPECT_TRUE(integer_roots(U({1, 0, 1}), -1000, 1000).empty());
  EXPECT_EQ(integer_roots(U({-6, 11, -6, 1}), 2, 2), (std::vector<Integer>{2}));
}

TEST(IntegerRoots, AgreesWithScan) {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<long> r(-30, 30), c(-5, 5);
  for (int it = 0; it < 300; ++it) {
    // Product of linear factors times a random cofactor.
    UniPoly p = U({1});
    int k = 1 + it % 3;
    for (int i = 0; i < k; ++i) {
      long a = r(rng);
      std::vector<Integer> q(p.c.size() + 1, 0);
      for (std::size_t j = 0; j < p.c.size(); ++j) {
        q[j + 1] += p.c[j];
        q[j] -= a * p.c[j];
      }
      p = UniPoly(q);
    }
    std::vector<Integer> extra{c(rng), c(rng), 1};
    std::vector<Integer> q(p.c.size() + 2, 0);
    for (std::size_t i = 0; i < p.c.size(); ++i)
      for (std::size_t j = 0; j < 3; ++j) q[i + j] += p.c[i] * extra[j];
    p = UniPoly(q);
    std::vector<Integer> want;
    for (long t = -200; t <= 200; ++t)
      if (p.eval(t) == 0) want.push_back(t);
    EXPECT_EQ(integer_roots(p, -200, 200), want);
  }
}

TEST(Breakpoints, BracketEveryRealRoot) {
  auto p = U({-2, 0, 1});  // roots +-sqrt 2
  auto bp = root_breakpoints(p);
  for (double root : {-1.41421356, 1.41421356}) {
    bool found = false;
    for (std::size_t i = 0; i + 1 < bp.size(); ++i)
      if (bp[i].get_d() < root && root <= bp[i + 1].get_d() && bp[i + 1] == bp[i] + 1) found = true;
    EXPECT_TRUE(found) << root;
  }
}

TEST(CountRootsBounded, Examples) {
  auto a = count_roots_bounded(U({0, 0, 1}), 100);
  EXPECT_EQ(a.exact, 21);
  EXPECT_LE(a.exact.get_d(), a.bound);
  auto b = count_roots_bounded(U({0, 0, 0, 2}), 16);
  EXPECT_EQ(b.exact, 5);
  EXPECT_LE(b.exact.get_d(), b.bound);
}

TEST(CountRootsBounded, ExhaustiveOracleQuartic) {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<long> c(-20, 20);
  for (int it = 0; it < 100; ++it) {
    long lead = c(rng);
    if (lead == 0) lead = 1;
    auto p = U({c(rng), c(rng), c(rng), c(rng), lead});
    Integer T = 1000 + 37 * it;
    auto r = count_roots_bounded(p, T);
    // |p(t)| <= T forces |t| <= 1 + sum |c_i| (any T in this range keeps it
    // below 200 for these coefficients).
    Integer n = 0;
    for (long t = -300; t <= 300; ++t)
      if (abs(p.eval(t)) <= T) ++n;
    EXPECT_EQ(r.exact, n);
    EXPECT_LE(r.exact.get_d(), r.bound);
  }
}
