#include <gtest/gtest.h>

#include <random>

#include "detcount/arith.hpp"

using namespace detcount;

static std::vector<Integer> V(std::initializer_list<long> xs) {
  std::vector<Integer> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

TEST(Normalize, DividesByGcd) { EXPECT_EQ(normalize_primitive(V({2, 4, 6})).coords(), V({1, 2, 3})); }

TEST(Normalize, CanonicalSign) {
  EXPECT_EQ(normalize_primitive(V({0, -3, 9})).coords(), V({0, 1, -3}));
  EXPECT_EQ(normalize_primitive(V({-2, 0, 0, 4})).coords(), V({1, 0, 0, -2}));
}

TEST(Normalize, RejectsZeroVector) { EXPECT_THROW(normalize_primitive(V({0, 0, 0})), Error); }

TEST(Normalize, InvariantsOnRandomVectors) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> d(-50, 50);
  for (int it = 0; it < 500; ++it) {
    std::vector<Integer> v;
    for (int i = 0; i < 4; ++i) v.emplace_back(d(rng));
    if (max_abs(v) == 0) continue;
    auto p = normalize_primitive(v);
    EXPECT_EQ(gcd_of(p.coords()), 1);
    auto first = std::find_if(p.coords().begin(), p.coords().end(), [](const Integer& x) { return x != 0; });
    EXPECT_GT(*first, 0);
    // Same projective point: v is a rational multiple of p.
    Integer g = gcd_of(v);
    for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(abs(v[i]), abs(p[i] * g));
    EXPECT_EQ(normalize_primitive(p.coords()), p);
    auto neg = v;
    for (auto& x : neg) x = -x;
    EXPECT_EQ(normalize_primitive(neg), p);
  }
}

TEST(Height, Examples) {
  EXPECT_EQ(height(normalize_primitive(V({1, 2, 3}))), 3);
  EXPECT_EQ(height(normalize_primitive(V({1, 0, 0, 0}))), 1);
  EXPECT_EQ(height(normalize_primitive(V({0, 1, -3}))), 3);
}

TEST(Unimodular, Examples) {
  EXPECT_EQ(unimodular_complete(1, 0), std::make_pair(Integer(0), Integer(1)));
  EXPECT_EQ(unimodular_complete(2, 3), std::make_pair(Integer(1), Integer(2)));
  EXPECT_EQ(unimodular_complete(5, 7), std::make_pair(Integer(2), Integer(3)));
}

TEST(Unimodular, DeterminantOneProperty) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> d(-1000, 1000);
  int checked = 0;
  while (checked < 1000) {
    Integer a = d(rng), b = d(rng);
    if (gcd(a, b) != 1) continue;
    auto [g, dd] = unimodular_complete(a, b);
    EXPECT_EQ(a * dd - b * g, 1) << a << " " << b;
    ++checked;
  }
}

TEST(Unimodular, RejectsNonCoprime) { EXPECT_THROW(unimodular_complete(4, 6), Error); }

TEST(NumberTheory, PrimesAndFactorization) {
  EXPECT_TRUE(is_prime(101));
  EXPECT_FALSE(is_prime(91));
  EXPECT_EQ(next_prime(100), 101);
  EXPECT_EQ(primes_in(18, 35), V({19, 23, 29, 31}));
  Integer n("600851475143");
  Integer prod = 1;
  for (auto [p, e] : factorize(n)) {
    EXPECT_TRUE(is_prime(p));
    for (unsigned i = 0; i < e; ++i) prod *= p;
  }
  EXPECT_EQ(prod, n);
  EXPECT_EQ(divisors(12), V({1, 2, 3, 4, 6, 12}));
}

TEST(NumberTheory, Valuation) {
  EXPECT_EQ(valuation(Integer(5) * 5 * 5 * 7, 5), 3u);
  EXPECT_EQ(valuation(7, 5), 0u);
  EXPECT_FALSE(valuation(0, 5).has_value());
}

TEST(NumberTheory, RootsAndDivision) {
  EXPECT_EQ(iroot_floor(Integer(1000), 3), 10);
  EXPECT_EQ(iroot_floor(Integer(999), 3), 9);
  EXPECT_EQ(exact_root(Integer(-27), 3), Integer(-3));
  EXPECT_FALSE(exact_root(Integer(26), 3).has_value());
  EXPECT_EQ(floor_div(-7, 2), -4);
  EXPECT_EQ(ceil_div(-7, 2), -3);
  EXPECT_EQ(mod_pos(-7, 5), 3);
  auto c = crt_pair(2, 3, 3, 5);
  ASSERT_TRUE(c);
  EXPECT_EQ(c->first, 8);
  EXPECT_EQ(c->second, 15);
  EXPECT_FALSE(crt_pair(0, 2, 1, 2).has_value());
  EXPECT_EQ(binomial(6, 3), 20);
}
