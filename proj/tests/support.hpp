#pragma once

#include <random>
#include <vector>

#include "detcount/arith.hpp"
#include "detcount/parse.hpp"
#include "detcount/poly.hpp"

namespace testing_support {

using detcount::Integer;
using detcount::IntPoly;

inline IntPoly P(const char* text, std::size_t n) { return detcount::parse_poly(text, n).poly; }
inline IntPoly P(const char* text) { return detcount::parse_poly(text).poly; }

/// Calls fn on every integer tuple of length n in [-B, B]^n.
template <class Fn>
void for_box(std::size_t n, long B, Fn&& fn) {
  std::vector<Integer> x(n, -B);
  for (;;) {
    fn(x);
    std::size_t i = n;
    while (i > 0 && x[i - 1] == B) x[--i] = -B;
    if (i == 0) return;
    ++x[i - 1];
  }
}

/// N(F;B) by direct evaluation over the whole box.
inline Integer brute_projective(const IntPoly& F, long B) {
  Integer n = 0;
  for_box(F.num_vars(), B, [&](const std::vector<Integer>& x) {
    if (detcount::gcd_of(x) == 1 && sgn(F.eval(x)) == 0) ++n;
  });
  return n;
}

/// M(f;B) by direct evaluation.
inline Integer brute_affine(const IntPoly& f, long B) {
  Integer n = 0;
  for_box(f.num_vars(), B, [&](const std::vector<Integer>& x) {
    if (sgn(f.eval(x)) == 0) ++n;
  });
  return n;
}

/// Random form of degree d in n variables with coefficients in [-c, c].
inline IntPoly random_form(std::mt19937_64& rng, std::size_t n, unsigned d, long c) {
  std::uniform_int_distribution<long> coef(-c, c);
  IntPoly F(n);
  for (const auto& e : detcount::monomials_of_degree(n, d)) F.add_term(e, coef(rng));
  return F;
}

}  // namespace testing_support
