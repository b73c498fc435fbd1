#pragma once

#include <vector>

#include "detcount/poly.hpp"

namespace detcount {

/// Dense univariate integer polynomial, coefficients from degree 0 upward,
/// no trailing zeros.
struct UniPoly {
  std::vector<Integer> c;

  UniPoly() = default;
  explicit UniPoly(std::vector<Integer> coeffs);

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  const Integer& lead() const { return c.back(); }
  Integer eval(const Integer& x) const;
  UniPoly derivative() const;
  void trim();
};

UniPoly to_univariate(const IntPoly& p);
IntPoly to_intpoly(const UniPoly& p);

/// Distinct integer roots of p in [lo, hi], ascending. p must be nonzero.
std::vector<Integer> integer_roots(const UniPoly& p, const Integer& lo,
                                   const Integer& hi);

/// Integers k such that every real root of p lies in some (k, k+1] with k
/// and k+1 both listed, ascending. p must be nonconstant.
std::vector<Integer> root_breakpoints(const UniPoly& p);

struct BoundedRootCount {
  Integer exact;
  double bound = 0;
};

/// #{t in Z : |p(t)| <= T} together with the certified bound
/// deg(p) * (3 + 2 (T/|a_deg|)^(1/deg)).
BoundedRootCount count_roots_bounded(const UniPoly& p, const Integer& T);

double root_count_bound(const UniPoly& p, const Integer& T);

}  // namespace detcount
