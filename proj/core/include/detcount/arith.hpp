#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace detcount {

using Integer = mpz_class;
using Rational = mpq_class;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A rational projective point stored as a primitive integer tuple whose
/// first nonzero coordinate is positive.
class ProjPoint {
 public:
  ProjPoint() = default;

  const std::vector<Integer>& coords() const { return coords_; }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }
  std::size_t size() const { return coords_.size(); }
  std::size_t dim_ambient() const { return coords_.size() - 1; }
  Integer height() const;

  std::string to_string() const;

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
    return a.coords_ == b.coords_;
  }
  friend bool operator<(const ProjPoint& a, const ProjPoint& b) {
    return a.coords_ < b.coords_;
  }

 private:
  friend ProjPoint normalize_primitive(std::vector<Integer> v);
  std::vector<Integer> coords_;
};

ProjPoint normalize_primitive(std::vector<Integer> v);
Integer height(const ProjPoint& x);

/// Returns (g, d) with a*d - b*g = 1.
std::pair<Integer, Integer> unimodular_complete(const Integer& a,
                                                const Integer& b);

/// Returns gcd(a, b) >= 0 and sets x, y with a*x + b*y = gcd.
Integer ext_gcd(const Integer& a, const Integer& b, Integer& x, Integer& y);

inline int cmpabs(const Integer& a, const Integer& b) {
  return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
}

Integer gcd_of(const std::vector<Integer>& v);
Integer max_abs(const std::vector<Integer>& v);

/// Divides by the gcd and flips the sign so the first nonzero entry is
/// positive. The zero vector is returned unchanged.
std::vector<Integer> primitive_vector(std::vector<Integer> v);

bool is_prime(const Integer& n);
Integer next_prime(const Integer& n);
std::vector<Integer> primes_in(const Integer& lo, const Integer& hi);

/// Prime factorisation of |n| (n != 0), ascending primes.
std::vector<std::pair<Integer, unsigned>> factorize(const Integer& n);
std::vector<Integer> divisors(const Integer& n);

/// v_p(n); nullopt when n == 0.
std::optional<unsigned long> valuation(const Integer& n, const Integer& p);

/// floor(|x|^(1/k)).
Integer iroot_floor(const Integer& x, unsigned long k);
/// Exact k-th root of x if one exists (negative x allowed for odd k).
std::optional<Integer> exact_root(const Integer& x, unsigned long k);

/// Floor and ceiling division for b != 0.
Integer floor_div(const Integer& a, const Integer& b);
Integer ceil_div(const Integer& a, const Integer& b);
/// Least nonnegative residue.
Integer mod_pos(const Integer& a, const Integer& m);

/// Solves x = r1 (mod m1), x = r2 (mod m2); returns (x mod lcm, lcm) or
/// nullopt when incompatible.
std::optional<std::pair<Integer, Integer>> crt_pair(const Integer& r1,
                                                    const Integer& m1,
                                                    const Integer& r2,
                                                    const Integer& m2);

/// Natural log of |x| for x != 0, valid far beyond double range.
double log_abs(const Integer& x);

Integer binomial(unsigned long n, unsigned long k);

std::string to_string(const std::vector<Integer>& v);

}  // namespace detcount
