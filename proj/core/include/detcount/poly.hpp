#pragma once

#include <map>
#include <string>
#include <vector>

#include "detcount/arith.hpp"

namespace detcount {

using Exponents = std::vector<unsigned>;

unsigned total_degree(const Exponents& e);

/// Graded order: lower total degree first, ties broken lexicographically on
/// the exponent tuple.
struct GradedLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// How variables print: x0..xN (projective) or t1..tN (affine, t1 is index 0).
enum class VarStyle { X, T };

std::string var_name(std::size_t i, VarStyle style);

class IntPoly {
 public:
  using Terms = std::map<Exponents, Integer, GradedLess>;

  IntPoly() = default;
  explicit IntPoly(std::size_t num_vars) : nvars_(num_vars) {}

  static IntPoly constant(std::size_t num_vars, const Integer& c);
  static IntPoly variable(std::size_t num_vars, std::size_t i);
  static IntPoly monomial(Exponents e, const Integer& c = 1);

  std::size_t num_vars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const;
  int degree_in(std::size_t var) const;
  bool is_homogeneous() const;
  bool is_constant() const;
  Integer coeff(const Exponents& e) const;

  void add_term(const Exponents& e, const Integer& c);

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const Integer& c);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const Integer& c) { return a *= c; }
  friend IntPoly operator*(const Integer& c, IntPoly a) { return a *= c; }
  IntPoly operator-() const;
  IntPoly pow(unsigned k) const;

  friend bool operator==(const IntPoly& a, const IntPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  Integer eval(const std::vector<Integer>& x) const;
  Rational eval(const std::vector<Rational>& x) const;
  /// Value modulo m, in [0, m).
  Integer eval_mod(const std::vector<Integer>& x, const Integer& m) const;

  /// Sets variable `var` to `value`; the variable stays in the ring.
  IntPoly substitute(std::size_t var, const Integer& value) const;
  /// Sets variable `var` to `value` and removes it from the ring.
  IntPoly eliminate_var(std::size_t var, const Integer& value) const;
  /// Replaces variable i by images[i]; all images share one ring.
  IntPoly compose(const std::vector<IntPoly>& images) const;
  IntPoly derivative(std::size_t var) const;
  /// Embeds into a ring with more variables (new ones appended at the end,
  /// or at the front when `shift` is given).
  IntPoly extend(std::size_t num_vars, std::size_t shift = 0) const;

  Integer content() const;
  /// Divides out the content and makes the graded-largest coefficient
  /// positive.
  IntPoly primitive_part() const;
  Integer coeff_height() const;

  std::string to_string(VarStyle style = VarStyle::X) const;

 private:
  std::size_t nvars_ = 0;
  Terms terms_;
};

IntPoly homogenize(const IntPoly& f, int delta);
/// Sets X0 = 1 and drops it.
IntPoly dehomogenize(const IntPoly& F);
IntPoly leading_form(const IntPoly& g);
Integer coeff_height(const IntPoly& g);
/// F(b, T1, ..., Tn).
IntPoly slice(const IntPoly& F, const Integer& b);

/// True iff f divides g in Q[x].
bool divides(const IntPoly& f, const IntPoly& g);

/// Polynomial with coefficients reduced into [0, p).
class FpPoly {
 public:
  FpPoly(std::size_t num_vars, Integer p) : nvars_(num_vars), p_(std::move(p)) {}

  std::size_t num_vars() const { return nvars_; }
  const Integer& modulus() const { return p_; }
  const IntPoly::Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;
  void add_term(const Exponents& e, const Integer& c);
  Integer eval(const std::vector<Integer>& x) const;
  IntPoly lift() const;
  std::string to_string(VarStyle style = VarStyle::X) const;

  friend bool operator==(const FpPoly& a, const FpPoly& b) {
    return a.nvars_ == b.nvars_ && a.p_ == b.p_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t nvars_;
  Integer p_;
  IntPoly::Terms terms_;
};

FpPoly reduce_mod_p(const IntPoly& F, const Integer& p);
FpPoly reduce_mod_p(const FpPoly& F, const Integer& p);

/// All exponent tuples of total degree `deg` in `n` variables, in the listing
/// order (descending lexicographic within the degree).
std::vector<Exponents> monomials_of_degree(std::size_t n, unsigned deg);

}  // namespace detcount
