#pragma once

#include <map>
#include <vector>

#include "detcount/arith.hpp"

namespace detcount {

using Matrix = std::vector<std::vector<Integer>>;

/// Bareiss fraction-free determinant of a square matrix.
Integer determinant(Matrix a);

/// Exact rank over the rationals.
std::size_t rank(Matrix a);

/// Rank over the prime field F_p.
std::size_t rank_mod_p(Matrix a, const Integer& p);

/// Basis of the rational right kernel {x : A x = 0}, each vector scaled to a
/// primitive integer vector with canonical sign. `cols` is needed when A has
/// no rows.
std::vector<std::vector<Integer>> nullspace(const Matrix& a, std::size_t cols);

/// Z-basis of the integer lattice {x in Z^cols : A x = 0}.
std::vector<std::vector<Integer>> lattice_kernel(const Matrix& a,
                                                 std::size_t cols);

Integer dot(const std::vector<Integer>& a, const std::vector<Integer>& b);

/// Incremental fraction-free row echelon over sparse integer rows. Column
/// indices are ordered; the pivot of a row is its smallest column index.
class SparseEchelon {
 public:
  using Row = std::map<std::size_t, Integer>;

  /// Reduces `r` against the stored rows; stores it if it is independent.
  /// Returns true when the rank grew.
  bool insert(Row r);
  /// Fully reduces `r` against stored pivots (the result is zero iff `r`
  /// lies in the span).
  Row reduce(Row r) const;

  std::size_t rank() const { return rows_.size(); }
  bool is_pivot(std::size_t col) const { return rows_.count(col) != 0; }

 private:
  std::map<std::size_t, Row> rows_;
};

}  // namespace detcount
