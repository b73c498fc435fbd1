#pragma once

#include <vector>

#include "detcount/poly.hpp"

namespace detcount {

struct GradedPieceBasis {
  int degree = 0;
  std::vector<IntPoly> generators;
  /// Degree-`degree` monomials independent modulo the ideal, listing order.
  std::vector<Exponents> monomials;
  std::size_t dimension() const { return monomials.size(); }
};

/// Basis of the degree-delta piece of k[X]/(ideal_gens + extra_gens).
GradedPieceBasis graded_piece_basis(const std::vector<IntPoly>& ideal_gens,
                                    const std::vector<IntPoly>& extra_gens,
                                    int delta);

/// Hilbert function value of the quotient at delta.
std::size_t hilbert_function(const std::vector<IntPoly>& gens, int delta);

/// True iff no nontrivial rational combination of `polys` (all homogeneous of
/// degree delta) lies in the ideal generated by `gens`.
bool independent_modulo(const std::vector<IntPoly>& gens,
                        const std::vector<IntPoly>& polys, int delta);

}  // namespace detcount
