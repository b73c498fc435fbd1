#pragma once

#include <optional>
#include <string>
#include <vector>

#include "detcount/poly.hpp"
#include "detcount/roots.hpp"

namespace detcount {

/// Congruence x_i = residues[i-1] (mod p) on the affine coordinates x1..xn
/// of points [1, x1, ..., xn].
struct ResidueFilter {
  Integer p;
  std::vector<Integer> residues;
};

enum class Strategy {
  SolveLast,  // loop all but one variable, solve the residual exactly
  FullLoop,   // evaluate at every point of the box
};

struct EnumOptions {
  Strategy strategy = Strategy::SolveLast;
  bool collect_points = false;
  /// 0 means: DETCOUNT_THREADS if set, else hardware concurrency.
  unsigned threads = 0;
};

struct CountResult {
  Integer count = 0;
  /// Lexicographically sorted when collected.
  std::vector<std::vector<Integer>> points;
};

/// Number of worker threads after applying DETCOUNT_THREADS.
unsigned resolve_threads(unsigned requested);

/// N(F;B): primitive integer zeros of the form F with sup-norm <= B,
/// x and -x counted separately.
CountResult count_projective(const IntPoly& F, const Integer& B,
                             const EnumOptions& opt = {});

/// M(f;B): integer zeros of f in the box |t| <= B.
CountResult count_affine(const IntPoly& f, const Integer& B,
                         const EnumOptions& opt = {});

/// Points [1,x1,x2,x3] with |x_i| <= B on the surface F = 0 satisfying every
/// residue filter. Points are returned as 4-tuples starting with 1.
CountResult count_affine_surface(const IntPoly& F, const Integer& B,
                                 const std::vector<ResidueFilter>& filters = {},
                                 const EnumOptions& opt = {});

struct SlicingCheck {
  Integer lhs;  // N(F;B)
  Integer rhs;  // sum over |b| <= B of M(f_b;B)
  bool holds() const { return lhs <= rhs; }
};

SlicingCheck verify_slicing(const IntPoly& F, const Integer& B,
                            const EnumOptions& opt = {});

/// The variable the solve-last strategy solves for: smallest positive
/// degree, ties to the highest index. nullopt for constants.
std::optional<std::size_t> solve_variable(const IntPoly& f);

struct CountSeries {
  std::string tag;
  std::vector<std::pair<Integer, Integer>> entries;  // (B, count)
};

}  // namespace detcount
