#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "detcount/poly.hpp"

namespace detcount {

enum class Verdict { Yes, No, Unknown };

std::string to_string(Verdict v);

struct IrreducibilityResult {
  Verdict verdict = Verdict::Unknown;
  /// Human-readable certificate ("degree 1", "quadric rank 4", ...).
  std::string certificate;
  /// A rational factor when one was found.
  std::optional<IntPoly> factor;
};

struct IrreducibilityOptions {
  int sections = 24;         // random plane sections tried
  int section_height = 2;    // coefficient bound for section maps
  int factor_height = 2;     // coefficient bound for trial linear factors
  std::uint64_t seed = 1;
};

/// Sound but incomplete test for irreducibility over the algebraic closure.
/// Non-homogeneous input is homogenized first.
IrreducibilityResult is_absolutely_irreducible(
    const IntPoly& F, const IrreducibilityOptions& opt = {});

/// Rank of the symmetric matrix of a quadratic form (entries 2*c_ii, c_ij).
std::size_t quadric_rank(const IntPoly& q);

/// Dimension of the span of all order-(d-1) partial derivatives of a form of
/// degree d, i.e. the number of variables it essentially depends on.
std::size_t essential_variables(const IntPoly& F);

/// True iff the plane curve G(u,v,w)=0 (a ternary form) is nonsingular.
bool is_nonsingular_plane_curve(const IntPoly& G);

}  // namespace detcount
