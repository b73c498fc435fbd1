#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "detcount/arith.hpp"
#include "detcount/poly.hpp"
#include "detcount/roots.hpp"

namespace detcount {

using Point3 = std::array<Integer, 3>;

/// Affine points (1, base + n*step) of a line.
struct LineParam {
  Point3 base;
  Point3 step;
};

struct LineResult {
  /// Present whenever the line has affine integral points at all.
  std::optional<LineParam> param;
  bool at_most_one = false;
  /// Affine points [1,x1,x2,x3] of height <= B, lexicographic order.
  std::vector<Point3> points;
  Integer count = 0;
  /// count <= constant * (1 + B/|step|).
  int constant = 2;
};

LineResult line_points(const ProjPoint& p1, const ProjPoint& p2,
                       const Integer& B);

/// Plane a0*X0 = a1*X1 + a2*X2 + a3*X3 through three affine points, or
/// nullopt when they are collinear.
std::optional<std::array<Integer, 4>> plane_through(const Point3& x,
                                                    const Point3& y,
                                                    const Point3& z);

struct PlaneConicData {
  std::array<Integer, 4> plane;  // a0*X0 = a1*X1 + a2*X2 + a3*X3
  std::size_t eliminated = 3;    // 1, 2 or 3
  /// Ternary form in (X0, X_j, X_k) with j < k the kept indices.
  IntPoly q;
  bool nonsingular = false;

  std::array<std::size_t, 2> kept() const;
};

PlaneConicData plane_eliminate(const std::array<Integer, 4>& plane,
                               const IntPoly& Q);

/// Rank of the Gram matrix of q(0, X1, X2).
std::size_t tangency_rank(const IntPoly& q);

/// Integer-valued quadratic in t stored as 2R(t) (univariate).
struct ConicClass {
  Integer lambda;
  Integer D_lambda;
  Integer Z_lambda;
  std::array<IntPoly, 3> twoR;  // coordinates x1, x2, x3
};

struct ConicParam {
  Integer alpha, beta, gamma, delta;
  Integer a, e, f, dhat;  // q' = a Y1^2 + e Y0 Y1 + f Y0 Y2 + dhat Y0^2
  IntPoly qprime;
  Integer Ystar;
  Integer D;
  std::vector<ConicClass> classes;
  /// log D / log B (0 when D == 1).
  double kappa = 0;
};

struct EmptyParam {
  std::string reason;
};

std::variant<ConicParam, EmptyParam> conic_parameterize(
    const PlaneConicData& data, const Integer& B);

/// Exact number of t with |R_i(t)| <= B for all i, and the certified bound
/// from the dominant quadratic.
struct ClassCount {
  Integer exact;
  double bound = 0;
};

ClassCount count_class_points(const std::array<IntPoly, 3>& twoR,
                              const Integer& B);

/// The points (R_1(t), R_2(t), R_3(t)) of height <= B, ordered by t.
std::vector<Point3> class_points(const std::array<IntPoly, 3>& twoR,
                                 const Integer& B);

/// Union over classes, deduplicated, lexicographic.
std::vector<Point3> conic_points(const ConicParam& param, const Integer& B);

/// Direct enumeration of affine points of height <= B on the conic
/// {plane} cap {Q = 0}: loops over one kept coordinate and solves for the
/// other.
std::vector<Point3> conic_points_brute(const std::array<Integer, 4>& plane,
                                       const IntPoly& Q, const Integer& B);

}  // namespace detcount
