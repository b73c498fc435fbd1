#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "detcount/arith.hpp"
#include "detcount/linalg.hpp"
#include "detcount/poly.hpp"

namespace detcount {

enum class PointClass { Singular, InU, NotInU };

std::string to_string(PointClass c);

struct TangentData {
  std::vector<Integer> gradient;            // g = grad F(x)
  Matrix hessian;                           // M(x)
  std::array<std::vector<Integer>, 6> y;    // spanning vectors of the tangent plane
  std::array<Integer, 6> twoQ;              // y_i^T M y_i
};

/// Gradient, Hessian and tangent-plane data of a quaternary form at x.
TangentData tangent_data(const IntPoly& F, const std::vector<Integer>& x);

/// Classifies x on F = 0. With a modulus p the computation runs over F_p.
/// InU means nonsingular with multiplicity <= 2 on the tangent section; the
/// quadratic part is tested on the six spanning vectors and their pairwise
/// sums, which detects any nonzero quadratic form on the plane.
PointClass classify_point(const IntPoly& F, const std::vector<Integer>& x,
                          const std::optional<Integer>& p = std::nullopt);

/// Primitive canonical points of P^n with height exactly h, in scan order:
/// fewer nonzero coordinates first, then lexicographically descending.
std::vector<std::vector<Integer>> points_of_height(std::size_t n_plus_1,
                                                   unsigned long h);

/// First point of height <= cap (scan order) classified InU, or nullopt.
std::optional<ProjPoint> find_U_point(const IntPoly& F, unsigned long cap);

struct IntegralSection {
  std::vector<Integer> a;  // hyperplane a.x = 0
  Matrix U;                // unimodular, last row a: y = U x
  Matrix U_inv;
  IntPoly restricted;      // F(U^{-1} y) with y_n = 0, in n variables
  std::string certificate;
};

struct SectionSearch {
  std::optional<IntegralSection> section;
  std::size_t tried = 0;
  std::size_t reducible = 0;
  std::size_t unknown = 0;
};

/// Scans primitive a of height <= cap for a hyperplane section that is
/// certified geometrically integral.
SectionSearch find_integral_section(const IntPoly& F, unsigned long cap);

/// Unimodular integer matrix whose last row is the primitive vector a,
/// together with its inverse.
std::pair<Matrix, Matrix> unimodular_with_last_row(const std::vector<Integer>& a);

struct ProjectionSetup {
  std::size_t N = 0;                          // ambient P^N
  std::vector<std::vector<Integer>> h;        // centre spanning points
  std::vector<std::vector<Integer>> g;        // Gamma: g_i . x = 0
  Integer lambda;                             // prod g_i . h_i
  std::vector<Integer> lambda_j;              // prod over i != j
  Integer c;                                  // height inflation constant
};

/// Builds dual vectors g_i with g_i.h_j = 0 (i != j), g_i.h_i != 0 by exact
/// nullspace computations and evaluates c.
ProjectionSetup make_projection(const std::vector<std::vector<Integer>>& h);

/// Projection from Lambda onto Gamma; throws for points of Lambda.
ProjPoint project_point(const ProjectionSetup& s, const ProjPoint& x);

/// True iff x lies in the span of the centre points.
bool in_center(const ProjectionSetup& s, const std::vector<Integer>& x);

/// Centre of dimension N-m-1 avoiding the variety: spanning points of height
/// <= cap, independent and off the variety, in scan order.
std::optional<ProjectionSetup> find_projection(
    const std::vector<IntPoly>& generators, std::size_t m, unsigned long cap);

struct BirationalityReport {
  bool ok = true;                  // every fibre has <= d points
  bool collapsed = false;          // most points sit in non-singleton fibres
  std::size_t points = 0;
  std::size_t skipped_center = 0;  // sample points lying in the centre
  std::map<std::size_t, std::size_t> histogram;  // fibre size -> #fibres
  std::optional<ProjPoint> bad_fibre;
  Integer max_ratio_num = 0;       // max H(image)/H(x) as a fraction
  Integer max_ratio_den = 1;
  bool height_ok = true;           // H(image) <= c H(x) everywhere
};

BirationalityReport sample_birationality_check(
    const ProjectionSetup& s, const std::vector<ProjPoint>& points,
    std::size_t degree);

/// Projective points of height <= B on the variety cut out by `generators`
/// (canonical representatives, lexicographic).
std::vector<ProjPoint> variety_points(const std::vector<IntPoly>& generators,
                                      const Integer& B);

/// Hyperplane containing every sample point, if the sample is degenerate.
std::optional<std::vector<Integer>> containing_hyperplane(
    const std::vector<ProjPoint>& points, std::size_t n_plus_1);

/// Drops coordinate `i`; injective on a hyperplane a.x = 0 with a_i != 0.
ProjPoint drop_coordinate(const ProjPoint& x, std::size_t i);

}  // namespace detcount
