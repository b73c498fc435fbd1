#include <gtest/gtest.h>

#include "detcount/geometry.hpp"
#include "detcount/irreducible.hpp"
#include "support.hpp"

using namespace detcount;
using testing_support::P;

namespace {

std::vector<Integer> V(std::initializer_list<long> xs) {
  std::vector<Integer> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

Matrix mul(const Matrix& a, const Matrix& b) {
  Matrix c(a.size(), std::vector<Integer>(b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

}  // namespace

TEST(ClassifyPoint, Examples) {
  EXPECT_EQ(classify_point(P("x0*x3 - x1*x2"), V({1, 0, 0, 0})), PointClass::InU);
  EXPECT_EQ(classify_point(P("x1^2 + x2^2 - x3^2"), V({1, 0, 0, 0})), PointClass::Singular);
  EXPECT_EQ(classify_point(P("x1*x2*x3 - x0^3"), V({0, 1, 1, 0})), PointClass::NotInU);
  EXPECT_THROW(classify_point(P("x0*x3 - x1*x2"), V({1, 1, 1, 0})), Error);
}

TEST(ClassifyPoint, TangentData) {
  auto t = tangent_data(P("x0*x3 - x1*x2"), V({1, 0, 0, 0}));
  EXPECT_EQ(t.gradient, V({0, 0, 0, 1}));
  // Every single spanning vector is isotropic here; only the polarized
  // test Q(y_i + y_j) sees that the point lies in U.
  for (const auto& q : t.twoQ) EXPECT_EQ(q, 0);
  EXPECT_EQ(classify_point(P("x0*x3 - x1*x2"), V({1, 0, 0, 0})), PointClass::InU);
}

TEST(ClassifyPoint, ModP) {
  auto F = P("x0^3 + x1^3 + x2^3 + x3^3");
  EXPECT_EQ(classify_point(F, V({1, 6, 0, 0}), Integer(7)),
            classify_point(F, V({1, -1, 0, 0})));
  EXPECT_EQ(classify_point(F, V({0, 0, 0, 0}), Integer(7)), PointClass::Singular);
}

TEST(PointsOfHeight, ScanOrder) {
  auto pts = points_of_height(4, 1);
  EXPECT_EQ(pts.front(), V({1, 0, 0, 0}));
  EXPECT_EQ(pts[3], V({0, 0, 0, 1}));
  EXPECT_EQ(pts.size(), 40u);  // (3^4 - 1) / 2
  for (const auto& p : points_of_height(3, 2)) {
    EXPECT_EQ(max_abs(p), 2);
    EXPECT_EQ(gcd_of(p), 1);
  }
}

TEST(FindUPoint, QuadricAndErrors) {
  auto x = find_U_point(P("x0*x3 - x1*x2"), 1);
  ASSERT_TRUE(x);
  EXPECT_EQ(x->coords(), V({1, 0, 0, 0}));
  EXPECT_THROW(find_U_point(P("x0 + x1"), 1), Error);
}

TEST(FindUPoint, FermatSignPatterns) {
  auto F = P("x0^3 + x1^3 + x2^3 + x3^3");
  for (auto v : {V({1, -1, 0, 0}), V({1, 0, -1, 0}), V({0, 1, 0, -1})}) {
    auto c = classify_point(F, v);
    EXPECT_NE(c, PointClass::Singular);
  }
  auto x = find_U_point(F, 2);
  if (x) {
    EXPECT_EQ(classify_point(F, x->coords()), PointClass::InU);
  }
}

TEST(IntegralSection, QuadricSkipsReducibleSections) {
  auto F = P("x0*x3 - x1*x2");
  auto s = find_integral_section(F, 2);
  ASSERT_TRUE(s.section);
  EXPECT_GT(s.reducible, 0u);
  const auto& sec = *s.section;
  EXPECT_EQ(is_absolutely_irreducible(sec.restricted).verdict, Verdict::Yes);
  EXPECT_EQ(sec.U.back(), sec.a);
  Matrix I = mul(sec.U, sec.U_inv);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(I[i][j], i == j ? 1 : 0);
  // Restricting to X3 = 0 gives -X1 X2, which is reducible.
  EXPECT_EQ(is_absolutely_irreducible(F.eliminate_var(3, 0)).verdict, Verdict::No);
}

TEST(IntegralSection, ReturnsImmediatelyWhenFirstSectionIsIntegral) {
  auto s = find_integral_section(P("x0^3 + x1^3 + x2^3 + x3^3"), 1);
  ASSERT_TRUE(s.section);
  EXPECT_EQ(s.tried, 1u);
  EXPECT_EQ(s.section->a, V({1, 0, 0, 0}));
  EXPECT_THROW(find_integral_section(P("x0 + x1 + x2"), 1), Error);
}

TEST(Unimodular, LastRowProperty) {
  for (auto a : {V({3, 5, 7}), V({0, 0, 1}), V({6, 10, 15, 0}), V({-4, 9})}) {
    auto [U, W] = unimodular_with_last_row(a);
    EXPECT_EQ(U.back(), a);
    Matrix I = mul(U, W);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < a.size(); ++j) EXPECT_EQ(I[i][j], i == j ? 1 : 0);
  }
  EXPECT_THROW(unimodular_with_last_row(V({2, 4})), Error);
}

TEST(Projection, CoordinateDeletion) {
  auto s = make_projection({V({0, 0, 0, 1})});
  EXPECT_EQ(s.g[0], V({0, 0, 0, 1}));
  EXPECT_EQ(s.c, 5);
  EXPECT_EQ(project_point(s, normalize_primitive(V({1, 2, 4, 8}))).coords(), V({1, 2, 4, 0}));
  auto fixed = normalize_primitive(V({3, 1, 2, 0}));
  EXPECT_EQ(project_point(s, fixed), fixed);
  EXPECT_THROW(project_point(s, normalize_primitive(V({0, 0, 0, 1}))), Error);
  EXPECT_THROW(make_projection({V({1, 0, 0}), V({2, 0, 0})}), Error);
}

TEST(Projection, ImageLiesInGamma) {
  auto s = make_projection({V({1, 1, 0, 0}), V({0, 1, 2, 1})});
  for (const auto& x : points_of_height(4, 2)) {
    if (in_center(s, x)) continue;
    auto y = project_point(s, normalize_primitive(x));
    for (const auto& g : s.g) EXPECT_EQ(dot(g, y.coords()), 0);
    EXPECT_LE(y.height(), s.c * 2);
  }
}

TEST(Birationality, TwistedCubicCoordinateDeletion) {
  std::vector<IntPoly> J{P("x0*x2 - x1^2", 4), P("x1*x3 - x2^2", 4), P("x0*x3 - x1*x2", 4)};
  auto pts = variety_points(J, 10);
  EXPECT_EQ(pts.size(), 8u);
  auto s = make_projection({V({0, 0, 0, 1})});
  auto r = sample_birationality_check(s, pts, 3);
  EXPECT_TRUE(r.ok);
  EXPECT_FALSE(r.collapsed);
  EXPECT_EQ(r.histogram.size(), 1u);
  EXPECT_EQ(r.histogram.begin()->first, 1u);
}

TEST(Birationality, ConicProjectedFromItsPlaneCollapses) {
  std::vector<IntPoly> C{P("x3", 4), P("x0*x2 - x1^2", 4)};
  auto pts = variety_points(C, 30);
  auto s = make_projection({V({1, 0, 1, 0})});
  auto r = sample_birationality_check(s, pts, 2);
  EXPECT_TRUE(r.collapsed);
  EXPECT_EQ(r.histogram.rbegin()->first, 2u);
}

TEST(Birationality, EmptyInputPasses) {
  auto r = sample_birationality_check(make_projection({V({0, 0, 0, 1})}), {}, 3);
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(r.points, 0u);
}

TEST(FindProjection, TwistedCubic) {
  std::vector<IntPoly> J{P("x0*x2 - x1^2", 4), P("x1*x3 - x2^2", 4), P("x0*x3 - x1*x2", 4)};
  auto s = find_projection(J, 1, 2);
  ASSERT_TRUE(s);
  ASSERT_EQ(s->h.size(), 1u);
  bool on = true;
  for (const auto& g : J) on &= g.eval(s->h[0]) == 0;
  EXPECT_FALSE(on);
}

TEST(Hyperplane, ContainingAndDrop) {
  std::vector<ProjPoint> pts{normalize_primitive(V({1, 0, 0, 1})), normalize_primitive(V({0, 1, 0, 0})),
                             normalize_primitive(V({0, 0, 1, 0}))};
  auto h = containing_hyperplane(pts, 4);
  ASSERT_TRUE(h);
  for (const auto& p : pts) EXPECT_EQ(dot(*h, p.coords()), 0);
  EXPECT_EQ(drop_coordinate(normalize_primitive(V({2, 4, 6, 1})), 3).coords(), V({1, 2, 3}));
}
