#include <gtest/gtest.h>

#include "toric/capacities.hpp"
#include "toric/ech/relation.hpp"

using namespace toric;
using namespace toric::ech;

namespace {
Polygon2D square(Rational a) { return Polygon2D::from_vertices({{a, 0}, {a, a}, {0, a}}); }
Polygon2D simplex(Rational a) { return Polygon2D::from_vertices({{a, 0}, {0, a}}); }
}  // namespace

TEST(Action, SumsSupportValues) {
  Polygon2D w = omega_a(Rational(3, 10));
  EXPECT_EQ(action(w, parse_orbit_set("e(1,-1)")), Rational(2, 5));
  EXPECT_EQ(action(w, parse_orbit_set("e(1,-1) * e(-1,1) * e(1,1)^2")), Rational(14, 5));
  EXPECT_EQ(action(square(1), parse_orbit_set("e(1,1)")), 2);
}

TEST(Leq, Examples) {
  Polygon2D w = omega_a(Rational(3, 10));
  auto r = leq_relation(w, w, parse_orbit_set("e(1,1)"), parse_orbit_set("e(1,1)"));
  EXPECT_TRUE(r.holds);
  auto sq = leq_relation(w, w, parse_orbit_set("e(1,1)^2"), parse_orbit_set("e(1,1)^2"));
  EXPECT_FALSE(sq.holds);
  EXPECT_EQ(sq.failed, 3);
  auto idx = leq_relation(w, w, parse_orbit_set("h(1,1)"), parse_orbit_set("e(1,1)"));
  EXPECT_EQ(idx.failed, 1);
  auto act = leq_relation(square(1), w, parse_orbit_set("e(1,1)"), parse_orbit_set("e(1,1)"));
  EXPECT_EQ(act.failed, 2);
}

TEST(Leq, HalfIntegerGap) {
  // x + y - h/2 = 1 - 1/2 against x'+y'+m'-1 = 1: fails only through the h/2 term
  OrbitInvariants a{1, 0, 1, 1, 1};
  OrbitInvariants b{1, 0, 1, 1, 0};
  EXPECT_FALSE(index_gap_condition(a, b));
  EXPECT_TRUE(index_gap_condition(OrbitInvariants{2, 0, 1, 1, 1}, b));
}

TEST(CubeBound, Examples) {
  EXPECT_EQ(cube_bound(omega_a(Rational(3, 10))), Rational(2, 5));
  EXPECT_EQ(cube_bound(square(1)), 1);
  EXPECT_EQ(cube_bound(simplex(1)), 1);
}

TEST(CubeBound, SlopeHypothesis) {
  // last edge (-1,-2) drops faster than it moves left
  Polygon2D steep = Polygon2D::from_vertices({{2, 0}, {2, 1}, {1, 3}, {0, 1}});
  EXPECT_FALSE(cube_bound_applies(steep));
  EXPECT_THROW(cube_bound(steep), InapplicableError);
  EXPECT_THROW(finite_d_bound(steep, 3), InapplicableError);
  Polygon2D flat_start = Polygon2D::from_vertices({{1, 0}, {2, Rational(1, 2)}, {0, 1}});
  EXPECT_FALSE(cube_bound_applies(flat_start));
}

TEST(FiniteD, ExampleValues) {
  Polygon2D w = omega_a(Rational(3, 10));
  EXPECT_EQ(finite_d_bound(w, 3), Rational(4, 5));
  EXPECT_EQ(finite_d_bound(w, 30), Rational(8, 19));
  EXPECT_THROW(finite_d_bound(w, 0), InputError);
}
