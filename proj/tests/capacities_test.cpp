#include <gtest/gtest.h>

#include "toric/capacities.hpp"

using namespace toric;

TEST(ExampleFamily, Construction) {
  Polygon2D w = omega_a(Rational(3, 10));
  std::vector<Point2> want{{Rational(2, 5), 0}, {Rational(7, 10), Rational(3, 10)}, {Rational(3, 10), Rational(7, 10)},
                           {0, Rational(2, 5)}};
  EXPECT_EQ(w.vertices(), want);
  EXPECT_THROW(omega_a(0), InputError);
  EXPECT_THROW(omega_a(Rational(1, 2)), InputError);
}

TEST(Report, ExampleFamilyValues) {
  for (auto a : {Rational(1, 8), Rational(1, 4), Rational(3, 10), Rational(9, 20)}) {
    auto v = verify_xa(a);
    EXPECT_TRUE(v.pass) << to_string(a);
    EXPECT_EQ(v.got.c_P.lower, std::min(Rational(1 - 2 * a), Rational(1, 2)));
  }
}

TEST(Report, NducCubeCapacityIsSize) {
  auto r = capacity_report(StandardDomain::make(StandardKind::Nduc, 2, Rational(7, 3)));
  EXPECT_TRUE(r.c_P.exact);
  EXPECT_EQ(r.c_P.lower, Rational(7, 3));
  EXPECT_EQ(r.c_N.lower, Rational(7, 3));
}

TEST(Report, IntervalsAreOrdered) {
  ToricDomain p = Polygon2D::from_vertices({{1, 0}, {3, 2}, {0, 1}});
  auto r = capacity_report(p);
  EXPECT_LE(r.c_P.lower, r.c_P.upper);
  EXPECT_LE(r.c_N.lower, r.c_N.upper);
  EXPECT_FALSE(r.c_L.value.has_value());
  EXPECT_FALSE(r.notes.empty());
}

TEST(Report, JsonRoundTrip) {
  for (ToricDomain d : {ToricDomain(omega_a(Rational(1, 3))), ToricDomain(StandardDomain::make(StandardKind::Ball, 2, 1)),
                        ToricDomain(Rectilinear2D::from_rects({{0, 1, 0, Rational(1, 2)}, {0, Rational(1, 2), 0, 1}})),
                        ToricDomain(Polygon2D::from_vertices({{1, 0}, {3, 2}, {0, 1}}))}) {
    auto r = capacity_report(d);
    auto back = report_from_json(report_to_json(r));
    EXPECT_EQ(report_to_json(back).dump(), report_to_json(r).dump());
  }
}

TEST(Report, CsvRoundTrip) {
  auto r = capacity_report(omega_a(Rational(3, 10)));
  std::string line = csv_row(Rational(3, 10), r);
  EXPECT_EQ(line, "3/10,1/2,1/2,1/2,2/5,2/5,1/2,1/2,false");
  auto row = parse_csv_row(line);
  EXPECT_EQ(row.a, Rational(3, 10));
  EXPECT_EQ(row.cP_lo, Rational(2, 5));
  EXPECT_EQ(csv_row(std::nullopt, r).substr(0, 1), ",");
  EXPECT_EQ(parse_csv_row(csv_row(std::nullopt, r)).a, std::nullopt);
  EXPECT_THROW(parse_csv_row("1,2,3"), InputError);
}

TEST(ExampleFamily, QuarterChain) {
  std::vector<Point2> want{{Rational(1, 2), 0}, {Rational(3, 4), Rational(1, 4)}, {Rational(1, 4), Rational(3, 4)},
                           {0, Rational(1, 2)}};
  EXPECT_EQ(omega_a(Rational(1, 4)).vertices(), want);
  EXPECT_FALSE(is_monotone(ToricDomain(omega_a(Rational(1, 5)))));
}

TEST(Report, UnitCubeCollapses) {
  for (ToricDomain d : {ToricDomain(StandardDomain::make(StandardKind::Cube, 2, 1)),
                        ToricDomain(Polygon2D::from_vertices({{1, 0}, {1, 1}, {0, 1}}))}) {
    auto r = capacity_report(d);
    EXPECT_EQ(r.delta, 1);
    EXPECT_EQ(r.eta, 1);
    EXPECT_EQ(*r.c_L.value, 1);
    EXPECT_TRUE(r.c_P.exact && r.c_P.lower == 1);
    EXPECT_TRUE(r.c_N.exact && r.c_N.lower == 1);
  }
}

TEST(Report, ThreeTenthsSeparatesCubeAndNduc) {
  auto r = capacity_report(omega_a(Rational(3, 10)));
  EXPECT_EQ(r.c_P, (Interval{Rational(2, 5), Rational(2, 5), true}));
  EXPECT_EQ(r.c_N, (Interval{Rational(1, 2), Rational(1, 2), true}));
  EXPECT_EQ(r.c_L.rule, CLRule::EtaOnBoundary);
  EXPECT_EQ(*r.c_L.witness, (std::vector<Rational>{Rational(1, 2), Rational(1, 2)}));
}

TEST(Normalized, StandardValues) {
  EXPECT_EQ(cube_normalized_value(StandardDomain::make(StandardKind::Cube, 4, 1)), 1);
  EXPECT_EQ(cube_normalized_value(StandardDomain::make(StandardKind::Ball, 4, 1)), Rational(1, 4));
  EXPECT_EQ(cube_normalized_value(StandardDomain::make(StandardKind::Cylinder, 3, 1)), 1);
}
