#include <gtest/gtest.h>

#include "toric/ech/orbit.hpp"

using namespace toric;
using namespace toric::ech;

TEST(Orbit, ValidatesVectors) {
  EXPECT_NO_THROW(CombOrbit::make(1, -1, true));
  EXPECT_NO_THROW(CombOrbit::make(-3, 2, false));
  EXPECT_THROW(CombOrbit::make(2, 2, true), InputError);
  EXPECT_THROW(CombOrbit::make(0, 0, true), InputError);
  EXPECT_THROW(CombOrbit::make(-1, -1, true), InputError);
}

TEST(Orbit, SetValidation) {
  auto e11 = CombOrbit::make(1, 1, true);
  auto h10 = CombOrbit::make(1, 0, false);
  EXPECT_THROW(CombOrbitSet::from_factors({{e11, 1}, {e11, 2}}), InputError);
  EXPECT_THROW(CombOrbitSet::from_factors({{h10, 2}}), InputError);
  EXPECT_THROW(CombOrbitSet::from_factors({{e11, 0}}), InputError);
}

TEST(Orbit, InvariantsOfSingleOrbits) {
  EXPECT_EQ(orbit_invariants(parse_orbit_set("e(1,1)")), (OrbitInvariants{1, 1, 4, 1, 0}));
  EXPECT_EQ(orbit_invariants(parse_orbit_set("h(1,0)")), (OrbitInvariants{1, 0, 1, 1, 1}));
  EXPECT_EQ(orbit_invariants(parse_orbit_set("h(1,1)")).index, 3);
}

TEST(Orbit, InvariantsOfComposite) {
  auto a = parse_orbit_set("e(1,-1) * e(-1,1) * e(1,1)^2");
  EXPECT_EQ(orbit_invariants(a), (OrbitInvariants{2, 2, 20, 4, 0}));
  auto big = parse_orbit_set("e(1,-1)^30 * e(-1,1)^30 * e(1,1)^2");
  EXPECT_EQ(orbit_invariants(big).index, 310);
}

TEST(Orbit, ParseAndPrintRoundTrip) {
  for (const char* s : {"1", "e(1,1)", "e(-1,1)^3 * e(1,-1)^3 * e(1,1)^2", "e(0,1) * h(2,-1)"}) {
    auto a = parse_orbit_set(s);
    EXPECT_EQ(parse_orbit_set(to_string(a)), a) << s;
  }
  EXPECT_EQ(to_string(parse_orbit_set("e(1,1)^2*e(1,-1)")), "e(1,-1) * e(1,1)^2");
}

TEST(Orbit, ParseRejects) {
  for (const char* s : {"", "e(1,1", "e(1,1)^0", "x(1,1)", "e(2,2)", "h(1,0)^2", "e(1,1) *", "e(1,1) e(1,0)",
                        "e(1,1) * e(1,1)", "e(99999999999,1)"})
    EXPECT_THROW(parse_orbit_set(s), InputError) << s;
}

TEST(Orbit, ProductMergesMultiplicities) {
  auto a = parse_orbit_set("e(1,1) * h(1,0)");
  auto b = parse_orbit_set("e(1,1)^2");
  EXPECT_EQ(product(a, b), parse_orbit_set("e(1,1)^3 * h(1,0)"));
  EXPECT_THROW(product(a, parse_orbit_set("h(1,0)")), InputError);
  EXPECT_TRUE(shares_elliptic_orbit(a, b));
  EXPECT_FALSE(shares_elliptic_orbit(parse_orbit_set("h(1,0)"), a));
}
