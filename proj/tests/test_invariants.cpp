#include <doctest.h>

#include "orbitspace/invariants.hpp"
#include "test_helpers.hpp"

using namespace orbitspace;
using orbitspace::testing::RandomLegalData;
using orbitspace::testing::circle_config;
using orbitspace::testing::two_points;

namespace {

// Independent recount straight off the component lists.
int recount_chi(const OrbitSpaceData& o) {
  int chi = 0;
  for (std::size_t i = 0; i < o.boundary_spheres.size(); ++i) chi += 2;
  chi += static_cast<int>(o.points.size());
  for (const auto& a : o.arcs) chi += static_cast<int>(a.pairs.size()) + 1;
  for (const auto& c : o.circles) chi += static_cast<int>(c.segments.size());
  return chi;
}

OrbitSpaceData sphere_plus_point() {
  OrbitSpaceData o;
  o.boundary_spheres = {{-1}};
  o.points = {{+1}};
  return o;
}

}  // namespace

TEST_SUITE("invariants") {

TEST_CASE("euler characteristic of the fixed set") {
  CHECK(euler_char_fixed_set(two_points()) == 2);
  CHECK(euler_char_fixed_set(sphere_plus_point()) == 3);
  CHECK(euler_char_fixed_set(circle_config({2, 5, 3})) == 3);

  OrbitSpaceData arc_point;
  WeightedArc arc;
  arc.b_start = 0;
  arc.b_end = 1;
  arc.pairs = {{2, std::nullopt}};
  arc_point.arcs.push_back(arc);
  arc_point.points = {{-1}};
  CHECK(euler_char_fixed_set(arc_point) == 3);
}

TEST_CASE("profiles") {
  OrbitSpaceData sphere;
  sphere.boundary_spheres = {{0}};
  CHECK(fixed_set_profile(sphere).tag == FixedSetTag::OneSphere);
  CHECK(fixed_set_profile(sphere_plus_point()).tag == FixedSetTag::SpherePlusPoint);
  CHECK(fixed_set_profile(two_points()).tag == FixedSetTag::TwoPoints);
  CHECK(fixed_set_profile(circle_config({2, 5, 3})).tag == FixedSetTag::ThreePoints);

  OrbitSpaceData two_circles = circle_config({2, 3});
  two_circles.circles.push_back(two_circles.circles[0]);
  CHECK(fixed_set_profile(two_circles).tag == FixedSetTag::Other);
  CHECK(fixed_set_profile(two_circles).num_points == 4);
}

TEST_CASE("second betti number") {
  CHECK(second_betti(two_points()) == 0);
  CHECK(second_betti(sphere_plus_point()) == 1);
  CHECK(second_betti(circle_config({2, 5, 3})) == 1);
}

TEST_CASE("admissibility") {
  CHECK(admissible_positively_curved(two_points()));
  CHECK(admissible_positively_curved(sphere_plus_point()));
  CHECK(admissible_positively_curved(circle_config({2, 3})));

  OrbitSpaceData chi4 = circle_config({2, 3, 5, 7});
  CHECK_FALSE(admissible_positively_curved(chi4));

  OrbitSpaceData two_spheres;
  two_spheres.boundary_spheres = {{1}, {-1}};
  CHECK_FALSE(admissible_positively_curved(two_spheres));
}

TEST_CASE("operations demand legal data") {
  OrbitSpaceData bad;
  bad.points = {{+1}};
  CHECK_THROWS_AS(euler_char_fixed_set(bad), IllegalDataError);
  CHECK_THROWS_AS(fixed_set_profile(bad), IllegalDataError);
  CHECK_THROWS_AS(second_betti(bad), IllegalDataError);
}

TEST_CASE("profile counting agrees with a brute recount") {
  RandomLegalData gen(77);
  for (int i = 0; i < 500; ++i) {
    const OrbitSpaceData o = gen.next();
    CHECK(euler_char_fixed_set(o) == recount_chi(o));
    const auto profile = fixed_set_profile(o);
    CHECK(profile.num_spheres == static_cast<int>(o.boundary_spheres.size()));
    CHECK(profile.num_points + 2 * profile.num_spheres == recount_chi(o));
    const bool admissible_by_counts =
        (profile.num_spheres == 1 && profile.num_points <= 1) ||
        (profile.num_spheres == 0 &&
         (profile.num_points == 2 || profile.num_points == 3));
    CHECK(admissible_positively_curved(o) == admissible_by_counts);
  }
}

}  // TEST_SUITE
