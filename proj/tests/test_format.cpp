#include <doctest.h>

#include "orbitspace/classifier.hpp"
#include "orbitspace/format.hpp"
#include "orbitspace/torus.hpp"
#include "test_helpers.hpp"

using namespace orbitspace;
using orbitspace::testing::RandomLegalData;
using orbitspace::testing::two_points;

TEST_SUITE("format") {

TEST_CASE("parse golden cases") {
  const OrbitSpaceData pts = parse_orbit_file(
      "orbitspace v1\npoint index=+1\npoint index=-1\n");
  CHECK(pts == two_points());

  const OrbitSpaceData circle = parse_orbit_file(
      "orbitspace v1\ncircle segments=2,5,3 unknotted=true\n");
  REQUIRE(circle.circles.size() == 1);
  CHECK(circle.circles[0].segments.size() == 3);
  CHECK(circle.circles[0].segments[1].alpha == 5);
  CHECK(circle.circles[0].unknotted);

  const OrbitSpaceData cp2 = parse_orbit_file(
      "orbitspace v1\narc b1=0 b2=1 pairs=(2:1)\npoint index=-1\n");
  CHECK(canonicalize(cp2).arcs.size() == 1);
  // Equals the linear CP^2 data with weights (1, 2), up to the optional beta.
  OrbitSpaceData linear = linear_cp2_orbit_data(1, 2);
  linear = canonicalize(linear);
  OrbitSpaceData parsed = canonicalize(cp2);
  parsed.arcs[0].pairs[0].beta.reset();
  CHECK(parsed == linear);
}

TEST_CASE("comments, blank lines and order insensitivity") {
  const OrbitSpaceData o = parse_orbit_file(
      "# header comment\n"
      "orbitspace v1\n"
      "\n"
      "circle segments=2,3 unknotted=false  # trailing comment\n"
      "point index=-1\n"
      "point index=+1\n");
  CHECK(o.circles.size() == 1);
  CHECK_FALSE(o.circles[0].unknotted);
  CHECK(o.points.size() == 2);
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_orbit_file(""), ParseError);
  CHECK_THROWS_AS(parse_orbit_file("orbitspace v2\n"), ParseError);
  CHECK_THROWS_AS(parse_orbit_file("orbitspace v1\nblob x=1\n"), ParseError);
  CHECK_THROWS_AS(parse_orbit_file("orbitspace v1\npoint index=1\n"), ParseError);
  CHECK_THROWS_AS(parse_orbit_file("orbitspace v1\nsphere e=\n"), ParseError);
  CHECK_THROWS_AS(parse_orbit_file("orbitspace v1\narc b1=0 b2=0 pairs=\n"),
                  ParseError);
  CHECK_THROWS_AS(
      parse_orbit_file("orbitspace v1\ncircle segments=2,3 unknotted=maybe\n"),
      ParseError);
  CHECK_THROWS_AS(
      parse_orbit_file("orbitspace v1\npoint index=+1 extra\n"), ParseError);

  try {
    parse_orbit_file("orbitspace v1\npoint index=+1\nwhat is this\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
    CHECK(e.column >= 1);
  }
}

TEST_CASE("semantic issues are deferred to validate") {
  const OrbitSpaceData o =
      parse_orbit_file("orbitspace v1\npoint index=+1\n");
  CHECK_FALSE(validate(o).legal);  // zero-sum fails, parse succeeded
}

TEST_CASE("serialization is canonical and deterministic") {
  OrbitSpaceData o;
  o.points = {{-1}, {+1}};
  const std::string text = serialize_orbit_file(o);
  CHECK(text == "orbitspace v1\npoint index=+1\npoint index=-1\n");
  CHECK(serialize_orbit_file(o) == text);

  OrbitSpaceData bad;
  bad.points = {{+1}};
  CHECK_THROWS_AS(serialize_orbit_file(bad), IllegalDataError);
}

TEST_CASE("round trips over random legal data") {
  RandomLegalData gen(97);
  for (int i = 0; i < 1000; ++i) {
    const OrbitSpaceData o = gen.next();
    const std::string text = serialize_orbit_file(o);
    const OrbitSpaceData back = parse_orbit_file(text);
    CHECK(back == canonicalize(o));
    CHECK(serialize_orbit_file(back) == text);
  }
}

TEST_CASE("digest is stable and content sensitive") {
  const std::string a = digest_orbit(two_points());
  CHECK(a == digest_orbit(two_points()));
  CHECK(a.size() == 16);
  OrbitSpaceData other;
  other.boundary_spheres = {{0}};
  CHECK(a != digest_orbit(other));
}

TEST_CASE("census csv shape") {
  const Census census = build_census(3, 2);
  const std::string csv = census_csv(census);
  CHECK(csv.rfind("serialization,chi,profile,b2,verdict,steps\n", 0) == 0);
  CHECK(csv.find("\"point index=+1; point index=-1\",2,TwoPoints,0,S4,") !=
        std::string::npos);
}

}  // TEST_SUITE
