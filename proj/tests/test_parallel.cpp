#include <doctest.h>

#include "orbitspace/classifier.hpp"
#include "orbitspace/format.hpp"
#include "orbitspace/sweep.hpp"
#include "orbitspace/torus.hpp"
#include "test_helpers.hpp"

using namespace orbitspace;
using orbitspace::testing::circle_config;

TEST_SUITE("parallel") {

TEST_CASE("reduce sweep matches the serial reference") {
  const auto serial = reduce_sweep(160, serial_policy());
  const auto parallel = reduce_sweep(160, ExecPolicy{true});
  CHECK(serial == parallel);
  CHECK(!serial.empty());
}

TEST_CASE("extension search matches the serial reference") {
  for (const auto& alphas :
       {std::vector<int>{2, 3}, {2, 5, 3}, {3, 4, 5}, {2, 7, 9}, {5, 7}, {4, 5, 9}}) {
    const OrbitSpaceData o = circle_config(alphas);
    const ExtensionOutcome s = extend_to_torus(o, serial_policy());
    const ExtensionOutcome p = extend_to_torus(o, ExecPolicy{true});
    CHECK(s.ok() == p.ok());
    if (s.ok() && p.ok()) {
      CHECK(s.extension->t2 == p.extension->t2);
      CHECK(s.extension->subcircle == p.extension->subcircle);
    }
  }
}

TEST_CASE("enumeration matches the serial reference") {
  const EnumerationResult s = enumerate_admissible(9, 4, serial_policy());
  const EnumerationResult p = enumerate_admissible(9, 4, ExecPolicy{true});
  CHECK(s.configs == p.configs);
  CHECK(s.excluded_unrealizable == p.excluded_unrealizable);
}

TEST_CASE("census rows match the serial reference byte for byte") {
  const Census s = build_census(9, 4, serial_policy());
  const Census p = build_census(9, 4, ExecPolicy{true});
  CHECK(census_csv(s) == census_csv(p));
}

}  // TEST_SUITE
