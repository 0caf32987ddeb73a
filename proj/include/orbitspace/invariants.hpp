#pragma once

#include <string>

#include "orbitspace/orbit_data.hpp"

namespace orbitspace {

// The four fixed-set shapes an admissible action can have, plus Other.
enum class FixedSetTag { OneSphere, SpherePlusPoint, TwoPoints, ThreePoints, Other };

struct FixedSetProfile {
  FixedSetTag tag = FixedSetTag::Other;
  int num_spheres = 0;
  int num_points = 0;  // standalone points + arc and circle fixed points
};

std::string to_string(FixedSetTag tag);

// Euler characteristic of the fixed point set: 2 per boundary sphere, 1 per
// fixed point (standalone, arc-carried, circle-carried).
int euler_char_fixed_set(const OrbitSpaceData& o);

FixedSetProfile fixed_set_profile(const OrbitSpaceData& o);

// chi(M) = 2 + b2 for closed simply connected 4-manifolds.
int second_betti(const OrbitSpaceData& o);

// True iff the fixed set is one of the four admissible shapes, equivalently
// 2 <= chi(F) <= 3 with fixed components points or a single sphere.
bool admissible_positively_curved(const OrbitSpaceData& o);

}  // namespace orbitspace
