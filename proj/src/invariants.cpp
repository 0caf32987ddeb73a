#include "orbitspace/invariants.hpp"

namespace orbitspace {

std::string to_string(FixedSetTag tag) {
  switch (tag) {
    case FixedSetTag::OneSphere: return "OneSphere";
    case FixedSetTag::SpherePlusPoint: return "SpherePlusPoint";
    case FixedSetTag::TwoPoints: return "TwoPoints";
    case FixedSetTag::ThreePoints: return "ThreePoints";
    case FixedSetTag::Other: return "Other";
  }
  return "Other";
}

namespace {

void require_legal(const OrbitSpaceData& o) {
  if (!validate(o).legal) throw IllegalDataError("operation requires legal orbit data");
}

}  // namespace

int euler_char_fixed_set(const OrbitSpaceData& o) {
  require_legal(o);
  int chi = 2 * static_cast<int>(o.boundary_spheres.size());
  chi += static_cast<int>(o.points.size());
  for (const auto& a : o.arcs) chi += fixed_points_of(a);
  for (const auto& c : o.circles) chi += fixed_points_of(c);
  return chi;
}

FixedSetProfile fixed_set_profile(const OrbitSpaceData& o) {
  require_legal(o);
  FixedSetProfile p;
  p.num_spheres = static_cast<int>(o.boundary_spheres.size());
  p.num_points = static_cast<int>(o.points.size());
  for (const auto& a : o.arcs) p.num_points += fixed_points_of(a);
  for (const auto& c : o.circles) p.num_points += fixed_points_of(c);

  if (p.num_spheres == 1 && p.num_points == 0) p.tag = FixedSetTag::OneSphere;
  else if (p.num_spheres == 1 && p.num_points == 1) p.tag = FixedSetTag::SpherePlusPoint;
  else if (p.num_spheres == 0 && p.num_points == 2) p.tag = FixedSetTag::TwoPoints;
  else if (p.num_spheres == 0 && p.num_points == 3) p.tag = FixedSetTag::ThreePoints;
  else p.tag = FixedSetTag::Other;
  return p;
}

int second_betti(const OrbitSpaceData& o) {
  const int chi = euler_char_fixed_set(o);
  if (chi < 2) {
    throw IllegalDataError("chi(F) = " + std::to_string(chi) +
                           " < 2 cannot occur for a simply connected total space");
  }
  return chi - 2;
}

bool admissible_positively_curved(const OrbitSpaceData& o) {
  return fixed_set_profile(o).tag != FixedSetTag::Other;
}

}  // namespace orbitspace
