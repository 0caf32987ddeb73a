#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "orbitspace/errors.hpp"

namespace orbitspace {

// Exceptional-orbit label: multiplicity alpha >= 2, optional Seifert beta
// with 0 < beta < alpha and gcd(alpha, beta) = 1. Classification reads only
// alpha; beta-dependent checks are skipped when beta is absent.
struct SeifertPair {
  int alpha = 2;
  std::optional<int> beta;
  auto operator<=>(const SeifertPair&) const = default;
};

enum class ArcOrientation { forward, reverse };

// Weighted arc [b_start; (a1,b1),...,(an,bn); b_end]. Its index is
// b_end - b_start, constrained to {-1, 0, +1}. An arc with n pairs carries
// n + 1 fixed points: both endpoints plus the junctions between pairs.
struct WeightedArc {
  int b_start = 0;
  int b_end = 0;
  std::vector<SeifertPair> pairs;
  ArcOrientation orientation = ArcOrientation::forward;
  auto operator<=>(const WeightedArc&) const = default;
};

// Multiply-weighted circle: a cyclic list of k >= 2 exceptional segments
// alternating with k fixed points (one junction per adjacent segment pair).
// Whether the circle is unknotted in the orbit space is an input flag, never
// computed. A circle always has index 0.
struct WeightedCircle {
  std::vector<SeifertPair> segments;
  bool unknotted = true;
  auto operator<=>(const WeightedCircle&) const = default;
};

struct IsolatedFixedPoint {
  int index = 1;  // +1 or -1
  auto operator<=>(const IsolatedFixedPoint&) const = default;
};

// Fixed 2-sphere component of the orbit-space boundary, weighted by the
// Euler number of the principal bundle over the pushed-in sphere.
struct BoundarySphere {
  int euler_number = 0;
  auto operator<=>(const BoundarySphere&) const = default;
};

// Weighted orbit space of an effective circle action on a simply connected
// 4-manifold. The base 3-manifold is implicitly S^3 with one open ball
// removed per boundary sphere; there is no explicit base field.
struct OrbitSpaceData {
  std::vector<BoundarySphere> boundary_spheres;
  std::vector<IsolatedFixedPoint> points;
  std::vector<WeightedArc> arcs;
  std::vector<WeightedCircle> circles;
  auto operator<=>(const OrbitSpaceData&) const = default;
};

struct Violation {
  std::string rule;     // stable rule identifier, e.g. "orbit.zero-sum"
  std::string message;
  std::string where;    // component locator, e.g. "circles[0].segments[1]"
};

struct ValidationReport {
  bool legal = true;
  std::vector<Violation> violations;
};

int component_index(const BoundarySphere& s);
int component_index(const IsolatedFixedPoint& p);
int component_index(const WeightedArc& a);
int component_index(const WeightedCircle& c);

int total_index(const OrbitSpaceData& o);

// Number of fixed points carried by each component kind.
int fixed_points_of(const WeightedArc& a);
int fixed_points_of(const WeightedCircle& c);

// Checks every legality rule; violations are data, not failures.
ValidationReport validate(const OrbitSpaceData& o);

// Reverses the reading direction of an arc, negating the framing data.
// The index b_end - b_start is preserved.
WeightedArc reversed(const WeightedArc& a);

WeightedArc canonical_arc(const WeightedArc& a);
WeightedCircle canonical_circle(const WeightedCircle& c);

// Deterministic normal form: components sorted, circles rotated/reflected to
// the lexicographically minimal segment sequence, arcs oriented so the
// (b_start, pairs, b_end) reading is minimal. Idempotent. Requires legal
// input; throws IllegalDataError otherwise.
OrbitSpaceData canonicalize(const OrbitSpaceData& o);

}  // namespace orbitspace
