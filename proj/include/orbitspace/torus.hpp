#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orbitspace/exec.hpp"
#include "orbitspace/orbit_data.hpp"

namespace orbitspace {

// Orbit data of a T^2-action on a simply connected 4-manifold: a 2-disk
// whose boundary carries primitive isotropy labels (p, q) on edges, with
// T^2-fixed corners between cyclically consecutive edges. Legality demands
// |p_i q_{i+1} - q_i p_{i+1}| = 1 at every corner.
struct T2OrbitData {
  std::vector<std::pair<int, int>> edges;
  auto operator<=>(const T2OrbitData&) const = default;
};

// Direction of the S^1 subgroup inside T^2; primitive.
struct SubcircleEmbedding {
  int u = 1;
  int v = 0;
  auto operator<=>(const SubcircleEmbedding&) const = default;
};

// Multiplicity of the induced S^1-action on the stratum over edge (p, q).
int induced_multiplicity(const SubcircleEmbedding& s, std::pair<int, int> edge);

enum class ModelLocus { middle, pole_north, pole_south };

struct ModelStratum {
  ModelLocus locus;
  int multiplicity;  // 0 marks a pointwise fixed stratum, 1 a principal one
  auto operator<=>(const ModelStratum&) const = default;
};

// Isotropy data of the S^1-action on D^2 x S^2 given by
// (r, theta; rho, phi, z) -> (r, theta + m psi; rho, phi + n psi, z).
struct LocalOrbitData {
  int fixed_points = 2;
  std::vector<ModelStratum> strata;
};

std::string to_string(ModelLocus locus);

LocalOrbitData model_d2xs2_orbit_data(int m, int n);

// Orbit data of the linear action on S^4 in C^2 (+) R with weights (a, b).
OrbitSpaceData linear_s4_orbit_data(int a, int b);

// Orbit data of the linear action on CP^2 fixing [1:0:0], [0:1:0], [0:0:1]
// with weights (a, b); the multiplicity multiset is {|a|, |b|, |a-b|}.
OrbitSpaceData linear_cp2_orbit_data(int a, int b);

struct TorusExtension {
  T2OrbitData t2;
  SubcircleEmbedding subcircle;
  std::vector<int> multiplicity_cycle;  // |u q_i - v p_i| per edge, in order
};

struct ExtensionOutcome {
  std::optional<TorusExtension> extension;
  std::string failure_reason;  // set iff extension is absent
  bool ok() const { return extension.has_value(); }
};

// Decides whether the circle action extends to T^2. A weighted circle must
// be alone, exhaust the exceptional set and be unknotted; the multiplicity
// cycle must then admit corner labels and a primitive subcircle direction
// reproducing it. Data with boundary spheres is rejected as a precondition
// (codimension-2 fixed components take the Grove-Searle route instead).
ExtensionOutcome extend_to_torus(const OrbitSpaceData& o,
                                 const ExecPolicy& policy = {});

struct T2Classification {
  enum class Kind { S4, CP2, CP2bar, FourCorner, Higher };
  Kind kind = Kind::S4;
  int corners = 0;
  int b2 = 0;
};

std::string to_string(T2Classification::Kind kind);

// Orlik-Raymond disk picture: 2 corners give S^4, 3 give CP^2 with the
// orientation read off the corner determinant cycle, 4 corners are reported
// unrefined, more report b2 = corners - 2 only.
T2Classification classify_t2(const T2OrbitData& t);

std::string to_string(const T2OrbitData& t);

}  // namespace orbitspace
