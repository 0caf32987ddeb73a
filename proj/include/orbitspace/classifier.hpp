#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orbitspace/exec.hpp"
#include "orbitspace/invariants.hpp"
#include "orbitspace/orbit_data.hpp"
#include "orbitspace/surgery.hpp"

namespace orbitspace {

enum class Rule {
  GroveSearle,
  TorusExtension,
  PaoReplacement,
  CircleSplit,
  ConnectedSumAssembly,
  OrlikRaymond,
};

std::string to_string(Rule rule);

// One step of a derivation: canonical-form fingerprints of the data the rule
// consumed and produced, plus the classical result justifying it.
struct DerivationStep {
  Rule rule;
  std::string input_digest;
  std::string output_digest;
  std::string citation;
};

enum class CurvedVerdict { S4, CP2 };

std::string to_string(CurvedVerdict v);

// Homeomorphism-level verdict: chi(word) always equals chi of the input.
// For b2 <= 1 the word is exact up to orientation of the CP^2 summand; for
// b2 >= 2 only the summand count is pinned and `exact` is false (the
// CP2 entries then only carry the Euler characteristic).
struct HomeoVerdict {
  int b2 = 0;
  bool exact = true;
  SumWord word;
};

struct ClassificationResult {
  HomeoVerdict homeo;
  std::optional<CurvedVerdict> diffeo;  // present iff input was admissible
  std::vector<DerivationStep> trace;
};

HomeoVerdict classify_homeo(const OrbitSpaceData& o);

// Digest payload builders used for DerivationStep fingerprints; exposed so
// traces can be replayed and checked step by step.
std::string digest_verdict(CurvedVerdict v);
std::string digest_t2_extension(const struct TorusExtension& ext);
std::string digest_split_pair(const struct Decomposition& d);
std::string digest_sum(CurvedVerdict x, CurvedVerdict y);

// Runs the positively curved case analysis: Grove-Searle when a fixed
// sphere is present, torus extension + Orlik-Raymond when no circle exists,
// the replacement trick for a 2-fixed-point circle, and the connected-sum
// decomposition for a 3-fixed-point circle (all junctions must agree).
// Throws NotAdmissibleError / PipelineStuckError.
ClassificationResult classify_diffeo_positively_curved(
    const OrbitSpaceData& o, const ExecPolicy& policy = {});

struct EnumerationResult {
  std::vector<OrbitSpaceData> configs;  // canonical, deterministic order
  long excluded_unrealizable = 0;       // admissible but fails the torus proxy
};

// All canonical legal admissible configurations with multiplicities at most
// max_multiplicity and at most max_pairs arc pairs / circle segments.
// Configurations whose pipeline route requires a torus extension that does
// not exist are excluded and counted.
EnumerationResult enumerate_admissible(int max_multiplicity, int max_pairs,
                                       const ExecPolicy& policy = {});

struct CensusRow {
  std::string serialization;
  int chi = 0;
  std::string profile;
  int b2 = 0;
  std::string verdict;
  int steps = 0;
};

struct Census {
  EnumerationResult enumeration;
  std::vector<CensusRow> rows;
};

std::vector<CensusRow> classify_rows(const std::vector<OrbitSpaceData>& configs,
                                     const ExecPolicy& policy = {});

Census build_census(int max_multiplicity, int max_pairs,
                    const ExecPolicy& policy = {});

std::string census_csv(const Census& census);

}  // namespace orbitspace
