#include "orbitspace/classifier.hpp"

#include <algorithm>
#include <numeric>

#include "orbitspace/format.hpp"
#include "orbitspace/pao.hpp"
#include "orbitspace/torus.hpp"

namespace orbitspace {

std::string to_string(Rule rule) {
  switch (rule) {
    case Rule::GroveSearle: return "GroveSearle";
    case Rule::TorusExtension: return "TorusExtension";
    case Rule::PaoReplacement: return "PaoReplacement";
    case Rule::CircleSplit: return "CircleSplit";
    case Rule::ConnectedSumAssembly: return "ConnectedSumAssembly";
    case Rule::OrlikRaymond: return "OrlikRaymond";
  }
  return "GroveSearle";
}

std::string to_string(CurvedVerdict v) {
  return v == CurvedVerdict::S4 ? "S4" : "CP2";
}

std::string digest_verdict(CurvedVerdict v) {
  return digest_text("verdict\n" + to_string(v));
}

std::string digest_t2_extension(const TorusExtension& ext) {
  return digest_text("t2\n" + to_string(ext.t2) + " u=" +
                     std::to_string(ext.subcircle.u) + " v=" +
                     std::to_string(ext.subcircle.v));
}

std::string digest_split_pair(const Decomposition& d) {
  return digest_text("split\n" + serialize_orbit_file(d.x_part) + "---\n" +
                     serialize_orbit_file(d.y_part));
}

std::string digest_sum(CurvedVerdict x, CurvedVerdict y) {
  return digest_text("sum\n" + to_string(x) + " # " + to_string(y));
}

namespace {

constexpr const char* kCiteGroveSearle =
    "Grove-Searle: isometric circle action with codimension-2 fixed set is linear";
constexpr const char* kCiteTorusExtension =
    "Fintushel criterion: the circle action extends to a torus action";
constexpr const char* kCitePao =
    "Pao replacement: a 2-fixed-point weighted circle rewrites to points or a fixed sphere";
constexpr const char* kCiteSplit =
    "equivariant connected-sum decomposition of a weighted circle";
constexpr const char* kCiteAssembly =
    "connected-sum assembly of the summand verdicts";
constexpr const char* kCiteOrlikRaymond =
    "Orlik-Raymond: torus actions on simply connected 4-manifolds are "
    "determined by their disk orbit data";

// Torus-extension + disk-classification tail shared by several branches.
CurvedVerdict extension_route(const OrbitSpaceData& o,
                              std::vector<DerivationStep>& trace,
                              const ExecPolicy& policy) {
  const ExtensionOutcome ext = extend_to_torus(o, policy);
  if (!ext.ok()) {
    throw PipelineStuckError("torus extension failed: " + ext.failure_reason);
  }
  trace.push_back({Rule::TorusExtension, digest_orbit(o), digest_t2_extension(*ext.extension),
                   kCiteTorusExtension});
  const T2Classification t2c = classify_t2(ext.extension->t2);
  CurvedVerdict verdict;
  if (t2c.corners == 2) {
    verdict = CurvedVerdict::S4;
  } else if (t2c.corners == 3) {
    verdict = CurvedVerdict::CP2;  // orientation not reported in this pipeline
  } else {
    throw PipelineStuckError("disk orbit data has " + std::to_string(t2c.corners) +
                             " corners, outside the admissible range");
  }
  trace.push_back({Rule::OrlikRaymond, digest_t2_extension(*ext.extension),
                   digest_verdict(verdict), kCiteOrlikRaymond});
  return verdict;
}

CurvedVerdict run_pipeline(const OrbitSpaceData& o,
                           std::vector<DerivationStep>& trace,
                           const ExecPolicy& policy);

// Branch for one circle with three fixed points, split at one junction:
// X keeps two segments and reduces to S4 through the replacement trick,
// Y extends to a torus action and classifies as CP2.
CurvedVerdict run_split(const OrbitSpaceData& o, int junction,
                        std::vector<DerivationStep>& trace,
                        const ExecPolicy& policy) {
  const Decomposition d = split_circle(o, 0, junction);
  trace.push_back({Rule::CircleSplit, digest_orbit(o), digest_split_pair(d),
                   std::string(kCiteSplit) + " (junction " +
                       std::to_string(junction) + ")"});

  const OrbitSpaceData x = canonicalize(d.x_part);
  const CurvedVerdict xv = run_pipeline(x, trace, policy);
  if (xv != CurvedVerdict::S4) {
    throw PipelineStuckError("X summand did not reduce to S4");
  }

  const OrbitSpaceData y = canonicalize(d.y_part);
  const CurvedVerdict yv = extension_route(y, trace, policy);
  if (yv != CurvedVerdict::CP2) {
    throw PipelineStuckError("Y summand did not classify as CP2");
  }

  const SumWord word =
      connected_sum(SumWord::identity(), SumWord::of(Summand::CP2));
  const CurvedVerdict verdict = CurvedVerdict::CP2;
  trace.push_back({Rule::ConnectedSumAssembly,
                   digest_sum(xv, yv),
                   digest_verdict(verdict),
                   std::string(kCiteAssembly) + ": " + to_string(word)});
  return verdict;
}

// `o` is canonical, legal and admissible. Branch order is fixed:
// codimension-2 fixed components first, then the no-circle case, then the
// replacement and decomposition routes for a single weighted circle.
CurvedVerdict run_pipeline(const OrbitSpaceData& o,
                           std::vector<DerivationStep>& trace,
                           const ExecPolicy& policy) {
  const int chi = euler_char_fixed_set(o);

  if (!o.boundary_spheres.empty()) {
    const CurvedVerdict verdict = (chi == 2) ? CurvedVerdict::S4 : CurvedVerdict::CP2;
    trace.push_back({Rule::GroveSearle, digest_orbit(o), digest_verdict(verdict),
                     kCiteGroveSearle});
    return verdict;
  }

  if (o.circles.empty()) {
    return extension_route(o, trace, policy);
  }

  if (o.circles.size() == 1 && o.points.empty() && o.arcs.empty()) {
    const std::size_t k = o.circles[0].segments.size();
    if (k == 2) {
      const PaoResult pao = apply_pao(o, 0);
      const OrbitSpaceData next = canonicalize(pao.data);
      trace.push_back({Rule::PaoReplacement, digest_orbit(o), digest_orbit(next),
                       std::string(kCitePao) + " (terminal " +
                           to_string(pao.outcome.kind) + ")"});
      return run_pipeline(next, trace, policy);
    }
    if (k == 3) {
      std::optional<CurvedVerdict> agreed;
      std::vector<DerivationStep> chosen;
      for (int junction = 0; junction < 3; ++junction) {
        std::vector<DerivationStep> sub;
        const CurvedVerdict v = run_split(o, junction, sub, policy);
        if (!agreed) {
          agreed = v;
          chosen = std::move(sub);
        } else if (*agreed != v) {
          throw PipelineStuckError("split junctions disagree on the verdict");
        }
      }
      trace.insert(trace.end(), chosen.begin(), chosen.end());
      return *agreed;
    }
  }

  throw PipelineStuckError("no branch applies to the configuration");
}

}  // namespace

HomeoVerdict classify_homeo(const OrbitSpaceData& o) {
  HomeoVerdict h;
  h.b2 = second_betti(o);  // validates
  h.exact = h.b2 <= 1;
  for (int i = 0; i < h.b2; ++i) h.word.summands.push_back(Summand::CP2);
  return h;
}

ClassificationResult classify_diffeo_positively_curved(const OrbitSpaceData& o,
                                                       const ExecPolicy& policy) {
  if (!validate(o).legal) {
    throw IllegalDataError("classification requires legal orbit data");
  }
  if (!admissible_positively_curved(o)) {
    throw NotAdmissibleError(
        "fixed-set profile " + to_string(fixed_set_profile(o).tag) +
        " is not admissible for the positively curved pipeline");
  }
  ClassificationResult result;
  result.homeo = classify_homeo(o);
  const OrbitSpaceData canon = canonicalize(o);
  result.diffeo = run_pipeline(canon, result.trace, policy);
  return result;
}

namespace {

// The routes of the pipeline that require a torus extension must find one;
// configurations that cannot are not weighted orbit spaces of any action
// (they fail the omitted relative homology class of the full legality data)
// and are excluded from the census.
bool realizable_for_pipeline(const OrbitSpaceData& o) {
  if (!o.boundary_spheres.empty()) return true;  // Grove-Searle route
  if (o.circles.empty()) {
    return extend_to_torus(o, serial_policy()).ok();
  }
  const std::size_t k = o.circles[0].segments.size();
  if (k == 2) return true;  // replacement route
  OrbitSpaceData alone;
  alone.circles.push_back(o.circles[0]);
  alone.circles[0].unknotted = true;
  return extend_to_torus(alone, serial_policy()).ok();
}

std::vector<OrbitSpaceData> candidate_configurations(int max_multiplicity,
                                                     int max_pairs) {
  std::vector<OrbitSpaceData> out;
  const int w = max_multiplicity;

  {
    OrbitSpaceData o;  // one fixed sphere, Euler number forced to 0
    o.boundary_spheres = {{0}};
    out.push_back(o);
  }
  for (int sign : {+1, -1}) {
    OrbitSpaceData o;  // sphere plus point, indices balancing
    o.boundary_spheres = {{-sign}};
    o.points = {{sign}};
    out.push_back(o);
  }
  {
    OrbitSpaceData o;
    o.points = {{+1}, {-1}};
    out.push_back(o);
  }

  // One arc, two fixed points: [0; (alpha); 0].
  for (int alpha = 2; alpha <= w; ++alpha) {
    OrbitSpaceData o;
    WeightedArc arc;
    arc.pairs = {{alpha, std::nullopt}};
    o.arcs.push_back(arc);
    out.push_back(o);
  }

  // One arc plus one point, three fixed points; arc index balances the point.
  for (int alpha = 2; alpha <= w; ++alpha) {
    for (int sign : {+1, -1}) {
      OrbitSpaceData o;
      WeightedArc arc;
      arc.b_start = 0;
      arc.b_end = sign;
      arc.pairs = {{alpha, std::nullopt}};
      o.arcs.push_back(arc);
      o.points = {{-sign}};
      out.push_back(o);
    }
  }

  // One arc with two pairs, three fixed points.
  if (max_pairs >= 2) {
    for (int a = 2; a <= w; ++a) {
      for (int b = a + 1; b <= w; ++b) {
        if (std::gcd(a, b) != 1) continue;
        OrbitSpaceData o;
        WeightedArc arc;
        arc.pairs = {{a, std::nullopt}, {b, std::nullopt}};
        o.arcs.push_back(arc);
        out.push_back(o);
      }
    }
  }

  // One circle with two segments.
  if (max_pairs >= 2) {
    for (int a = 2; a <= w; ++a) {
      for (int b = a + 1; b <= w; ++b) {
        if (std::gcd(a, b) != 1) continue;
        OrbitSpaceData o;
        WeightedCircle circle;
        circle.segments = {{a, std::nullopt}, {b, std::nullopt}};
        o.circles.push_back(circle);
        out.push_back(o);
      }
    }
  }

  // One circle with three segments; pairwise coprimality makes the sorted
  // triple the canonical cyclic order.
  if (max_pairs >= 3) {
    for (int a = 2; a <= w; ++a) {
      for (int b = a + 1; b <= w; ++b) {
        if (std::gcd(a, b) != 1) continue;
        for (int c = b + 1; c <= w; ++c) {
          if (std::gcd(a, c) != 1 || std::gcd(b, c) != 1) continue;
          OrbitSpaceData o;
          WeightedCircle circle;
          circle.segments = {{a, std::nullopt}, {b, std::nullopt}, {c, std::nullopt}};
          o.circles.push_back(circle);
          out.push_back(o);
        }
      }
    }
  }

  return out;
}

}  // namespace

EnumerationResult enumerate_admissible(int max_multiplicity, int max_pairs,
                                       const ExecPolicy& policy) {
  if (max_multiplicity < 2 || max_pairs < 2) {
    throw Error("enumeration bounds must be at least 2");
  }

  std::vector<OrbitSpaceData> candidates =
      candidate_configurations(max_multiplicity, max_pairs);
  const std::size_t n = candidates.size();
  std::vector<char> keep(n, 0);

  if (policy.parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
      const auto& o = candidates[static_cast<std::size_t>(i)];
      keep[static_cast<std::size_t>(i)] =
          validate(o).legal && admissible_positively_curved(o) &&
          realizable_for_pipeline(o);
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      const auto& o = candidates[i];
      keep[i] = validate(o).legal && admissible_positively_curved(o) &&
                realizable_for_pipeline(o);
    }
  }

  EnumerationResult result;
  for (std::size_t i = 0; i < n; ++i) {
    if (keep[i]) {
      result.configs.push_back(canonicalize(candidates[i]));
    } else {
      ++result.excluded_unrealizable;
    }
  }
  std::sort(result.configs.begin(), result.configs.end());
  result.configs.erase(
      std::unique(result.configs.begin(), result.configs.end()),
      result.configs.end());
  return result;
}

std::vector<CensusRow> classify_rows(const std::vector<OrbitSpaceData>& configs,
                                     const ExecPolicy& policy) {
  std::vector<CensusRow> rows(configs.size());
  const ExecPolicy inner = serial_policy();

  if (policy.parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(configs.size()); ++i) {
      const auto& o = configs[static_cast<std::size_t>(i)];
      const ClassificationResult r = classify_diffeo_positively_curved(o, inner);
      rows[static_cast<std::size_t>(i)] = {
          serialize_components_inline(o), euler_char_fixed_set(o),
          to_string(fixed_set_profile(o).tag), second_betti(o),
          to_string(*r.diffeo), static_cast<int>(r.trace.size())};
    }
  } else {
    for (std::size_t i = 0; i < configs.size(); ++i) {
      const auto& o = configs[i];
      const ClassificationResult r = classify_diffeo_positively_curved(o, inner);
      rows[i] = {serialize_components_inline(o), euler_char_fixed_set(o),
                 to_string(fixed_set_profile(o).tag), second_betti(o),
                 to_string(*r.diffeo), static_cast<int>(r.trace.size())};
    }
  }
  return rows;
}

Census build_census(int max_multiplicity, int max_pairs,
                    const ExecPolicy& policy) {
  Census census;
  census.enumeration = enumerate_admissible(max_multiplicity, max_pairs, policy);
  census.rows = classify_rows(census.enumeration.configs, policy);
  return census;
}

std::string census_csv(const Census& census) {
  std::string out = "serialization,chi,profile,b2,verdict,steps\n";
  for (const auto& row : census.rows) {
    out += "\"" + row.serialization + "\"," + std::to_string(row.chi) + "," +
           row.profile + "," + std::to_string(row.b2) + "," + row.verdict +
           "," + std::to_string(row.steps) + "\n";
  }
  return out;
}

}  // namespace orbitspace
