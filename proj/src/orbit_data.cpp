#include "orbitspace/orbit_data.hpp"

#include <algorithm>
#include <numeric>

namespace orbitspace {

int component_index(const BoundarySphere& s) { return s.euler_number; }
int component_index(const IsolatedFixedPoint& p) { return p.index; }
int component_index(const WeightedArc& a) { return a.b_end - a.b_start; }
int component_index(const WeightedCircle&) { return 0; }

int total_index(const OrbitSpaceData& o) {
  int sum = 0;
  for (const auto& s : o.boundary_spheres) sum += component_index(s);
  for (const auto& p : o.points) sum += component_index(p);
  for (const auto& a : o.arcs) sum += component_index(a);
  for (const auto& c : o.circles) sum += component_index(c);
  return sum;
}

int fixed_points_of(const WeightedArc& a) {
  return static_cast<int>(a.pairs.size()) + 1;
}

int fixed_points_of(const WeightedCircle& c) {
  return static_cast<int>(c.segments.size());
}

namespace {

void check_pair(const SeifertPair& sp, const std::string& where,
                std::vector<Violation>& out) {
  if (sp.alpha < 2) {
    out.push_back({"seifert.alpha",
                   "multiplicity must be >= 2, got " + std::to_string(sp.alpha),
                   where});
  }
  if (sp.beta) {
    const int beta = *sp.beta;
    if (beta <= 0 || beta >= sp.alpha) {
      out.push_back({"seifert.beta.range",
                     "beta must satisfy 0 < beta < alpha, got beta=" +
                         std::to_string(beta) + " alpha=" + std::to_string(sp.alpha),
                     where});
    } else if (std::gcd(sp.alpha, beta) != 1) {
      out.push_back({"seifert.beta.coprime",
                     "gcd(alpha, beta) must be 1, got (" + std::to_string(sp.alpha) +
                         "," + std::to_string(beta) + ")",
                     where});
    }
  }
}

}  // namespace

ValidationReport validate(const OrbitSpaceData& o) {
  ValidationReport report;
  auto& v = report.violations;

  if (o.boundary_spheres.empty() && o.points.empty() && o.arcs.empty() &&
      o.circles.empty()) {
    v.push_back({"orbit.nonempty",
                 "the fixed point set of an effective action is nonempty", ""});
  }

  for (std::size_t i = 0; i < o.points.size(); ++i) {
    const int idx = o.points[i].index;
    if (idx != 1 && idx != -1) {
      v.push_back({"point.index",
                   "isolated fixed point index must be +1 or -1, got " +
                       std::to_string(idx),
                   "points[" + std::to_string(i) + "]"});
    }
  }

  for (std::size_t i = 0; i < o.arcs.size(); ++i) {
    const auto& arc = o.arcs[i];
    const std::string where = "arcs[" + std::to_string(i) + "]";
    if (arc.pairs.empty()) {
      v.push_back({"arc.pairs.nonempty", "weighted arc has no Seifert pairs", where});
    }
    for (std::size_t j = 0; j < arc.pairs.size(); ++j) {
      check_pair(arc.pairs[j], where + ".pairs[" + std::to_string(j) + "]", v);
    }
    for (std::size_t j = 0; j + 1 < arc.pairs.size(); ++j) {
      if (std::gcd(arc.pairs[j].alpha, arc.pairs[j + 1].alpha) != 1) {
        v.push_back({"arc.adjacent.coprime",
                     "adjacent multiplicities must be coprime (tangential "
                     "representation at the junction is effective), got " +
                         std::to_string(arc.pairs[j].alpha) + "," +
                         std::to_string(arc.pairs[j + 1].alpha),
                     where + ".pairs[" + std::to_string(j) + "]"});
      }
    }
    const int index = arc.b_end - arc.b_start;
    if (index < -1 || index > 1) {
      v.push_back({"arc.index.range",
                   "arc index b_end - b_start must be -1, 0 or +1, got " +
                       std::to_string(index),
                   where});
    }
  }

  for (std::size_t i = 0; i < o.circles.size(); ++i) {
    const auto& circle = o.circles[i];
    const std::string where = "circles[" + std::to_string(i) + "]";
    const std::size_t k = circle.segments.size();
    if (k < 2) {
      v.push_back({"circle.length",
                   "a weighted circle carries at least two segments "
                   "(simply-weighted circles do not occur)",
                   where});
    }
    for (std::size_t j = 0; j < k; ++j) {
      check_pair(circle.segments[j], where + ".segments[" + std::to_string(j) + "]", v);
    }
    // A 2-segment circle has one distinct adjacency, longer circles have k.
    const std::size_t adjacencies = (k == 2) ? 1 : k;
    for (std::size_t j = 0; j < adjacencies && k >= 2; ++j) {
      const int a = circle.segments[j].alpha;
      const int b = circle.segments[(j + 1) % k].alpha;
      if (std::gcd(a, b) != 1) {
        v.push_back({"circle.adjacent.coprime",
                     "cyclically adjacent multiplicities must be coprime, got " +
                         std::to_string(a) + "," + std::to_string(b),
                     where + ".segments[" + std::to_string(j) + "]"});
      }
    }
  }

  const int sum = total_index(o);
  if (sum != 0) {
    v.push_back({"orbit.zero-sum",
                 "component indices must sum to zero, got " + std::to_string(sum),
                 ""});
  }

  report.legal = report.violations.empty();
  return report;
}

WeightedArc reversed(const WeightedArc& a) {
  WeightedArc r;
  r.b_start = -a.b_end;
  r.b_end = -a.b_start;
  r.pairs.assign(a.pairs.rbegin(), a.pairs.rend());
  r.orientation = (a.orientation == ArcOrientation::forward)
                      ? ArcOrientation::reverse
                      : ArcOrientation::forward;
  return r;
}

namespace {

// Reading order for choosing an arc orientation: (b_start, pairs, b_end).
bool arc_reading_less(const WeightedArc& lhs, const WeightedArc& rhs) {
  if (lhs.b_start != rhs.b_start) return lhs.b_start < rhs.b_start;
  if (lhs.pairs != rhs.pairs) return lhs.pairs < rhs.pairs;
  return lhs.b_end < rhs.b_end;
}

}  // namespace

WeightedArc canonical_arc(const WeightedArc& a) {
  WeightedArc fwd = a;
  fwd.orientation = ArcOrientation::forward;
  WeightedArc rev = reversed(a);
  rev.orientation = ArcOrientation::forward;
  return arc_reading_less(rev, fwd) ? rev : fwd;
}

WeightedCircle canonical_circle(const WeightedCircle& c) {
  const std::size_t k = c.segments.size();
  if (k == 0) return c;
  WeightedCircle best = c;
  // Circles carry the bare multiplicity form of the label.
  for (auto& sp : best.segments) sp.beta.reset();
  auto consider = [&](const std::vector<SeifertPair>& candidate) {
    if (candidate < best.segments) best.segments = candidate;
  };
  std::vector<SeifertPair> rot = best.segments;
  std::vector<SeifertPair> ref(best.segments.rbegin(), best.segments.rend());
  for (std::size_t i = 0; i < k; ++i) {
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    std::rotate(ref.begin(), ref.begin() + 1, ref.end());
    consider(rot);
    consider(ref);
  }
  return best;
}

OrbitSpaceData canonicalize(const OrbitSpaceData& o) {
  if (!validate(o).legal) {
    throw IllegalDataError("canonicalize requires legal orbit data");
  }
  OrbitSpaceData c = o;
  for (auto& a : c.arcs) a = canonical_arc(a);
  for (auto& w : c.circles) w = canonical_circle(w);
  std::sort(c.boundary_spheres.begin(), c.boundary_spheres.end());
  // Points sort with +1 before -1.
  std::sort(c.points.begin(), c.points.end(),
            [](const IsolatedFixedPoint& x, const IsolatedFixedPoint& y) {
              return x.index > y.index;
            });
  std::sort(c.arcs.begin(), c.arcs.end(), arc_reading_less);
  std::sort(c.circles.begin(), c.circles.end());
  return c;
}

}  // namespace orbitspace
