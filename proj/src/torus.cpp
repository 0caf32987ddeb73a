#include "orbitspace/torus.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <numeric>
#include <tuple>

namespace orbitspace {

int induced_multiplicity(const SubcircleEmbedding& s, std::pair<int, int> edge) {
  return std::abs(s.u * edge.second - s.v * edge.first);
}

std::string to_string(ModelLocus locus) {
  switch (locus) {
    case ModelLocus::middle: return "middle";
    case ModelLocus::pole_north: return "pole_north";
    case ModelLocus::pole_south: return "pole_south";
  }
  return "middle";
}

LocalOrbitData model_d2xs2_orbit_data(int m, int n) {
  if (m < 1 || n < 0) {
    throw NotEffectiveError("weights must satisfy m >= 1, n >= 0");
  }
  if (std::gcd(m, n) != 1) {
    throw NotEffectiveError("action has global Z_" + std::to_string(std::gcd(m, n)) +
                            " kernel: weights (" + std::to_string(m) + "," +
                            std::to_string(n) + ")");
  }
  LocalOrbitData d;
  d.fixed_points = 2;  // disk center times the two poles
  d.strata = {{ModelLocus::middle, n},
              {ModelLocus::pole_north, m},
              {ModelLocus::pole_south, m}};
  return d;
}

OrbitSpaceData linear_s4_orbit_data(int a, int b) {
  if (a < 1 || b < 1) {
    throw NotEffectiveError("weights must be positive");
  }
  if (std::gcd(a, b) != 1) {
    throw NotEffectiveError("action has global Z_" + std::to_string(std::gcd(a, b)) +
                            " kernel: weights (" + std::to_string(a) + "," +
                            std::to_string(b) + ")");
  }
  OrbitSpaceData o;
  if (a == 1 && b == 1) {
    o.points = {{+1}, {-1}};
    return o;
  }
  if (a == 1 || b == 1) {
    WeightedArc arc;
    arc.b_start = 0;
    arc.b_end = 0;
    arc.pairs = {{std::max(a, b), std::nullopt}};
    o.arcs.push_back(arc);
    return o;
  }
  WeightedCircle circle;
  circle.segments = {{a, std::nullopt}, {b, std::nullopt}};
  circle.unknotted = true;
  o.circles.push_back(circle);
  return o;
}

OrbitSpaceData linear_cp2_orbit_data(int a, int b) {
  if (std::gcd(std::abs(a), std::abs(b)) != 1) {
    throw NotEffectiveError("action has a global finite kernel: weights (" +
                            std::to_string(a) + "," + std::to_string(b) + ")");
  }
  // Multiplicities on the three invariant spheres, in triangle order
  // P0 -> P1 -> P2 -> P0.
  const int m01 = std::abs(a);
  const int m12 = std::abs(a - b);
  const int m20 = std::abs(b);

  OrbitSpaceData o;
  const int zeros = (m01 == 0) + (m12 == 0) + (m20 == 0);
  if (zeros > 0) {
    // One invariant sphere is pointwise fixed; the opposite vertex stays
    // isolated. Signs are forced by the zero-sum rule.
    o.boundary_spheres = {{-1}};
    o.points = {{+1}};
    return o;
  }

  const int ones = (m01 == 1) + (m12 == 1) + (m20 == 1);
  if (ones == 0) {
    WeightedCircle circle;
    circle.segments = {{m01, std::nullopt}, {m12, std::nullopt}, {m20, std::nullopt}};
    circle.unknotted = true;
    o.circles.push_back(circle);
    return o;
  }
  if (ones == 1) {
    // Two exceptional spheres sharing one vertex form an arc through all
    // three fixed points.
    WeightedArc arc;
    arc.b_start = 0;
    arc.b_end = 0;
    if (m01 == 1) arc.pairs = {{m12, std::nullopt}, {m20, std::nullopt}};
    else if (m12 == 1) arc.pairs = {{m20, std::nullopt}, {m01, std::nullopt}};
    else arc.pairs = {{m01, std::nullopt}, {m12, std::nullopt}};
    o.arcs.push_back(arc);
    return o;
  }
  // ones == 2: a single exceptional sphere gives an arc with two fixed
  // points; the third fixed point stands alone and balances the arc index.
  WeightedArc arc;
  arc.b_start = 0;
  arc.b_end = 1;
  const int alpha = std::max({m01, m12, m20});
  arc.pairs = {{alpha, std::nullopt}};
  o.arcs.push_back(arc);
  o.points = {{-1}};
  return o;
}

namespace {

long long cross(std::pair<int, int> x, std::pair<int, int> y) {
  return static_cast<long long>(x.first) * y.second -
         static_cast<long long>(x.second) * y.first;
}

bool primitive(std::pair<int, int> e) {
  if (e.first == 0 && e.second == 0) return false;
  return std::gcd(std::abs(e.first), std::abs(e.second)) == 1;
}

struct Solution {
  int u = 0;
  int v = 0;
  std::vector<std::pair<int, int>> labels;

  // Total order: smallest max-norm subcircle ring first, then
  // lexicographically least labels, then the subcircle itself, preferring
  // nonnegative entries throughout.
  std::vector<long long> key() const {
    std::vector<long long> k;
    k.reserve(5 + 4 * labels.size());
    k.push_back(std::max(std::abs(u), std::abs(v)));
    for (auto [p, q] : labels) {
      k.push_back(std::abs(p));
      k.push_back(std::abs(q));
      k.push_back(p < 0);
      k.push_back(q < 0);
    }
    k.push_back(std::abs(u));
    k.push_back(std::abs(v));
    k.push_back(u < 0);
    k.push_back(v < 0);
    return k;
  }
};

bool solution_less(const Solution& a, const Solution& b) {
  return a.key() < b.key();
}

// Completes edge labels e_3..e_c for a fixed subcircle s, first two labels
// and sign choices; each step solves the linear system
//   cross(e_i, x) = d_i,  cross(s, x) = w_(i+1)
// whose determinant is -w_i != 0. Returns false when a step is non-integral
// or a bound/primitivity/closure condition fails.
bool complete_chain(const std::vector<int>& cycle, int u, int v,
                    std::vector<std::pair<int, int>>& labels,
                    unsigned sign_bits, long long bound) {
  const std::size_t c = cycle.size();
  for (std::size_t i = 1; i + 1 < c; ++i) {
    const auto [p, q] = labels[i];
    const long long d = (sign_bits & 1u) ? -1 : 1;
    const long long w = (sign_bits & 2u) ? -cycle[i + 1] : cycle[i + 1];
    sign_bits >>= 2;
    const long long det = static_cast<long long>(p) * v -
                          static_cast<long long>(q) * u;  // = -w_i
    const long long xn = d * u - p * w;
    const long long yn = v * d - q * w;
    if (det == 0 || xn % det != 0 || yn % det != 0) return false;
    const long long x = xn / det;
    const long long y = yn / det;
    if (std::abs(x) > bound || std::abs(y) > bound) return false;
    const std::pair<int, int> e{static_cast<int>(x), static_cast<int>(y)};
    if (!primitive(e)) return false;
    labels.push_back(e);
  }
  const long long closing = cross(labels.back(), labels.front());
  return closing == 1 || closing == -1;
}

// Searches for corner labels and a primitive subcircle direction realizing
// the multiplicity cycle. The first label is normalized to (1, 0), which is
// no loss: GL(2,Z) moves any solution into this chart with |u|, |v| within
// twice the largest multiplicity, far inside the search bound.
std::optional<Solution> search_cycle(const std::vector<int>& cycle, bool parallel) {
  const std::size_t c = cycle.size();
  if (c < 2) return std::nullopt;
  const int maxmult = *std::max_element(cycle.begin(), cycle.end());
  if (maxmult > 100000) {
    throw Error("multiplicity " + std::to_string(maxmult) +
                " too large for the extension search");
  }
  const long long bound = 64LL * std::max(1, maxmult);

  const int v = cycle[0];  // w_1 = -v with the global sign fixed
  std::optional<Solution> best;

  const unsigned chain_combos = (c > 2) ? (1u << (2 * (c - 2))) : 1u;

  for (int d1 : {1, -1}) {
    for (int s2 : {1, -1}) {
      const long long w2 = static_cast<long long>(s2) * cycle[1 % c];
      // u = d1 * (w2 + v t); iterate t with |u| <= bound.
      const long long t_lo = -(bound + std::abs(w2)) / v - 1;
      const long long t_hi = (bound + std::abs(w2)) / v + 1;

      std::optional<Solution> local;
#ifdef _OPENMP
#pragma omp parallel if (parallel)
      {
        std::optional<Solution> mine;
#pragma omp for nowait
        for (long long t = t_lo; t <= t_hi; ++t) {
          const long long ull = d1 * (w2 + static_cast<long long>(v) * t);
          if (std::abs(ull) > bound) continue;
          const int u = static_cast<int>(ull);
          if (std::gcd(std::abs(u), std::abs(v)) != 1) continue;
          std::vector<std::pair<int, int>> labels{{1, 0},
                                                  {static_cast<int>(t), d1}};
          if (std::abs(t) > bound) continue;
          if (c == 2) {
            Solution sol{u, v, labels};
            if (!mine || solution_less(sol, *mine)) mine = sol;
            continue;
          }
          for (unsigned bits = 0; bits < chain_combos; ++bits) {
            auto work = labels;
            if (complete_chain(cycle, u, v, work, bits, bound)) {
              Solution sol{u, v, work};
              if (!mine || solution_less(sol, *mine)) mine = sol;
            }
          }
        }
#pragma omp critical
        {
          if (mine && (!local || solution_less(*mine, *local))) local = mine;
        }
      }
#else
      (void)parallel;
      for (long long t = t_lo; t <= t_hi; ++t) {
        const long long ull = d1 * (w2 + static_cast<long long>(v) * t);
        if (std::abs(ull) > bound || std::abs(t) > bound) continue;
        const int u = static_cast<int>(ull);
        if (std::gcd(std::abs(u), std::abs(v)) != 1) continue;
        std::vector<std::pair<int, int>> labels{{1, 0},
                                                {static_cast<int>(t), d1}};
        if (c == 2) {
          Solution sol{u, v, labels};
          if (!local || solution_less(sol, *local)) local = sol;
          continue;
        }
        for (unsigned bits = 0; bits < chain_combos; ++bits) {
          auto work = labels;
          if (complete_chain(cycle, u, v, work, bits, bound)) {
            Solution sol{u, v, work};
            if (!local || solution_less(sol, *local)) local = sol;
          }
        }
      }
#endif
      if (local && (!best || solution_less(*local, *best))) best = local;
    }
  }
  return best;
}

// Multiplicity cycles a no-circle configuration can trace around the disk
// boundary: cyclic arrangements of the arcs (in either direction) and
// points, joined by principal edges of multiplicity 1.
std::vector<std::vector<int>> candidate_cycles(const OrbitSpaceData& o) {
  struct Component {
    std::vector<int> alphas;  // empty for a point
  };
  std::vector<Component> comps;
  for (const auto& a : o.arcs) {
    Component c;
    for (const auto& sp : a.pairs) c.alphas.push_back(sp.alpha);
    comps.push_back(c);
  }
  for (std::size_t i = 0; i < o.points.size(); ++i) comps.push_back({});

  std::vector<std::vector<int>> cycles;
  const std::size_t n = comps.size();
  if (n == 0) return cycles;

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;

  const std::size_t arc_count = o.arcs.size();
  const unsigned dir_combos = 1u << arc_count;

  do {
    if (order[0] != 0) continue;  // fix the cyclic starting component
    for (unsigned dirs = 0; dirs < dir_combos; ++dirs) {
      std::vector<int> cycle;
      for (std::size_t idx : order) {
        auto alphas = comps[idx].alphas;
        if (idx < arc_count && (dirs >> idx & 1u)) {
          std::reverse(alphas.begin(), alphas.end());
        }
        cycle.insert(cycle.end(), alphas.begin(), alphas.end());
        cycle.push_back(1);  // principal edge to the next component
      }
      if (std::find(cycles.begin(), cycles.end(), cycle) == cycles.end()) {
        cycles.push_back(cycle);
      }
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return cycles;
}

}  // namespace

ExtensionOutcome extend_to_torus(const OrbitSpaceData& o, const ExecPolicy& policy) {
  if (!validate(o).legal) {
    throw IllegalDataError("extend_to_torus requires legal orbit data");
  }
  if (!o.boundary_spheres.empty()) {
    throw IllegalDataError(
        "extend_to_torus does not accept codimension-2 fixed components");
  }

  ExtensionOutcome out;
  std::vector<std::vector<int>> cycles;

  if (!o.circles.empty()) {
    if (o.circles.size() > 1) {
      out.failure_reason = "more than one weighted circle";
      return out;
    }
    if (!o.points.empty() || !o.arcs.empty()) {
      out.failure_reason =
          "weighted circle does not exhaust the exceptional set";
      return out;
    }
    if (!o.circles[0].unknotted) {
      out.failure_reason = "weighted circle is knotted in the orbit space";
      return out;
    }
    std::vector<int> cycle;
    for (const auto& sp : o.circles[0].segments) cycle.push_back(sp.alpha);
    cycles.push_back(cycle);
  } else {
    cycles = candidate_cycles(o);
  }

  for (const auto& cycle : cycles) {
    if (auto sol = search_cycle(cycle, policy.parallel)) {
      TorusExtension ext;
      ext.t2.edges = sol->labels;
      ext.subcircle = {sol->u, sol->v};
      ext.multiplicity_cycle = cycle;
      out.extension = std::move(ext);
      return out;
    }
  }
  out.failure_reason = "no torus realization within the search bound";
  return out;
}

std::string to_string(T2Classification::Kind kind) {
  switch (kind) {
    case T2Classification::Kind::S4: return "S4";
    case T2Classification::Kind::CP2: return "CP2";
    case T2Classification::Kind::CP2bar: return "-CP2";
    case T2Classification::Kind::FourCorner: return "FourCornerType";
    case T2Classification::Kind::Higher: return "Higher";
  }
  return "S4";
}

T2Classification classify_t2(const T2OrbitData& t) {
  const std::size_t c = t.edges.size();
  if (c < 2) {
    throw IllegalT2DataError("a disk orbit space carries at least two edges");
  }
  long long det_product = 1;
  for (std::size_t i = 0; i < c; ++i) {
    if (!primitive(t.edges[i])) {
      throw IllegalT2DataError("edge label " + std::to_string(i) +
                               " is not primitive");
    }
    const long long d = cross(t.edges[i], t.edges[(i + 1) % c]);
    if (d != 1 && d != -1) {
      throw IllegalT2DataError("corner determinant between edges " +
                               std::to_string(i) + " and " +
                               std::to_string((i + 1) % c) + " is " +
                               std::to_string(d) + ", must be +-1");
    }
    det_product *= d;
  }

  T2Classification r;
  r.corners = static_cast<int>(c);
  r.b2 = r.corners - 2;
  if (c == 2) {
    r.kind = T2Classification::Kind::S4;
  } else if (c == 3) {
    r.kind = (det_product < 0) ? T2Classification::Kind::CP2
                               : T2Classification::Kind::CP2bar;
  } else if (c == 4) {
    r.kind = T2Classification::Kind::FourCorner;
  } else {
    r.kind = T2Classification::Kind::Higher;
  }
  return r;
}

std::string to_string(const T2OrbitData& t) {
  std::string out = "edges=[";
  for (std::size_t i = 0; i < t.edges.size(); ++i) {
    if (i > 0) out += ",";
    out += "(" + std::to_string(t.edges[i].first) + "," +
           std::to_string(t.edges[i].second) + ")";
  }
  out += "]";
  return out;
}

}  // namespace orbitspace
