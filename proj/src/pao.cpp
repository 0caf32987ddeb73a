#include "orbitspace/pao.hpp"

#include <cstdlib>
#include <numeric>

namespace orbitspace {

std::string to_string(RewriteSide side) {
  return side == RewriteSide::first ? "first" : "second";
}

std::string to_string(PaoOutcomeKind kind) {
  return kind == PaoOutcomeKind::TwoIsolatedPoints ? "TwoIsolatedPoints"
                                                   : "NewBoundarySphere";
}

bool is_terminal(const WeightPair& p) {
  if (p.m == 1 && p.n == 1) return true;
  return (p.m == 1 && p.n == 0) || (p.m == 0 && p.n == 1);
}

RewriteMove replacement_move(const WeightPair& p, RewriteSide side, long long k) {
  const long long value = (side == RewriteSide::first) ? p.m : p.n;
  const long long modulus = (side == RewriteSide::first) ? p.n : p.m;
  if (modulus == 0) {
    throw InvalidMoveError("replacement modulus is zero");
  }
  const long long raw = value - 2 * k * modulus;
  RewriteMove move;
  move.side = side;
  move.before = p;
  move.after = p;
  move.k = k;
  move.flipped = raw < 0;
  const long long result = raw < 0 ? -raw : raw;
  if (side == RewriteSide::first) {
    move.after.m = static_cast<int>(result);
  } else {
    move.after.n = static_cast<int>(result);
  }
  return move;
}

WeightPair replacement_step(const WeightPair& p, RewriteSide side, long long k) {
  return replacement_move(p, side, k).after;
}

RewriteTrace reduce(const WeightPair& start) {
  if (start.m == 0 && start.n == 0) {
    throw NotCoprimeError("multiplicities not coprime: (0,0)");
  }
  if (start.m % 2 == 0 && start.n % 2 == 0) {
    throw BothEvenError("both multiplicities even: (" + std::to_string(start.m) +
                        "," + std::to_string(start.n) + ")");
  }
  if (std::gcd(start.m, start.n) != 1) {
    throw NotCoprimeError("multiplicities not coprime: (" + std::to_string(start.m) +
                          "," + std::to_string(start.n) + ")");
  }

  RewriteTrace trace;
  trace.initial = start;
  WeightPair p = start;
  while (!is_terminal(p)) {
    const RewriteSide side =
        (p.m >= p.n) ? RewriteSide::first : RewriteSide::second;
    const long long value = (side == RewriteSide::first) ? p.m : p.n;
    const long long modulus = (side == RewriteSide::first) ? p.n : p.m;
    // Minimum-absolute residue of value mod 2*modulus; ties go nonnegative.
    const long long twice = 2 * modulus;
    const long long r0 = value % twice;
    const long long r = (2 * r0 <= twice) ? r0 : r0 - twice;
    const long long k = (value - r) / twice;
    RewriteMove move = replacement_move(p, side, k);
    p = move.after;
    trace.moves.push_back(move);
  }
  trace.terminal = p;
  return trace;
}

PaoResult apply_pao(const OrbitSpaceData& o, std::size_t circle_index) {
  if (!validate(o).legal) {
    throw IllegalDataError("apply_pao requires legal orbit data");
  }
  if (circle_index >= o.circles.size()) {
    throw NotApplicableError("no circle at index " + std::to_string(circle_index));
  }
  const auto& circle = o.circles[circle_index];
  if (circle.segments.size() != 2) {
    throw NotApplicableError("replacement applies to circles with exactly two "
                             "segments, got " +
                             std::to_string(circle.segments.size()));
  }

  PaoResult result;
  result.outcome.trace =
      reduce({circle.segments[0].alpha, circle.segments[1].alpha});
  const WeightPair t = result.outcome.trace.terminal;
  result.outcome.kind = (t.m == 1 && t.n == 1) ? PaoOutcomeKind::TwoIsolatedPoints
                                               : PaoOutcomeKind::NewBoundarySphere;

  result.data = o;
  result.data.circles.erase(result.data.circles.begin() +
                            static_cast<std::ptrdiff_t>(circle_index));
  if (result.outcome.kind == PaoOutcomeKind::TwoIsolatedPoints) {
    result.data.points.push_back({+1});
    result.data.points.push_back({-1});
  } else {
    // Euler number 0 is forced by the zero-sum rule.
    result.data.boundary_spheres.push_back({0});
  }
  return result;
}

}  // namespace orbitspace
