#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "orbitspace/orbit_data.hpp"

namespace orbitspace {

// Multiplicity pair (m, n) of a weighted circle with exactly two fixed
// points. Weights are stored nonnegative; legal initial states have
// m, n >= 2 and gcd(m, n) = 1, terminal states are (1,1) and (1,0) up to
// swapping coordinates.
struct WeightPair {
  int m = 0;
  int n = 0;
  auto operator<=>(const WeightPair&) const = default;
};

enum class RewriteSide { first, second };

// One replacement move: the chosen side is rewritten from value to
// |value - 2*k*modulus| where the modulus is the untouched side. A negative
// intermediate is stored as its absolute value with `flipped` set; the sign
// flip models an orientation reversal of the sphere factor and is recorded
// in the move, not in the state.
struct RewriteMove {
  RewriteSide side = RewriteSide::first;
  WeightPair before;
  WeightPair after;
  long long k = 0;
  bool flipped = false;
};

struct RewriteTrace {
  WeightPair initial;
  WeightPair terminal;
  std::vector<RewriteMove> moves;
};

enum class PaoOutcomeKind { TwoIsolatedPoints, NewBoundarySphere };

struct PaoOutcome {
  PaoOutcomeKind kind = PaoOutcomeKind::TwoIsolatedPoints;
  RewriteTrace trace;
};

bool is_terminal(const WeightPair& p);  // {1,1}, (1,0) or (0,1)

// Full move record for rewriting `side` of `p` with witness k.
// Throws InvalidMoveError when the modulus side is zero.
RewriteMove replacement_move(const WeightPair& p, RewriteSide side, long long k);

// State after the move.
WeightPair replacement_step(const WeightPair& p, RewriteSide side, long long k);

// Greedy reduction: rewrite the larger coordinate to its minimum-absolute
// residue modulo twice the smaller, preferring the nonnegative residue on a
// tie. max(m, n) strictly decreases, so at most max(m, n) moves are made.
// Terminal is (1,1) when both coordinates are odd, (1,0) up to swap when
// exactly one is even. Throws BothEvenError / NotCoprimeError.
RewriteTrace reduce(const WeightPair& p);

struct PaoResult {
  OrbitSpaceData data;
  PaoOutcome outcome;
};

// Replaces the located 2-segment circle: terminal (1,1) dissolves it into
// two isolated fixed points with indices +1 and -1; terminal (1,0) turns it
// into a boundary sphere with Euler number 0. Both choices preserve the
// zero index sum and chi of the fixed set.
PaoResult apply_pao(const OrbitSpaceData& o, std::size_t circle_index);

std::string to_string(RewriteSide side);
std::string to_string(PaoOutcomeKind kind);

}  // namespace orbitspace
