#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "orbitspace/orbit_data.hpp"

namespace orbitspace {

enum class Summand { S4, CP2, CP2bar, S2xS2 };

int chi(Summand s);
std::string to_string(Summand s);

// Connected-sum word. The empty word denotes S^4, the identity; S4 entries
// are never stored. Summands are kept sorted, so equal words compare equal.
struct SumWord {
  std::vector<Summand> summands;
  auto operator<=>(const SumWord&) const = default;

  static SumWord identity() { return {}; }
  static SumWord of(Summand s);
};

int chi(const SumWord& w);
std::string to_string(const SumWord& w);

// Multiset union; commutative, associative, S^4 the identity.
// chi(a # b) = chi(a) + chi(b) - 2.
SumWord connected_sum(const SumWord& a, const SumWord& b);

// Result of decomposing a k >= 3 circle at a fixed point: X keeps the two
// segments adjacent to the split point as a 2-segment circle, Y is a bare
// S^3 carrying one unknotted circle with all original segments.
struct Decomposition {
  OrbitSpaceData x_part;
  OrbitSpaceData y_part;
  int split_point = 0;
};

// Junction j of a circle sits between segments j and j+1 (mod k).
Decomposition split_circle(const OrbitSpaceData& o, std::size_t circle_index,
                           int split_point);

}  // namespace orbitspace
