#include "orbitspace/surgery.hpp"

#include <algorithm>
#include <numeric>

namespace orbitspace {

int chi(Summand s) {
  switch (s) {
    case Summand::S4: return 2;
    case Summand::CP2: return 3;
    case Summand::CP2bar: return 3;
    case Summand::S2xS2: return 4;
  }
  return 2;
}

std::string to_string(Summand s) {
  switch (s) {
    case Summand::S4: return "S4";
    case Summand::CP2: return "CP2";
    case Summand::CP2bar: return "-CP2";
    case Summand::S2xS2: return "S2xS2";
  }
  return "S4";
}

SumWord SumWord::of(Summand s) {
  if (s == Summand::S4) return {};
  SumWord w;
  w.summands.push_back(s);
  return w;
}

int chi(const SumWord& w) {
  int total = 2;
  for (Summand s : w.summands) total += chi(s) - 2;
  return total;
}

std::string to_string(const SumWord& w) {
  if (w.summands.empty()) return "S4";
  std::string out;
  for (std::size_t i = 0; i < w.summands.size(); ++i) {
    if (i > 0) out += " # ";
    out += to_string(w.summands[i]);
  }
  return out;
}

SumWord connected_sum(const SumWord& a, const SumWord& b) {
  SumWord out = a;
  out.summands.insert(out.summands.end(), b.summands.begin(), b.summands.end());
  std::sort(out.summands.begin(), out.summands.end());
  return out;
}

Decomposition split_circle(const OrbitSpaceData& o, std::size_t circle_index,
                           int split_point) {
  if (!validate(o).legal) {
    throw IllegalDataError("split_circle requires legal orbit data");
  }
  if (circle_index >= o.circles.size()) {
    throw NotApplicableError("no circle at index " + std::to_string(circle_index));
  }
  const auto& circle = o.circles[circle_index];
  const int k = static_cast<int>(circle.segments.size());
  if (k < 3) {
    throw NotApplicableError(
        "decomposition applies to circles with at least three segments, got " +
        std::to_string(k));
  }
  if (split_point < 0 || split_point >= k) {
    throw NotApplicableError("split point out of range");
  }

  const SeifertPair& left = circle.segments[static_cast<std::size_t>(split_point)];
  const SeifertPair& right =
      circle.segments[static_cast<std::size_t>((split_point + 1) % k)];
  if (std::gcd(left.alpha, right.alpha) != 1) {
    throw IllegalSplitError("segments adjacent to the split point are not coprime");
  }

  Decomposition d;
  d.split_point = split_point;

  d.x_part = o;
  WeightedCircle x_circle;
  x_circle.segments = {left, right};
  x_circle.unknotted = circle.unknotted;
  d.x_part.circles[circle_index] = x_circle;

  WeightedCircle y_circle;
  y_circle.segments = circle.segments;
  y_circle.unknotted = true;  // trivially embedded by construction
  d.y_part.circles.push_back(y_circle);

  return d;
}

}  // namespace orbitspace
