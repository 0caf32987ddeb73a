#pragma once

#include <numeric>
#include <random>
#include <vector>

#include "orbitspace/orbit_data.hpp"

namespace orbitspace::testing {

// Deterministic generator of legal (not necessarily admissible) orbit data.
// Zero-sum is restored at the end by balancing points, or by absorbing the
// imbalance into a boundary sphere when one exists.
class RandomLegalData {
 public:
  explicit RandomLegalData(unsigned seed) : rng_(seed) {}

  OrbitSpaceData next() {
    OrbitSpaceData o;
    const int spheres = pick(0, 2);
    const int points = pick(0, 3);
    const int arcs = pick(0, 2);
    const int circles = pick(0, 2);

    for (int i = 0; i < spheres; ++i) o.boundary_spheres.push_back({pick(-4, 4)});
    for (int i = 0; i < points; ++i) o.points.push_back({pick(0, 1) ? +1 : -1});
    for (int i = 0; i < arcs; ++i) o.arcs.push_back(random_arc());
    for (int i = 0; i < circles; ++i) o.circles.push_back(random_circle());

    int imbalance = total_index(o);
    if (imbalance != 0 && !o.boundary_spheres.empty()) {
      o.boundary_spheres[0].euler_number -= imbalance;
    } else {
      while (imbalance > 0) { o.points.push_back({-1}); --imbalance; }
      while (imbalance < 0) { o.points.push_back({+1}); ++imbalance; }
    }
    if (o.boundary_spheres.empty() && o.points.empty() && o.arcs.empty() &&
        o.circles.empty()) {
      o.points.push_back({+1});
      o.points.push_back({-1});
    }
    return o;
  }

 private:
  int pick(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }

  SeifertPair random_pair(int previous_alpha) {
    SeifertPair sp;
    do {
      sp.alpha = pick(2, 12);
    } while (previous_alpha != 0 && std::gcd(sp.alpha, previous_alpha) != 1);
    if (pick(0, 2) == 0) {
      int beta;
      do {
        beta = pick(1, sp.alpha - 1);
      } while (std::gcd(sp.alpha, beta) != 1);
      sp.beta = beta;
    }
    return sp;
  }

  WeightedArc random_arc() {
    WeightedArc arc;
    const int pairs = pick(1, 3);
    int prev = 0;
    for (int i = 0; i < pairs; ++i) {
      arc.pairs.push_back(random_pair(prev));
      prev = arc.pairs.back().alpha;
    }
    arc.b_start = pick(-3, 3);
    arc.b_end = arc.b_start + pick(-1, 1);
    return arc;
  }

  WeightedCircle random_circle() {
    WeightedCircle circle;
    circle.unknotted = pick(0, 1) == 1;
    for (int attempt = 0; attempt < 1000; ++attempt) {
      circle.segments.clear();
      const int k = pick(2, 4);
      int prev = 0;
      for (int i = 0; i < k; ++i) {
        circle.segments.push_back(random_pair(prev));
        prev = circle.segments.back().alpha;
      }
      if (std::gcd(circle.segments.front().alpha,
                   circle.segments.back().alpha) == 1) {
        return circle;
      }
    }
    circle.segments = {{2, std::nullopt}, {3, std::nullopt}};
    return circle;
  }

  std::mt19937 rng_;
};

inline OrbitSpaceData circle_config(std::vector<int> alphas, bool unknotted = true) {
  OrbitSpaceData o;
  WeightedCircle c;
  for (int a : alphas) c.segments.push_back({a, std::nullopt});
  c.unknotted = unknotted;
  o.circles.push_back(c);
  return o;
}

inline OrbitSpaceData two_points() {
  OrbitSpaceData o;
  o.points = {{+1}, {-1}};
  return o;
}

}  // namespace orbitspace::testing
