#include <doctest.h>

#include <functional>
#include <numeric>
#include <random>

#include "orbitspace/invariants.hpp"
#include "orbitspace/surgery.hpp"
#include "test_helpers.hpp"

using namespace orbitspace;
using orbitspace::testing::circle_config;

namespace {

SumWord random_word(std::mt19937& rng) {
  SumWord w;
  std::uniform_int_distribution<int> len(0, 4);
  std::uniform_int_distribution<int> kind(0, 3);
  const int n = len(rng);
  for (int i = 0; i < n; ++i) {
    const Summand s = static_cast<Summand>(kind(rng));
    w = connected_sum(w, SumWord::of(s));
  }
  return w;
}

// All legal one-circle configurations with k segments and multiplicities
// bounded by w, generated by depth-first extension of coprime chains.
void legal_circles(int k, int w, std::vector<int>& prefix,
                   const std::function<void(const std::vector<int>&)>& emit) {
  if (static_cast<int>(prefix.size()) == k) {
    if (std::gcd(prefix.front(), prefix.back()) == 1) emit(prefix);
    return;
  }
  for (int a = 2; a <= w; ++a) {
    if (!prefix.empty() && std::gcd(prefix.back(), a) != 1) continue;
    prefix.push_back(a);
    legal_circles(k, w, prefix, emit);
    prefix.pop_back();
  }
}

}  // namespace

TEST_SUITE("surgery") {

TEST_CASE("summand characteristics") {
  CHECK(chi(Summand::S4) == 2);
  CHECK(chi(Summand::CP2) == 3);
  CHECK(chi(Summand::CP2bar) == 3);
  CHECK(chi(Summand::S2xS2) == 4);
}

TEST_CASE("connected sum golden cases") {
  const SumWord s4 = SumWord::identity();
  const SumWord cp2 = SumWord::of(Summand::CP2);
  CHECK(connected_sum(s4, cp2) == cp2);
  CHECK(connected_sum(s4, s4) == s4);

  const SumWord two = connected_sum(cp2, cp2);
  CHECK(two.summands.size() == 2);
  CHECK(chi(two) == 4);
  CHECK(to_string(two) == "CP2 # CP2");
  CHECK(to_string(s4) == "S4");
}

TEST_CASE("connected sum is a commutative monoid with the right chi") {
  std::mt19937 rng(424242);
  for (int i = 0; i < 1000; ++i) {
    const SumWord a = random_word(rng);
    const SumWord b = random_word(rng);
    const SumWord c = random_word(rng);
    CHECK(connected_sum(a, b) == connected_sum(b, a));
    CHECK(connected_sum(connected_sum(a, b), c) ==
          connected_sum(a, connected_sum(b, c)));
    CHECK(connected_sum(a, SumWord::identity()) == a);
    CHECK(chi(connected_sum(a, b)) == chi(a) + chi(b) - 2);
  }
}

TEST_CASE("split golden case") {
  const OrbitSpaceData m = circle_config({2, 5, 3});
  const Decomposition d = split_circle(m, 0, 0);

  REQUIRE(d.x_part.circles.size() == 1);
  CHECK(d.x_part.circles[0].segments[0].alpha == 2);
  CHECK(d.x_part.circles[0].segments[1].alpha == 5);

  REQUIRE(d.y_part.circles.size() == 1);
  CHECK(d.y_part.circles[0].unknotted);
  CHECK(d.y_part.circles[0].segments.size() == 3);
  CHECK(d.y_part.boundary_spheres.empty());
  CHECK(d.y_part.points.empty());
  CHECK(d.y_part.arcs.empty());

  CHECK(validate(d.x_part).legal);
  CHECK(validate(d.y_part).legal);
  CHECK(euler_char_fixed_set(d.x_part) + euler_char_fixed_set(d.y_part) - 2 ==
        euler_char_fixed_set(m));
}

TEST_CASE("split requires three segments") {
  CHECK_THROWS_AS(split_circle(circle_config({2, 3}), 0, 0), NotApplicableError);
  CHECK_THROWS_AS(split_circle(circle_config({2, 3, 5}), 0, 3), NotApplicableError);
  CHECK_THROWS_AS(split_circle(circle_config({2, 3, 5}), 1, 0), NotApplicableError);
}

TEST_CASE("every split of every small circle satisfies the bookkeeping") {
  for (int k = 3; k <= 5; ++k) {
    std::vector<int> prefix;
    legal_circles(k, k <= 4 ? 9 : 6, prefix, [&](const std::vector<int>& alphas) {
      const OrbitSpaceData m = circle_config(alphas);
      REQUIRE(validate(m).legal);
      for (int j = 0; j < k; ++j) {
        const Decomposition d = split_circle(m, 0, j);
        CHECK(validate(d.x_part).legal);
        CHECK(validate(d.y_part).legal);
        CHECK(d.x_part.circles[0].segments.size() == 2);
        CHECK(d.x_part.circles[0].segments[0].alpha ==
              alphas[static_cast<std::size_t>(j)]);
        CHECK(d.x_part.circles[0].segments[1].alpha ==
              alphas[static_cast<std::size_t>((j + 1) % k)]);
        CHECK(d.y_part.circles[0].segments.size() == alphas.size());
        CHECK(euler_char_fixed_set(d.x_part) + euler_char_fixed_set(d.y_part) -
                  2 ==
              euler_char_fixed_set(m));
      }
    });
  }
}

}  // TEST_SUITE
