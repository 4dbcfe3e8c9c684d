#include <random>

#include "doctest.h"

#include "isoball/boundary.hpp"
#include "isoball/constructions.hpp"

using namespace isoball;

namespace {

// reference boundary straight from the definition: walk the whole cube
ExplicitFamily brute_cube_boundary(const ExplicitFamily& f) {
  std::vector<VertexSet> out;
  const VertexSet top = f.full_mask();
  for (VertexSet v = 0;; ++v) {
    if (!f.contains(v)) {
      for (unsigned i = 0; i < f.n(); ++i)
        if (f.contains(v ^ (VertexSet(1) << i))) {
          out.push_back(v);
          break;
        }
    }
    if (v == top) break;
  }
  return ExplicitFamily(f.n(), std::move(out));
}

// subsets of the slice S_n(r) indexed by a bitmask over its members
ExplicitFamily subfamily(const ExplicitFamily& slice, std::uint32_t mask) {
  std::vector<VertexSet> members;
  for (std::size_t i = 0; i < slice.members().size(); ++i)
    if (mask & (std::uint32_t(1) << i)) members.push_back(slice.members()[i]);
  return ExplicitFamily(slice.n(), std::move(members), *slice.layer());
}

}  // namespace

TEST_CASE("lower shadow") {
  const auto a0 = costar(4, 2, 1);
  const auto lo = lower_shadow(a0);
  CHECK(lo.members() == std::vector<VertexSet>{0b0010, 0b0100, 0b1000});
  CHECK(lo.layer() == 1);
  CHECK(lo.size() == 3);  // (r/s)|A0| with r = s = 2

  const auto single = lower_shadow(ExplicitFamily(3, {0b011}, 2));
  CHECK(single.members() == std::vector<VertexSet>{0b001, 0b010});

  const auto full = lower_shadow(ExplicitFamily::full_slice(4, 2));
  CHECK(full.size() == 4);

  CHECK_THROWS_AS(lower_shadow(ExplicitFamily(4, {0b0011})), std::invalid_argument);
  CHECK_THROWS_AS(lower_shadow(ExplicitFamily(4, {0}, 0)), std::invalid_argument);
}

TEST_CASE("upper shadow") {
  const auto a1 = star(4, 2, 1);
  const auto up = upper_shadow(a1);
  CHECK(up.members() == std::vector<VertexSet>{0b0111, 0b1011, 0b1101});
  CHECK(up.layer() == 3);
  // |shadow| = (s/r)|A1| exactly
  CHECK(up.size() == a1.size());

  const auto single = upper_shadow(ExplicitFamily(3, {0b001}, 1));
  CHECK(single.members() == std::vector<VertexSet>{0b011, 0b101});

  const auto a0up = upper_shadow(costar(4, 2, 1));
  CHECK(a0up.size() == 4);  // every 3-set contains one of {2,3},{2,4},{3,4}

  CHECK_THROWS_AS(upper_shadow(ExplicitFamily(4, {0b0011})), std::invalid_argument);
  CHECK_THROWS_AS(upper_shadow(ExplicitFamily(3, {0b111}, 3)), std::invalid_argument);
}

TEST_CASE("cube boundary") {
  const auto star_origin = cube_boundary(ExplicitFamily(3, {0}));
  CHECK(star_origin.members() == std::vector<VertexSet>{1, 2, 4});

  const auto ball1 = cube_boundary(ExplicitFamily::full_ball(4, 1));
  CHECK(ball1 == ExplicitFamily::full_slice(4, 2).with_detected_layer());
  CHECK(ball1.size() == 6);

  CHECK(cube_boundary(ExplicitFamily::full_ball(3, 3)).size() == 0);
}

TEST_CASE("ball boundary") {
  CHECK(ball_boundary(ExplicitFamily::full_ball(4, 1), 2).size() == 6);
  CHECK(ball_boundary(ExplicitFamily::full_ball(4, 2), 2).size() == 0);
  CHECK(ball_boundary(ExplicitFamily(3, {0}), 1).size() == 3);
  CHECK_THROWS_AS(ball_boundary(ExplicitFamily(3, {0b111}), 2), std::invalid_argument);
}

TEST_CASE("ball boundary of a ball is the next slice") {
  for (unsigned n = 1; n <= 8; ++n)
    for (unsigned R = 1; R <= n; ++R)
      for (unsigned r = 0; r < R; ++r) {
        const auto bd = ball_boundary(ExplicitFamily::full_ball(n, r), R);
        CHECK(bd == ExplicitFamily::full_slice(n, r + 1).with_detected_layer());
      }
}

TEST_CASE("boundary layer profile") {
  const auto b1 = boundary_layer_profile(ExplicitFamily::full_ball(4, 1), 2);
  CHECK(b1 == std::vector<Natural>{0, 0, 6});
  const auto b2 = boundary_layer_profile(ExplicitFamily(4, {0}), 2);
  CHECK(b2 == std::vector<Natural>{0, 4, 0});
  const auto b3 = boundary_layer_profile(ExplicitFamily::full_ball(4, 2), 2);
  CHECK(b3 == std::vector<Natural>{0, 0, 0});
}

TEST_CASE("boundary layer profile sums to ball boundary size") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const unsigned n = 2 + static_cast<unsigned>(rng() % 7);
    const unsigned R = 1 + static_cast<unsigned>(rng() % n);
    const auto universe = ExplicitFamily::full_ball(n, R).members();
    std::vector<VertexSet> members;
    for (VertexSet v : universe)
      if (rng() & 1) members.push_back(v);
    ExplicitFamily f(n, std::move(members));
    const auto layers = boundary_layer_profile(f, R);
    Natural total = 0;
    for (const auto& b : layers) total += b;
    CHECK(total == family_size(ball_boundary(f, R)));
  }
}

TEST_CASE("cube boundary of a layer family is the disjoint shadow union") {
  const auto slice = ExplicitFamily::full_slice(4, 2);
  for (std::uint32_t mask = 0; mask < 64; ++mask) {
    const auto f = subfamily(slice, mask);
    const auto bd = cube_boundary(f);
    std::vector<VertexSet> expected;
    if (f.size() > 0) {
      const auto lower = lower_shadow(f);
      const auto upper = upper_shadow(f);
      expected.insert(expected.end(), lower.members().begin(), lower.members().end());
      expected.insert(expected.end(), upper.members().begin(), upper.members().end());
    }
    CHECK(bd == ExplicitFamily(4, expected));
    CHECK(bd == brute_cube_boundary(f));
  }
}

TEST_CASE("superset relations behind the two boundary estimates") {
  const auto full = superset_relations_check(ExplicitFamily::full_slice(4, 2), 4);
  CHECK(full.all_hold);
  CHECK(full.slack_first >= 0);

  const auto tiny = superset_relations_check(ExplicitFamily(4, {0b1001}, 2), 4);
  CHECK(tiny.all_hold);

  const auto empty = superset_relations_check(ExplicitFamily(4, {}, 2), 4);
  CHECK(empty.all_hold);
  CHECK(empty.slack_first == 0);
  CHECK(empty.slack_second == 0);

  // exhaustive over S_4(2) for every split element
  const auto slice = ExplicitFamily::full_slice(4, 2);
  for (std::uint32_t mask = 0; mask < 64; ++mask)
    for (unsigned e = 1; e <= 4; ++e)
      CHECK(superset_relations_check(subfamily(slice, mask), e).all_hold);

  // boundary layers r = 1 and r = n-1
  for (std::uint32_t mask = 0; mask < 16; ++mask) {
    CHECK(superset_relations_check(subfamily(ExplicitFamily::full_slice(4, 1), mask), 2).all_hold);
    CHECK(superset_relations_check(subfamily(ExplicitFamily::full_slice(4, 3), mask), 2).all_hold);
  }
}

TEST_CASE("profile cube boundary") {
  ProfileFamily origin(4, 2);
  origin.set(0, 0);
  const auto bd = profile_cube_boundary(origin);
  CHECK(bd.cells() == std::vector<ProfileFamily::Cell>{{0, 1}, {1, 0}});

  const auto ball1 = profile_of(ExplicitFamily::full_ball(4, 1), 2);
  const auto bd1 = profile_cube_boundary(ball1);
  CHECK(bd1.cells() == std::vector<ProfileFamily::Cell>{{0, 2}, {1, 1}, {2, 0}});

  ProfileFamily full(3, 1);
  for (unsigned a = 0; a <= 1; ++a)
    for (unsigned b = 0; b <= 2; ++b) full.set(a, b);
  CHECK(profile_cube_boundary(full).empty());
}

TEST_CASE("profile ball boundary") {
  const auto ball1 = profile_of(ExplicitFamily::full_ball(6, 1), 3);
  const auto bd = profile_ball_boundary(ball1, 2);
  CHECK(family_size(bd) == 15);
  for (auto [a, b] : bd.cells()) CHECK(a + b == 2);

  const auto ball3 = profile_of(ExplicitFamily::full_ball(6, 3), 3);
  CHECK(profile_ball_boundary(ball3, 3).empty());

  ProfileFamily outside(6, 3);
  outside.set(3, 2);
  CHECK_THROWS_AS(profile_ball_boundary(outside, 3), std::invalid_argument);
}

TEST_CASE("profile boundary equals explicit boundary (oracle spot check)") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 500; ++trial) {
    const unsigned n = 2 + static_cast<unsigned>(rng() % 7);  // 2..8
    const unsigned m = static_cast<unsigned>(rng() % (n + 1));
    ProfileFamily p(n, m);
    for (unsigned a = 0; a <= m; ++a)
      for (unsigned b = 0; b <= n - m; ++b)
        if (rng() & 1) p.set(a, b);
    const auto expanded = expand_profile(p);
    const auto expected = cube_boundary(expanded);
    const auto via_profile = expand_profile(profile_cube_boundary(p));
    CHECK(via_profile == expected);
  }
}

TEST_CASE("padded boundary upper bound dominates the exact boundary") {
  for (unsigned n = 4; n <= 8; ++n) {
    const unsigned R = n / 2;
    const Natural total = ball_size(n, R);
    for (unsigned step = 1; step <= 6; ++step) {
      const Natural target = total * step / 7;
      const auto padded = sized_ball_halfspace(n, R, target);
      REQUIRE(padded.size() == target);
      const auto ub = padded_ball_boundary_upper_bound(padded, R);
      const auto exact = family_size(ball_boundary(expand_padded(padded), R));
      CHECK(ub.upper_bound >= exact);
      if (!padded.cut_cell()) CHECK(ub.upper_bound == exact);
    }
  }
}

TEST_CASE("half-space profile boundary matches the explicit one at n = 6") {
  const auto c0 = ball_halfspace(6, 3, 0);
  const auto profile_bd = profile_ball_boundary(c0, 3);
  const auto explicit_bd = ball_boundary(expand_profile(c0), 3);
  CHECK(expand_profile(profile_bd) == explicit_bd);
}
