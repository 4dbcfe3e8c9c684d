#include <algorithm>

#include "doctest.h"

#include "isoball/boundary.hpp"
#include "isoball/bounds.hpp"
#include "isoball/constructions.hpp"

using namespace isoball;

TEST_CASE("star and costar") {
  const auto s = star(4, 2, 1);
  const auto c = costar(4, 2, 1);
  CHECK(s.size() == 3);  // C(3,1)
  CHECK(c.size() == 3);  // C(3,2)
  CHECK(s.layer() == 2);

  std::vector<VertexSet> both = s.members();
  both.insert(both.end(), c.members().begin(), c.members().end());
  CHECK(ExplicitFamily(4, both) == ExplicitFamily(4, ExplicitFamily::full_slice(4, 2).members()));

  for (unsigned n = 2; n <= 10; ++n)
    for (unsigned r = 1; r <= n - 1; ++r)
      for (unsigned e = 1; e <= n; e += (n > 3 ? n - 1 : 1)) {
        CHECK(family_size(star(n, r, e)) == binom(n - 1, r - 1));
        CHECK(family_size(costar(n, r, e)) == binom(n - 1, r));
      }
  CHECK_THROWS_AS(star(4, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(costar(4, 4, 1), std::invalid_argument);
}

TEST_CASE("star and costar meet the matching bounds with exact ratio s/r and r/s") {
  for (unsigned n = 2; n <= 16; ++n)
    for (unsigned r = 1; r <= n - 1; ++r) {
      const unsigned s = n - r;
      const auto a0 = costar(n, r, 1);
      const auto a1 = star(n, r, 1);
      // |lower_shadow(A0)| * s == r * |A0| and |upper_shadow(A1)| * r == s * |A1|
      CHECK(Natural(lower_shadow(a0).size()) * s == Natural(a0.size()) * r);
      CHECK(Natural(upper_shadow(a1).size()) * r == Natural(a1.size()) * s);
    }
}

TEST_CASE("ball halfspace cells") {
  const auto f = ball_halfspace(4, 2, 0);
  CHECK(f.cells() == std::vector<ProfileFamily::Cell>{{0, 0}, {0, 1}, {0, 2}, {1, 1}});
  CHECK(family_size(f) == 8);

  CHECK(family_size(ball_halfspace(5, 4, 2)) == ball_size(5, 4));   // k >= R/2: everything
  CHECK(family_size(ball_halfspace(5, 4, 3)) == ball_size(5, 4));
  CHECK(ball_halfspace(4, 2, -2).empty());                          // k < -R/2: nothing
  CHECK_THROWS_AS(ball_halfspace(4, 5, 0), std::invalid_argument);
}

TEST_CASE("halfspace membership matches the set comprehension") {
  for (unsigned n = 2; n <= 10; n += 2) {
    const unsigned R = n / 2;
    for (int k = -3; k <= 3; ++k) {
      const auto f = expand_profile(ball_halfspace(n, R, k));
      const VertexSet ymask = (VertexSet(1) << (n / 2)) - 1;
      const auto universe = ExplicitFamily::full_ball(n, R).members();
      for (VertexSet x : universe) {
        const long a = popcount(x & ymask);
        const long w = popcount(x);
        const bool in_def = 2 * a <= w + 2 * k;  // |X cap Y| <= |X|/2 + k, exactly
        CHECK(f.contains(x) == in_def);
      }
    }
  }
}

TEST_CASE("slice halfspace and its sized variant") {
  const auto f = slice_halfspace(4, 2, 0);
  CHECK(f.cells() == std::vector<ProfileFamily::Cell>{{0, 2}, {1, 1}});
  CHECK(family_size(f) == 5);

  const auto f1 = slice_halfspace(4, 2, -1);
  CHECK(f1.cells() == std::vector<ProfileFamily::Cell>{{0, 2}});
  CHECK(family_size(f1) == 1);

  CHECK(family_size(slice_halfspace(4, 2, 1)) == binom(4, 2));  // k >= r/2: full slice

  for (unsigned target = 0; target <= 6; ++target) {
    const auto sized = sized_slice_halfspace(4, 2, Natural(target));
    CHECK(sized.size() == target);
  }
  CHECK_THROWS_AS(sized_slice_halfspace(4, 2, Natural(7)), std::invalid_argument);
}

TEST_CASE("sized ball halfspace hits every target exactly") {
  CHECK(sized_ball_halfspace(6, 3, Natural(0)).size() == 0);
  const Natural full = ball_size(6, 3);
  CHECK(sized_ball_halfspace(6, 3, full).size() == full);

  const Natural half = full / 2;  // 21
  const auto m = sized_ball_halfspace(6, 3, half);
  CHECK(m.size() == 21);
  const auto bound = padded_ball_boundary_upper_bound(m, 3);
  CHECK(bound.upper_bound >= family_size(ball_boundary(expand_padded(m), 3)));

  for (unsigned t = 0; t <= 42; t += 3) CHECK(sized_ball_halfspace(6, 3, Natural(t)).size() == t);

  // deterministic fill
  CHECK(sized_ball_halfspace(6, 3, half) == sized_ball_halfspace(6, 3, half));
}

TEST_CASE("sized construction interpolates between half-space levels") {
  const unsigned n = 8, R = 4;
  const Natural total = ball_size(n, R);
  for (unsigned step = 1; step <= 9; ++step) {
    const Natural target = total * step / 10;
    const auto padded = sized_ball_halfspace(n, R, target);
    // base sits between two consecutive half-space levels
    int k = -static_cast<int>(R / 2) - 1;
    while (ball_halfspace(n, R, k).size() < target) ++k;
    const auto level = ball_halfspace(n, R, k);
    const auto level_prev = ball_halfspace(n, R, k - 1);
    for (auto [a, b] : level_prev.cells()) CHECK(padded.base().is_on(a, b));
    for (auto [a, b] : padded.base().cells()) CHECK(level.is_on(a, b));
    if (padded.cut_cell()) CHECK(level.is_on(padded.cut_cell()->first, padded.cut_cell()->second));
  }
}

TEST_CASE("padded boundary sits inside the two-shell window") {
  // members of the boundary have |X cap Y| - floor(|X|/2) in {k, k+1}
  const unsigned n = 8, R = 4;
  const Natural total = ball_size(n, R);
  for (unsigned step = 1; step <= 9; step += 2) {
    const Natural target = total * step / 10;
    const auto padded = sized_ball_halfspace(n, R, target);
    int k = -static_cast<int>(R / 2) - 1;
    while (ball_halfspace(n, R, k).size() < target) ++k;
    const auto bd = ball_boundary(expand_padded(padded), R);
    const VertexSet ymask = (VertexSet(1) << (n / 2)) - 1;
    for (VertexSet x : bd.members()) {
      const long shifted =
          static_cast<long>(popcount(x & ymask)) - static_cast<long>(popcount(x) / 2);
      const bool in_window = shifted == k || shifted == k + 1;
      CHECK(in_window);
    }
  }
}

TEST_CASE("cplus companion family") {
  const auto cp = cplus(6, 2, 1);
  const auto expanded = expand_padded(PaddedProfileFamily(cp));
  REQUIRE(expanded.size() > 0);
  const auto down = lower_shadow(expanded.with_layer(3));
  const auto ck1 = expand_profile(slice_halfspace(6, 2, 0));
  for (VertexSet x : down.members()) CHECK(ck1.contains(x));

  // |C+| <= (s/(r+1)) |C| for the matching C
  const Natural cplus_size = family_size(cp);
  const Natural c_size = family_size(slice_halfspace(6, 2, 1));
  CHECK(cplus_size * 3 <= c_size * 4);  // s = 4, r+1 = 3

  CHECK(cplus(6, 2, -2).empty());
}

TEST_CASE("split by element") {
  const auto whole = split_by_element(ExplicitFamily::full_slice(4, 2), 4);
  CHECK(whole.a0.size() == 3);
  CHECK(whole.a1.size() == 3);
  CHECK(whole.a0.n() == 3);
  CHECK(whole.a0.layer() == 2);
  CHECK(whole.a1.layer() == 1);

  const auto star_split = split_by_element(star(4, 2, 4), 4);
  CHECK(star_split.a0.size() == 0);
  CHECK(star_split.a1 == ExplicitFamily::full_slice(3, 1));

  // alpha0 <= alpha <= alpha1 at the pigeonhole element, exhaustively on S_4(2)
  const auto slice = ExplicitFamily::full_slice(4, 2);
  for (std::uint32_t mask = 1; mask < 64; ++mask) {
    std::vector<VertexSet> members;
    for (std::size_t i = 0; i < 6; ++i)
      if (mask & (1u << i)) members.push_back(slice.members()[i]);
    ExplicitFamily f(4, std::move(members), 2);
    const unsigned e = pigeonhole_element(f);
    const auto split = split_by_element(f, e);
    CHECK(split.alpha0 <= split.alpha);
    CHECK(split.alpha <= split.alpha1);
  }
}

TEST_CASE("pigeonhole element") {
  CHECK(pigeonhole_element(ExplicitFamily(4, {0b0011, 0b0101, 0b1001}, 2)) == 1);
  CHECK(pigeonhole_element(ExplicitFamily(4, {0b0011}, 2)) == 1);
  CHECK(pigeonhole_element(ExplicitFamily::full_slice(4, 2)) == 1);
  CHECK_THROWS_AS(pigeonhole_element(ExplicitFamily(4, {}, 2)), std::invalid_argument);
}

TEST_CASE("complement family") {
  const auto f = complement_family(ExplicitFamily(3, {0b001}, 1));
  CHECK(f.members() == std::vector<VertexSet>{0b110});
  CHECK(f.layer() == 2);
  CHECK(cube_boundary(f).size() == cube_boundary(ExplicitFamily(3, {0b001}, 1)).size());

  CHECK(complement_family(ExplicitFamily::full_slice(4, 2)) ==
        ExplicitFamily::full_slice(4, 2));

  // boundary sizes invariant under complement, exhaustively on two slices
  for (std::uint32_t mask = 0; mask < 64; ++mask) {
    std::vector<VertexSet> members;
    const auto slice = ExplicitFamily::full_slice(4, 2);
    for (std::size_t i = 0; i < 6; ++i)
      if (mask & (1u << i)) members.push_back(slice.members()[i]);
    ExplicitFamily f(4, std::move(members), 2);
    CHECK(cube_boundary(f).size() == cube_boundary(complement_family(f)).size());
    CHECK(f.size() == complement_family(f).size());
  }
  for (std::uint32_t mask = 0; mask < 8; ++mask) {
    std::vector<VertexSet> members;
    const auto slice = ExplicitFamily::full_slice(3, 1);
    for (std::size_t i = 0; i < 3; ++i)
      if (mask & (1u << i)) members.push_back(slice.members()[i]);
    ExplicitFamily f(3, std::move(members), 1);
    CHECK(cube_boundary(f).size() == cube_boundary(complement_family(f)).size());
  }
}
