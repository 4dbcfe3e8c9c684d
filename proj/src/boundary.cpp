#include "isoball/boundary.hpp"

#include <algorithm>

#include "isoball/constructions.hpp"

namespace isoball {

namespace {

std::vector<VertexSet> sorted_unique(std::vector<VertexSet> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool subset_of(const std::vector<VertexSet>& inner, const std::vector<VertexSet>& outer) {
  // both sorted
  return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

}  // namespace

ExplicitFamily lower_shadow(const ExplicitFamily& f) {
  if (!f.layer()) throw std::invalid_argument("lower_shadow: family must be layer-tagged");
  const unsigned r = *f.layer();
  if (r < 1) throw std::invalid_argument("lower_shadow: layer r >= 1 required");
  std::vector<VertexSet> out;
  out.reserve(f.size() * r);
  for (VertexSet x : f.members()) {
    VertexSet rest = x;
    while (rest) {
      const VertexSet bit = rest & (~rest + 1);
      out.push_back(x ^ bit);
      rest ^= bit;
    }
  }
  return ExplicitFamily(f.n(), sorted_unique(std::move(out)), r - 1);
}

ExplicitFamily upper_shadow(const ExplicitFamily& f) {
  if (!f.layer()) throw std::invalid_argument("upper_shadow: family must be layer-tagged");
  const unsigned r = *f.layer();
  if (r + 1 > f.n()) throw std::invalid_argument("upper_shadow: layer r <= n-1 required");
  const VertexSet full = f.full_mask();
  std::vector<VertexSet> out;
  out.reserve(f.size() * (f.n() - r));
  for (VertexSet x : f.members()) {
    VertexSet rest = full & ~x;
    while (rest) {
      const VertexSet bit = rest & (~rest + 1);
      out.push_back(x | bit);
      rest ^= bit;
    }
  }
  return ExplicitFamily(f.n(), sorted_unique(std::move(out)), r + 1);
}

ExplicitFamily cube_boundary(const ExplicitFamily& f) {
  std::vector<VertexSet> out;
  out.reserve(f.size() * f.n());
  for (VertexSet x : f.members())
    for (unsigned i = 0; i < f.n(); ++i) {
      const VertexSet y = x ^ (VertexSet(1) << i);
      if (!f.contains(y)) out.push_back(y);
    }
  return ExplicitFamily(f.n(), sorted_unique(std::move(out)));
}

ExplicitFamily ball_boundary(const ExplicitFamily& f, unsigned R) {
  for (VertexSet x : f.members())
    if (popcount(x) > R)
      throw std::invalid_argument("ball_boundary: member outside B_n(R)");
  const ExplicitFamily bd = cube_boundary(f);
  std::vector<VertexSet> out;
  for (VertexSet x : bd.members())
    if (popcount(x) <= R) out.push_back(x);
  return ExplicitFamily(f.n(), std::move(out));
}

std::vector<Natural> boundary_layer_profile(const ExplicitFamily& f, unsigned R) {
  for (VertexSet x : f.members())
    if (popcount(x) > R)
      throw std::invalid_argument("boundary_layer_profile: member outside B_n(R)");
  const ExplicitFamily bd = cube_boundary(f);
  std::vector<Natural> b(R + 1, Natural(0));
  for (VertexSet x : bd.members()) {
    const unsigned w = popcount(x);
    if (w <= R) b[w] += 1;
  }
  return b;
}

SupersetRelations superset_relations_check(const ExplicitFamily& f, unsigned element) {
  if (!f.layer()) throw std::invalid_argument("superset_relations_check: layer tag required");
  const unsigned n = f.n();
  const unsigned r = *f.layer();
  if (r < 1 || r > n - 1)
    throw std::invalid_argument("superset_relations_check: 1 <= r <= n-1 required");
  if (element < 1 || element > n)
    throw std::invalid_argument("superset_relations_check: element outside [n]");

  const auto split = split_by_element(f, element);
  const ExplicitFamily& a0 = split.a0;
  const ExplicitFamily& a1 = split.a1;

  const ExplicitFamily bd = cube_boundary(f);
  const ExplicitFamily bd_upper = upper_shadow(f);
  const ExplicitFamily bd_lower = r >= 1 ? lower_shadow(f) : ExplicitFamily::empty(n);

  // compress out `element` so families over [n-1] are comparable
  auto without_element = [&](const ExplicitFamily& g, bool want_element) {
    std::vector<VertexSet> out;
    for (VertexSet x : g.members()) {
      const bool has = (x >> (element - 1)) & 1u;
      if (has == want_element) out.push_back(drop_element(x, element));
    }
    return sorted_unique(std::move(out));
  };

  const auto bd_without = without_element(bd, false);
  const auto bd_with = without_element(bd, true);
  const auto bd_upper_without = without_element(bd_upper, false);
  const auto bd_lower_without = without_element(bd_lower, false);

  const ExplicitFamily bd_a0 = cube_boundary(a0);
  const ExplicitFamily bd_a1 = cube_boundary(a1);
  const ExplicitFamily up_a0 =
      *a0.layer() + 1 <= a0.n() ? upper_shadow(a0) : ExplicitFamily::empty(a0.n());

  SupersetRelations rel;
  rel.lower_a0_included = subset_of(bd_a0.members(), bd_without);
  rel.lifted_a1_included = subset_of(bd_a1.members(), bd_with);
  rel.upper_a0_included = subset_of(up_a0.members(), bd_upper_without);
  rel.a1_in_lower = subset_of(a1.members(), bd_lower_without);
  rel.slack_first = Integer(static_cast<unsigned long>(bd.size())) -
                    static_cast<unsigned long>(bd_a0.size()) -
                    static_cast<unsigned long>(bd_a1.size());
  rel.slack_second = Integer(static_cast<unsigned long>(bd.size())) -
                     static_cast<unsigned long>(bd_a1.size()) -
                     static_cast<unsigned long>(up_a0.size()) -
                     static_cast<unsigned long>(a1.size());
  rel.all_hold = rel.lower_a0_included && rel.lifted_a1_included && rel.upper_a0_included &&
                 rel.a1_in_lower && sgn(rel.slack_first) >= 0 && sgn(rel.slack_second) >= 0;
  return rel;
}

ProfileFamily profile_cube_boundary(const ProfileFamily& p) {
  const unsigned n = p.n(), m = p.m();
  ProfileFamily out(n, m);
  auto on = [&](int a, int b) {
    if (a < 0 || b < 0 || a > static_cast<int>(m) || b > static_cast<int>(n - m)) return false;
    return p.is_on(static_cast<unsigned>(a), static_cast<unsigned>(b));
  };
  for (unsigned a = 0; a <= m; ++a)
    for (unsigned b = 0; b <= n - m; ++b) {
      if (p.is_on(a, b)) continue;
      const int ia = static_cast<int>(a), ib = static_cast<int>(b);
      if (on(ia - 1, ib) || on(ia + 1, ib) || on(ia, ib - 1) || on(ia, ib + 1))
        out.set(a, b);
    }
  return out;
}

ProfileFamily profile_ball_boundary(const ProfileFamily& p, unsigned R) {
  if (auto w = p.max_weight(); w && *w > R)
    throw std::invalid_argument("profile_ball_boundary: on-cell outside B_n(R)");
  ProfileFamily bd = profile_cube_boundary(p);
  ProfileFamily out(p.n(), p.m());
  for (auto [a, b] : bd.cells())
    if (a + b <= R) out.set(a, b);
  return out;
}

PaddedBoundaryBound padded_ball_boundary_upper_bound(const PaddedProfileFamily& p, unsigned R) {
  ProfileFamily occupied = p.base();
  Natural cut_remainder = 0;
  if (p.cut_cell()) {
    const auto [a, b] = *p.cut_cell();
    if (a + b > R)
      throw std::invalid_argument("padded_ball_boundary_upper_bound: cut cell outside ball");
    occupied.set(a, b);
    cut_remainder = occupied.cell_capacity(a, b) - p.taken();
  }
  ProfileFamily bd = profile_ball_boundary(occupied, R);
  PaddedBoundaryBound out{bd.size() + cut_remainder, std::move(bd), std::move(cut_remainder)};
  return out;
}

}  // namespace isoball
