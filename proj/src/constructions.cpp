#include "isoball/constructions.hpp"

#include <algorithm>
#include <functional>

namespace isoball {

VertexSet drop_element(VertexSet x, unsigned element) {
  const VertexSet low = x & ((VertexSet(1) << (element - 1)) - 1);
  const VertexSet high = x >> element;
  return low | (high << (element - 1));
}

namespace {

// inverse of drop_element: reinsert a slot for `element`, optionally set
VertexSet lift_element(VertexSet x, unsigned element, bool set_it) {
  const VertexSet low = x & ((VertexSet(1) << (element - 1)) - 1);
  const VertexSet high = x >> (element - 1);
  VertexSet out = low | (high << element);
  if (set_it) out |= VertexSet(1) << (element - 1);
  return out;
}

void check_star_args(unsigned n, unsigned r, unsigned element) {
  if (n > ExplicitFamily::kMaxN) throw std::invalid_argument("star/costar: n too large");
  if (r < 1 || r > n - 1) throw std::invalid_argument("star/costar: 1 <= r <= n-1 required");
  if (element < 1 || element > n) throw std::invalid_argument("star/costar: element outside [n]");
}

}  // namespace

ExplicitFamily star(unsigned n, unsigned r, unsigned element) {
  check_star_args(n, r, element);
  std::vector<VertexSet> out;
  bits::for_each_combination(n - 1, r - 1, [&](std::uint64_t w) {
    out.push_back(lift_element(static_cast<VertexSet>(w), element, true));
  });
  return ExplicitFamily(n, std::move(out), r);
}

ExplicitFamily costar(unsigned n, unsigned r, unsigned element) {
  check_star_args(n, r, element);
  std::vector<VertexSet> out;
  bits::for_each_combination(n - 1, r, [&](std::uint64_t w) {
    out.push_back(lift_element(static_cast<VertexSet>(w), element, false));
  });
  return ExplicitFamily(n, std::move(out), r);
}

ProfileFamily ball_halfspace(unsigned n, unsigned R, int k) {
  if (R > n) throw std::invalid_argument("ball_halfspace: R <= n required");
  const unsigned m = n / 2;
  ProfileFamily p(n, m);
  for (unsigned a = 0; a <= m; ++a)
    for (unsigned b = 0; b <= n - m; ++b) {
      if (a + b > R) continue;
      if (static_cast<long>(a) - static_cast<long>(b) <= 2L * k) p.set(a, b);
    }
  return p;
}

namespace {

// shared fill logic: base = low(k-1), then cells of low(k) \ low(k-1) in
// lexicographic (a+b, a) order, whole cells into the base, remainder as cut
PaddedProfileFamily fill_to_target(const Natural& target, int kmin, int kmax,
                                   const std::function<ProfileFamily(int)>& level) {
  int k = kmin;
  Natural level_size = level(k).size();
  while (level_size < target) {
    ++k;
    if (k > kmax) throw std::logic_error("sized construction: no level reaches target");
    level_size = level(k).size();
  }
  ProfileFamily base = level(k - 1);
  const ProfileFamily top = level(k);
  Natural remaining = target - base.size();

  std::vector<ProfileFamily::Cell> delta;
  for (auto cell : top.cells())
    if (!base.is_on(cell.first, cell.second)) delta.push_back(cell);
  std::sort(delta.begin(), delta.end(), [](const auto& x, const auto& y) {
    const unsigned wx = x.first + x.second, wy = y.first + y.second;
    if (wx != wy) return wx < wy;
    return x.first < y.first;
  });

  std::optional<ProfileFamily::Cell> cut;
  Natural taken = 0;
  for (auto [a, b] : delta) {
    if (sgn(remaining) == 0) break;
    const Natural cap = base.cell_capacity(a, b);
    if (remaining >= cap) {
      base.set(a, b);
      remaining -= cap;
    } else {
      cut = ProfileFamily::Cell{a, b};
      taken = remaining;
      remaining = 0;
    }
  }
  if (sgn(remaining) != 0) throw std::logic_error("sized construction: fill fell short");
  PaddedProfileFamily out(std::move(base), cut, std::move(taken));
  if (out.size() != target) throw std::logic_error("sized construction: size mismatch");
  return out;
}

}  // namespace

PaddedProfileFamily sized_ball_halfspace(unsigned n, unsigned R, const Natural& target) {
  if (R > n) throw std::invalid_argument("sized_ball_halfspace: R <= n required");
  if (sgn(target) < 0 || target > ball_size(n, R))
    throw std::invalid_argument("sized_ball_halfspace: target outside [0, |B_n(R)|]");
  const int kmin = -static_cast<int>(R / 2) - 1;
  const int kmax = static_cast<int>(R / 2) + 1;
  return fill_to_target(target, kmin, kmax,
                        [&](int k) { return ball_halfspace(n, R, k); });
}

ProfileFamily slice_halfspace(unsigned n, unsigned r, int k) {
  if (r < 1 || r > n - 1) throw std::invalid_argument("slice_halfspace: 1 <= r <= n-1 required");
  const unsigned m = n / 2;
  ProfileFamily p(n, m);
  for (unsigned a = 0; a <= std::min(m, r); ++a) {
    const unsigned b = r - a;
    if (b > n - m) continue;
    if (2L * a <= static_cast<long>(r) + 2L * k) p.set(a, b);
  }
  return p;
}

PaddedProfileFamily sized_slice_halfspace(unsigned n, unsigned r, const Natural& target) {
  if (r < 1 || r > n - 1)
    throw std::invalid_argument("sized_slice_halfspace: 1 <= r <= n-1 required");
  if (sgn(target) < 0 || target > binom(n, r))
    throw std::invalid_argument("sized_slice_halfspace: target outside [0, C(n,r)]");
  const int kmin = -static_cast<int>(r / 2) - 1;
  const int kmax = static_cast<int>(r / 2) + 1;
  return fill_to_target(target, kmin, kmax,
                        [&](int k) { return slice_halfspace(n, r, k); });
}

ProfileFamily cplus(unsigned n, unsigned r, int k) {
  if (r + 1 > n) throw std::invalid_argument("cplus: r+1 <= n required");
  const unsigned m = n / 2;
  ProfileFamily p(n, m);
  for (unsigned a = 0; a <= std::min(m, r + 1); ++a) {
    const unsigned b = r + 1 - a;
    if (b > n - m) continue;
    if (2L * a <= static_cast<long>(r) + 2L * (k - 1)) p.set(a, b);
  }
  return p;
}

SplitFamilies split_by_element(const ExplicitFamily& f, unsigned element) {
  if (!f.layer()) throw std::invalid_argument("split_by_element: layer tag required");
  const unsigned n = f.n();
  const unsigned r = *f.layer();
  if (r < 1 || r > n - 1)
    throw std::invalid_argument("split_by_element: 1 <= r <= n-1 required");
  if (element < 1 || element > n)
    throw std::invalid_argument("split_by_element: element outside [n]");

  std::vector<VertexSet> zero, one;
  const VertexSet bit = VertexSet(1) << (element - 1);
  for (VertexSet x : f.members()) {
    if (x & bit)
      one.push_back(drop_element(x & ~bit, element));
    else
      zero.push_back(drop_element(x, element));
  }
  SplitFamilies out{ExplicitFamily(n - 1, std::move(zero), r),
                    ExplicitFamily(n - 1, std::move(one), r - 1),
                    Rational(), Rational(), Rational()};
  out.alpha = make_rational(family_size(f), binom(n, r));
  out.alpha0 = make_rational(family_size(out.a0), binom(n - 1, r));
  out.alpha1 = make_rational(family_size(out.a1), binom(n - 1, r - 1));
  const unsigned s = n - r;
  Rational convex = make_rational(Natural(s), Natural(n)) * out.alpha0 +
                    make_rational(Natural(r), Natural(n)) * out.alpha1;
  if (convex != out.alpha)
    throw std::logic_error("split_by_element: density convexity identity failed");
  return out;
}

unsigned pigeonhole_element(const ExplicitFamily& f) {
  if (!f.layer()) throw std::invalid_argument("pigeonhole_element: layer tag required");
  if (f.size() == 0) throw std::invalid_argument("pigeonhole_element: empty family");
  const unsigned n = f.n();
  std::vector<std::size_t> count(n + 1, 0);
  for (VertexSet x : f.members())
    for (unsigned e = 1; e <= n; ++e)
      if (x & (VertexSet(1) << (e - 1))) ++count[e];
  unsigned best = 1;
  for (unsigned e = 2; e <= n; ++e)
    if (count[e] > count[best]) best = e;
  // pigeonhole guarantee: count * n >= r * |f|
  if (count[best] * static_cast<std::size_t>(n) < static_cast<std::size_t>(*f.layer()) * f.size())
    throw std::logic_error("pigeonhole_element: guarantee violated");
  return best;
}

ExplicitFamily complement_family(const ExplicitFamily& f) {
  if (!f.layer()) throw std::invalid_argument("complement_family: layer tag required");
  const VertexSet full = f.full_mask();
  std::vector<VertexSet> out;
  out.reserve(f.size());
  for (VertexSet x : f.members()) out.push_back(full ^ x);
  return ExplicitFamily(f.n(), std::move(out), f.n() - *f.layer());
}

}  // namespace isoball
