#ifndef ISOBALL_CONSTRUCTIONS_HPP
#define ISOBALL_CONSTRUCTIONS_HPP

#include "isoball/families.hpp"

namespace isoball {

// remove `element` from the ground set and close the gap, mapping subsets of
// [n] avoiding it onto subsets of [n-1]
VertexSet drop_element(VertexSet x, unsigned element);

// {X in S_n(r) : e in X} and {X in S_n(r) : e not in X}; sizes C(n-1,r-1)
// and C(n-1,r). pre: 1 <= r <= n-1, 1 <= element <= n.
ExplicitFamily star(unsigned n, unsigned r, unsigned element);
ExplicitFamily costar(unsigned n, unsigned r, unsigned element);

// Half-space family inside the ball, split Y = {1..floor(n/2)}:
// cells (a,b) with a+b <= R and a <= (a+b)/2 + k, the inequality evaluated
// exactly as 2a <= a+b+2k. Empty for k < -R/2, all of B_n(R) for k >= R/2.
ProfileFamily ball_halfspace(unsigned n, unsigned R, int k);

// Exact-size interpolation C(k-1) <= M <= C(k) for the minimal k with
// |C(k)| >= target. Cells of C(k) \ C(k-1) are filled in lexicographic
// (a+b, a) order; whole cells merge into the base profile, the final
// partial cell becomes the cut cell.
PaddedProfileFamily sized_ball_halfspace(unsigned n, unsigned R, const Natural& target);

// Slice variants over S_n(r): cells (a, r-a) with a <= r/2 + k.
ProfileFamily slice_halfspace(unsigned n, unsigned r, int k);
PaddedProfileFamily sized_slice_halfspace(unsigned n, unsigned r, const Natural& target);

// {X in S_n(r+1) : |X cap Y| <= r/2 + k - 1}, the upper-layer companion of
// slice_halfspace(n, r, k)
ProfileFamily cplus(unsigned n, unsigned r, int k);

// Split of a layer family by one element: a0 keeps members avoiding it,
// a1 holds members containing it with the element removed; both live over
// the compressed ground set [n-1]. The densities satisfy
// alpha = (s/n) alpha0 + (r/n) alpha1 exactly.
struct SplitFamilies {
  ExplicitFamily a0;  // subset of S_{n-1}(r)
  ExplicitFamily a1;  // subset of S_{n-1}(r-1)
  Rational alpha, alpha0, alpha1;
};

SplitFamilies split_by_element(const ExplicitFamily& f, unsigned element);

// An element contained in at least (r/n)|f| members, ties broken by the
// smallest index. pre: f nonempty and layer-tagged.
unsigned pigeonhole_element(const ExplicitFamily& f);

// {[n] \ X : X in f}, living in layer n-r
ExplicitFamily complement_family(const ExplicitFamily& f);

}  // namespace isoball

#endif
