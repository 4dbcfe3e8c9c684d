#ifndef ISOBALL_BOUNDARY_HPP
#define ISOBALL_BOUNDARY_HPP

#include "isoball/families.hpp"

namespace isoball {

// Shadows of a layer-tagged family in Q_n. Both throw std::invalid_argument
// when the family is untagged or the target layer does not exist.
ExplicitFamily lower_shadow(const ExplicitFamily& f);   // layer r -> r-1
ExplicitFamily upper_shadow(const ExplicitFamily& f);   // layer r -> r+1

// Vertex boundary in Q_n: vertices outside f with a neighbor in f.
ExplicitFamily cube_boundary(const ExplicitFamily& f);

// Vertex boundary inside the Hamming ball B_n(R); every member of f must lie
// in the ball. Equals cube_boundary(f) intersected with B_n(R).
ExplicitFamily ball_boundary(const ExplicitFamily& f, unsigned R);

// b_r = |cube_boundary(f) cap S_n(r)| for 0 <= r <= R; the entries sum to
// |ball_boundary(f, R)|.
std::vector<Natural> boundary_layer_profile(const ExplicitFamily& f, unsigned R);

// The four set inclusions behind the two boundary superset estimates for a
// layer family split on one element, plus the slack of each estimate.
struct SupersetRelations {
  bool lower_a0_included = false;   // bd_{n-1} A0 inside {X in bd_n A : e not in X}
  bool lifted_a1_included = false;  // {X + e : X in bd_{n-1} A1} inside {X in bd_n A : e in X}
  bool upper_a0_included = false;   // bd+_{n-1} A0 inside {X in bd+_n A : e not in X}
  bool a1_in_lower = false;         // A1 inside {X in bd-_n A : e not in X}
  Integer slack_first;              // |bd_n A| - |bd_{n-1} A0| - |bd_{n-1} A1|
  Integer slack_second;             // |bd_n A| - |bd_{n-1} A1| - |bd+_{n-1} A0| - |A1|
  bool all_hold = false;
};

// pre: f layer-tagged with 1 <= r <= n-1, 1 <= element <= n
SupersetRelations superset_relations_check(const ExplicitFamily& f, unsigned element);

// Exact boundary of a profile family: an off-cell is in the boundary iff a
// feasible adjacent cell (a +- 1, b) or (a, b +- 1) is on, since every
// member of a cell has a neighbor in each feasible adjacent cell.
ProfileFamily profile_cube_boundary(const ProfileFamily& p);

// Restriction to the ball: all on-cells must satisfy a+b <= R.
ProfileFamily profile_ball_boundary(const ProfileFamily& p, unsigned R);

// Conservative boundary count for a padded family: the cut cell is treated
// as full when collecting neighbor cells, and its untaken remainder is
// counted as boundary in full.
struct PaddedBoundaryBound {
  Natural upper_bound;
  ProfileFamily boundary_cells;  // off-cell part of the bound
  Natural cut_remainder;         // untaken members of the cut cell
};

PaddedBoundaryBound padded_ball_boundary_upper_bound(const PaddedProfileFamily& p, unsigned R);

}  // namespace isoball

#endif
