#ifndef ISOBALL_BOUNDS_HPP
#define ISOBALL_BOUNDS_HPP

#include <utility>

#include "isoball/families.hpp"

namespace isoball {

// Normalized-matching shadow bounds for a family of the given size in
// S_n(r): lower shadow >= r/(s+1) |A|, upper shadow >= s/(r+1) |A| with
// s = n-r. pre: 1 <= r <= n-1.
struct NormalizedMatchingBounds {
  Rational lower_shadow_bound;
  Rational upper_shadow_bound;
};

NormalizedMatchingBounds nm_bounds(unsigned n, unsigned r, const Natural& size);

// Exact verdict of
//   boundary >= (r/(s+1) + s/(r+1)) |A| + sqrt(n/(rs)) alpha(1-alpha) C(n,r)
// with alpha = |A| / C(n,r). The sqrt term is carried as coeff*sqrt(n r s)
// and compared in squared form.
struct LocalExpansionVerdict {
  bool holds = false;
  Rational linear_excess;       // boundary minus the matching-bound part
  SqrtQuantity expansion_term;  // the alpha(1-alpha) strengthening
  double slack = 0;             // linear_excess - expansion_term, report only
};

// pre: 1 <= r <= n-1 and sizeA <= C(n,r)
LocalExpansionVerdict local_expansion_check(unsigned n, unsigned r, const Natural& sizeA,
                                            const Natural& boundary);

// Hamming-ball isoperimetric bound
//   boundary >= rho^{3/2} / (18 sqrt(n)) * min(|A|, |B_n(R)| - |A|)
// checked exactly as 324 n boundary^2 q^3 >= p^3 min^2 for rho = p/q.
// The admissible size window is [ |B_n(floor(rho n))|,
// |B_n(R)| - |B_n(floor(rho n))| ]; the threshold dimension above which the
// inequality is asserted is never made explicit, so verdicts stay labeled
// exploratory unless the caller opts in via assume_n0.
struct Thm1Options {
  bool enforce_size_window = true;  // throw when |A| is outside the window
  bool assume_n0 = false;
};

struct Thm1Verdict {
  bool holds = false;
  bool exploratory = true;
  bool size_window_ok = false;
  Natural lhs, rhs;  // squared comparison, lhs >= rhs iff holds
  Natural min_side;
};

std::pair<Natural, Natural> thm1_size_window(unsigned n, unsigned R, const Rational& rho);

// pre: R <= n/2, 0 < rho < 1/2; throws when the window is enforced and missed
Thm1Verdict thm1_bound_check(unsigned n, unsigned R, const Rational& rho,
                             const Natural& sizeA, const Natural& boundary,
                             const Thm1Options& opts = {});

// Parameters of the technical ball bound: epsilon = R/(2n),
// r0 = min{r <= R : |B_n(r)| >= epsilon |A|},
// c = 1 - 1/(|B_n(R)|/|A| - epsilon).
struct Lemma7Params {
  Rational epsilon;
  unsigned r0 = 0;
  Rational c;
};

// pre: 1 <= sizeA <= |B_n(R)|, R <= n
Lemma7Params lemma7_params(unsigned n, unsigned R, const Natural& sizeA);

// (2 c sqrt(r0) / (5n)) epsilon |A| as an exact coeff*sqrt(r0) pair;
// zero when c <= 0 or r0 = 0 (the bound is trivial there)
SqrtQuantity lemma7_bound(const Lemma7Params& params, unsigned n, const Natural& sizeA);

// asymptotic-regime validity of the technical bound at this instance:
// n >= 80 and R <= n - r0
bool lemma7_preconditions(unsigned n, unsigned R, const Lemma7Params& params);

// Per-layer decomposition A_r = A cap S_n(r) with densities
// alpha_r = |A_r| / C(n,r).
struct DensityProfile {
  std::vector<Natural> layer_sizes;  // index r, 0..R
  std::vector<Rational> alpha;
};

DensityProfile density_profile(const ExplicitFamily& f, unsigned R);

// Per-layer shadow slacks over the normalized-matching bounds; negative
// values are impossible and raise std::logic_error.
struct ShadowSlacks {
  std::vector<Rational> delta_plus;   // valid for 0 <= r <= R-1
  std::vector<Rational> delta_minus;  // valid for 1 <= r <= R
};

ShadowSlacks shadow_slacks(const ExplicitFamily& f, unsigned R);

// P(H = k) for H ~ Hypergeometric(r; m, n), exact.
// pre: m <= n, r <= n; zero outside 0 <= k <= r.
Rational hypergeometric_pmf(unsigned r, unsigned m, unsigned n, unsigned k);

// max_k P(H=k)^2 * r(n-r)/n for H ~ Hypergeometric(r; floor(n/2), n) — the
// squared constant behind the pmf upper bound. pre: 1 <= r <= n-1.
Rational hypergeometric_max_ratio(unsigned r, unsigned n);

}  // namespace isoball

#endif
