#include "isoball/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "isoball/boundary.hpp"

namespace isoball {

NormalizedMatchingBounds nm_bounds(unsigned n, unsigned r, const Natural& size) {
  if (r < 1 || r > n - 1) throw std::invalid_argument("nm_bounds: 1 <= r <= n-1 required");
  const unsigned s = n - r;
  NormalizedMatchingBounds out;
  out.lower_shadow_bound = make_rational(Natural(r) * size, Natural(s + 1));
  out.upper_shadow_bound = make_rational(Natural(s) * size, Natural(r + 1));
  return out;
}

LocalExpansionVerdict local_expansion_check(unsigned n, unsigned r, const Natural& sizeA,
                                            const Natural& boundary) {
  if (r < 1 || r > n - 1)
    throw std::invalid_argument("local_expansion_check: 1 <= r <= n-1 required");
  const Natural total = binom(n, r);
  if (sgn(sizeA) < 0 || sizeA > total)
    throw std::invalid_argument("local_expansion_check: sizeA outside [0, C(n,r)]");
  const unsigned s = n - r;

  LocalExpansionVerdict v;
  // matching part: (r/(s+1) + s/(r+1)) |A|
  Rational matching = (make_rational(Natural(r), Natural(s) + 1) +
                       make_rational(Natural(s), Natural(r) + 1)) *
                      Rational(sizeA);
  v.linear_excess = Rational(boundary) - matching;
  // sqrt(n/(rs)) alpha(1-alpha) C(n,r) = [a(C-a) / (C r s)] * sqrt(n r s)
  v.expansion_term.coeff =
      make_rational(sizeA * (total - sizeA), total * Natural(r) * Natural(s));
  v.expansion_term.radicand =
      static_cast<unsigned long>(n) * static_cast<unsigned long>(r) * static_cast<unsigned long>(s);
  v.holds = compare(v.expansion_term, v.linear_excess) <= 0;

  double term = mpq_get_d(v.expansion_term.coeff.get_mpq_t()) *
                std::sqrt(static_cast<double>(v.expansion_term.radicand));
  v.slack = mpq_get_d(v.linear_excess.get_mpq_t()) - term;
  return v;
}

std::pair<Natural, Natural> thm1_size_window(unsigned n, unsigned R, const Rational& rho) {
  Natural low_radius = floor_mul(rho, n);
  if (!low_radius.fits_uint_p()) throw std::invalid_argument("thm1: rho*n out of range");
  Natural low = ball_size(n, static_cast<unsigned>(low_radius.get_ui()));
  Natural high = ball_size(n, R) - low;
  return {low, high};
}

Thm1Verdict thm1_bound_check(unsigned n, unsigned R, const Rational& rho,
                             const Natural& sizeA, const Natural& boundary,
                             const Thm1Options& opts) {
  if (2 * R > n) throw std::invalid_argument("thm1_bound_check: R <= n/2 required");
  if (sgn(rho) <= 0 || rho >= Rational(1, 2))
    throw std::invalid_argument("thm1_bound_check: rho in (0, 1/2) required");
  auto [low, high] = thm1_size_window(n, R, rho);
  Thm1Verdict v;
  v.size_window_ok = sizeA >= low && sizeA <= high;
  if (!v.size_window_ok && opts.enforce_size_window)
    throw std::invalid_argument("thm1_bound_check: sizeA outside admissible window");
  v.exploratory = !opts.assume_n0;
  const Natural other = ball_size(n, R) - sizeA;
  v.min_side = sizeA < other ? sizeA : other;
  const Natural p = rho.get_num();
  const Natural q = rho.get_den();
  v.lhs = Natural(324) * n * boundary * boundary * q * q * q;
  v.rhs = p * p * p * v.min_side * v.min_side;
  v.holds = v.lhs >= v.rhs;
  return v;
}

Lemma7Params lemma7_params(unsigned n, unsigned R, const Natural& sizeA) {
  if (R > n) throw std::invalid_argument("lemma7_params: R <= n required");
  const Natural ball = ball_size(n, R);
  if (sgn(sizeA) <= 0 || sizeA > ball)
    throw std::invalid_argument("lemma7_params: 1 <= sizeA <= |B_n(R)| required");
  Lemma7Params params;
  params.epsilon = make_rational(Natural(R), Natural(2) * n);
  // r0 = min{r <= R : |B_n(r)| >= eps |A|}; compare 2n |B_n(r)| >= R |A|
  const Natural scaled = Natural(R) * sizeA;
  const auto& row = binom_row(n);
  Natural running = 0;
  bool found = false;
  for (unsigned r = 0; r <= R; ++r) {
    running += row[r];
    if (running * (2 * n) >= scaled) {
      params.r0 = r;
      found = true;
      break;
    }
  }
  if (!found) throw std::logic_error("lemma7_params: no valid r0 (impossible for sizeA <= |B|)");
  // c = 1 - 1/(|B|/|A| - eps) = (2n|B| - R|A| - 2n|A|) / (2n|B| - R|A|)
  Natural den = Natural(2) * n * ball - scaled;
  Natural num = den - Natural(2) * n * sizeA;
  params.c = make_rational(std::move(num), std::move(den));
  return params;
}

SqrtQuantity lemma7_bound(const Lemma7Params& params, unsigned n, const Natural& sizeA) {
  SqrtQuantity out;
  if (params.r0 == 0 || sgn(params.c) <= 0) {
    out.coeff = 0;
    out.radicand = 0;
    return out;
  }
  out.coeff = Rational(2) * params.c * params.epsilon * Rational(sizeA) / Rational(5u * n);
  out.radicand = params.r0;
  return out;
}

bool lemma7_preconditions(unsigned n, unsigned R, const Lemma7Params& params) {
  return n >= 80 && R + params.r0 <= n;
}

DensityProfile density_profile(const ExplicitFamily& f, unsigned R) {
  for (VertexSet x : f.members())
    if (popcount(x) > R)
      throw std::invalid_argument("density_profile: member outside B_n(R)");
  DensityProfile out;
  out.layer_sizes.assign(R + 1, Natural(0));
  for (VertexSet x : f.members()) out.layer_sizes[popcount(x)] += 1;
  out.alpha.resize(R + 1);
  for (unsigned r = 0; r <= R; ++r)
    out.alpha[r] = make_rational(out.layer_sizes[r], binom(f.n(), r));
  return out;
}

ShadowSlacks shadow_slacks(const ExplicitFamily& f, unsigned R) {
  const unsigned n = f.n();
  if (R > n) throw std::invalid_argument("shadow_slacks: R <= n required");
  for (VertexSet x : f.members())
    if (popcount(x) > R)
      throw std::invalid_argument("shadow_slacks: member outside B_n(R)");

  std::vector<std::vector<VertexSet>> layers(R + 1);
  for (VertexSet x : f.members()) layers[popcount(x)].push_back(x);

  ShadowSlacks out;
  out.delta_plus.assign(R + 1, Rational(0));
  out.delta_minus.assign(R + 1, Rational(0));
  for (unsigned r = 0; r <= R; ++r) {
    if (layers[r].empty()) continue;
    ExplicitFamily level(n, layers[r], r);
    const Rational size(family_size(level));
    if (r + 1 <= R && r + 1 <= n) {
      Rational slack =
          Rational(family_size(upper_shadow(level))) -
          make_rational(Natural(n - r), Natural(r) + 1) * size;
      if (sgn(slack) < 0) throw std::logic_error("shadow_slacks: negative upper slack");
      out.delta_plus[r] = std::move(slack);
    }
    if (r >= 1) {
      Rational slack =
          Rational(family_size(lower_shadow(level))) -
          make_rational(Natural(r), Natural(n - r) + 1) * size;
      if (sgn(slack) < 0) throw std::logic_error("shadow_slacks: negative lower slack");
      out.delta_minus[r] = std::move(slack);
    }
  }
  return out;
}

Rational hypergeometric_pmf(unsigned r, unsigned m, unsigned n, unsigned k) {
  if (m > n) throw std::invalid_argument("hypergeometric_pmf: m <= n required");
  if (r > n) throw std::invalid_argument("hypergeometric_pmf: r <= n required");
  if (k > r) return Rational(0);
  Natural num = binom(m, k) * binom(n - m, r - k);
  return make_rational(std::move(num), binom(n, r));
}

Rational hypergeometric_max_ratio(unsigned r, unsigned n) {
  if (r < 1 || r > n - 1)
    throw std::invalid_argument("hypergeometric_max_ratio: 1 <= r <= n-1 required");
  const unsigned m = n / 2;
  const auto& rowm = binom_row(m);
  const auto& rowz = binom_row(n - m);
  Natural best = 0;
  for (unsigned k = 0; k <= r; ++k) {
    if (k > m || r - k > n - m) continue;
    Natural num = rowm[k] * rowz[r - k];
    if (num > best) best = num;
  }
  const Natural total = binom(n, r);
  return make_rational(best * best * r * (n - r), total * total * n);
}

}  // namespace isoball
