#ifndef ISOBALL_ANALYSIS_HPP
#define ISOBALL_ANALYSIS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "isoball/exactmath.hpp"
#include "isoball/polynomial.hpp"

namespace isoball {

// Numeric layer for the quadratic machinery: IEEE binary128 (113-bit
// mantissa, round-to-nearest). Rational-to-real conversion is limb-exact up
// to the final rounding, so accumulated error sits around 1e-33 while
// verdict margins are gated at 1e-9.
using Real = __float128;

Real sqrt_real(Real x);
Real abs_real(Real x);
Real to_real(const Integer& z);
Real to_real(const Rational& q);
double to_double(Real x);
std::string real_to_string(Real x, int significant_digits = 30);

// Strict inequalities carry a margin: anything closer than this to a tie is
// reported inconclusive instead of asserted.
constexpr double kInconclusiveMargin = 1e-9;

enum class Tri { Holds, Fails, Inconclusive };

Tri strictly_less(Real lhs, Real rhs);
const char* tri_name(Tri t);

// Slice-split parameters (r, s, alpha) with the derived constants
//   c = sqrt(n/(rs)), c0 = sqrt((n-1)/(r(s-1))), c1 = sqrt((n-1)/((r-1)s)),
//   t = s/(r+1) - r/(s+1), x* = (n/s)(1-alpha), Q = n c alpha (1-alpha).
// Degenerate r = 1 or s = 1 is rejected; the base case is handled by the
// exact bound checks, not here.
class ExpansionParams {
 public:
  ExpansionParams(unsigned r, unsigned s, Rational alpha);

  unsigned r() const { return r_; }
  unsigned s() const { return s_; }
  unsigned n() const { return r_ + s_; }
  const Rational& alpha() const { return alpha_; }

  Rational c_sq() const;
  Rational c0_sq() const;
  Rational c1_sq() const;
  Rational t() const;
  Rational xstar() const;

  Real c() const;
  Real c0() const;
  Real c1() const;
  Real q_threshold() const;  // Q

 private:
  unsigned r_ = 2, s_ = 2;
  Rational alpha_;
};

enum class LFunc { L1, L2, L2Minus };

Real alpha0_at(const ExpansionParams& p, Real x);
Real alpha1_at(const ExpansionParams& p, Real x);
Real eval_L(const ExpansionParams& p, LFunc which, Real x);

// x^2 + Bx + C
struct MonicQuadratic {
  Real B = 0, C = 0;

  Real eval(Real x) const;
  Real discriminant() const;
  std::optional<std::pair<Real, Real>> roots() const;  // ascending, if real and distinct
};

// Interlacing criterion for two monic quadratics with distinct real roots:
// under x1- < x2-, x1+ < x2+ and (C1-C2)^2 + (B1-B2)(B1C2 - B2C1) < 0 the
// larger root of p1 clears the smaller root of p2. The conclusion is also
// read off the roots directly.
struct InterlaceResult {
  bool roots_real = false;
  bool b_coincide = false;  // B1 == B2 within margin, crossing undefined
  Tri hypothesis = Tri::Inconclusive;
  Tri order_minus = Tri::Inconclusive;  // x1- < x2-
  Tri order_plus = Tri::Inconclusive;   // x1+ < x2+
  Real crossing_x = 0;
  Real p1_at_crossing = 0;
  Tri conclusion = Tri::Inconclusive;   // x2- < x1+
};

InterlaceResult interlace_check(const MonicQuadratic& p1, const MonicQuadratic& p2);

// Root structure of L1 = L2 and L2- = Q under the claim preconditions
// L1(x*) < Q and L2(0) < Q, cross-checked against the monic normalizations
// and the interlacing criterion.
struct RootsBundle {
  Tri pre_l1_at_xstar = Tri::Inconclusive;  // L1(x*) < Q
  Tri pre_l2_at_zero = Tri::Inconclusive;   // L2(0) < Q
  bool vacuous = true;                      // preconditions definitely unmet
  bool evaluated = false;

  Real x1_minus = 0, x1_plus = 0;  // roots of L1 - L2
  Real x2_minus = 0, x2_plus = 0;  // roots of L2- - Q
  Tri x1_minus_negative = Tri::Inconclusive;
  Tri x1_plus_positive = Tri::Inconclusive;
  Tri x1_plus_below_xstar = Tri::Inconclusive;
  Tri x2_minus_positive = Tri::Inconclusive;
  Tri x2_minus_below_xstar = Tri::Inconclusive;
  Tri x2_plus_above_xstar = Tri::Inconclusive;
  Tri conclusion = Tri::Inconclusive;  // x2- < x1+

  MonicQuadratic p1, p2;        // monic normalizations, +C convention
  double monic_root_deviation = 0;
  InterlaceResult interlace;    // criterion route on (p1, p2)
  bool criterion_agrees = false;

  bool any_inconclusive = false;
  bool all_hold = false;  // evaluated, conclusive, and every ordering holds
};

RootsBundle claim_roots(const ExpansionParams& p);

// L1(x*) < Q implies alpha < (t+r)/(sc); the conclusion is exact (squared
// rational comparison), the hypothesis is numeric with margin.
struct ClaimAlphaResult {
  Tri hypothesis = Tri::Inconclusive;
  bool conclusion = false;
  bool implication_holds = false;
};

ClaimAlphaResult claim_alpha(const ExpansionParams& p);

// c < c0 <= c1, exact in squared form. pre: r, s >= 2.
struct ConstantOrdering {
  bool c_lt_c0 = false;
  bool c0_le_c1 = false;
  bool holds = false;
};

ConstantOrdering constant_ordering_check(unsigned r, unsigned s);

// Intermediate inequality chain of the two appendix reductions at one
// instance; everything expressible through c^2, c0^2 is checked exactly.
struct AuxChainResult {
  ConstantOrdering ordering;
  bool core_exact = false;       // rs(c+1) <= (t+r) n, squared form
  bool reduction_exact = false;  // (r^2 t+t+r)(t+r)/c^2 + (st-r^2)/c0^2 > s^2/4
  Tri refined = Tri::Inconclusive;  // rsc(c0+1) < (t+r) n c0, numeric
  bool holds = false;
};

AuxChainResult verify_aux_chain(unsigned r, unsigned s);  // pre: 2 <= r <= s

// Symbolic verification of one appendix expansion: the fraction-cleared
// expression is expanded over Z[r, d] with d = s - r, matched bit-exactly
// against the printed coefficient list, and certified nonnegative for
// r >= 2, d >= 0 through the r = u + 2 coefficient shift.
struct CoefficientEntry {
  unsigned power = 0;       // of (s - r)
  std::string expected;     // printed coefficient polynomial in r
  std::string computed;
  bool matches = false;
};

struct IdentityCheck {
  bool match = false;
  bool positivity_certified = false;
  bool strictly_positive_at_origin = false;  // value at r=2, d=0
  std::vector<CoefficientEntry> coefficients;  // descending power of (s-r)
  std::string residual;  // nonzero difference, empty when match
};

IdentityCheck verify_ineq17();
IdentityCheck verify_ineq18();

}  // namespace isoball

#endif
