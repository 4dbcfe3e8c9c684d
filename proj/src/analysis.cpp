#include "isoball/analysis.hpp"

#include <quadmath.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace isoball {

Real sqrt_real(Real x) { return sqrtq(x); }
Real abs_real(Real x) { return fabsq(x); }

Real to_real(const Integer& z) {
  const std::size_t limbs = mpz_size(z.get_mpz_t());
  Real out = 0;
  for (std::size_t i = limbs; i-- > 0;) {
    out = ldexpq(out, GMP_NUMB_BITS);
    out += static_cast<Real>(mpz_getlimbn(z.get_mpz_t(), static_cast<mp_size_t>(i)));
  }
  return sgn(z) < 0 ? -out : out;
}

Real to_real(const Rational& q) { return to_real(Integer(q.get_num())) / to_real(Integer(q.get_den())); }

double to_double(Real x) { return static_cast<double>(x); }

std::string real_to_string(Real x, int significant_digits) {
  char buf[128];
  quadmath_snprintf(buf, sizeof(buf), "%.*Qg", significant_digits, x);
  return std::string(buf);
}

Tri strictly_less(Real lhs, Real rhs) {
  const Real gap = rhs - lhs;
  if (abs_real(gap) <= static_cast<Real>(kInconclusiveMargin)) return Tri::Inconclusive;
  return gap > 0 ? Tri::Holds : Tri::Fails;
}

const char* tri_name(Tri t) {
  switch (t) {
    case Tri::Holds: return "holds";
    case Tri::Fails: return "fails";
    default: return "inconclusive";
  }
}

ExpansionParams::ExpansionParams(unsigned r, unsigned s, Rational alpha)
    : r_(r), s_(s), alpha_(std::move(alpha)) {
  if (r_ < 2 || s_ < 2)
    throw std::invalid_argument("ExpansionParams: r, s >= 2 required (base case handled exactly)");
  if (sgn(alpha_) < 0 || alpha_ > 1)
    throw std::invalid_argument("ExpansionParams: alpha in [0,1] required");
}

Rational ExpansionParams::c_sq() const {
  return make_rational(Natural(n()), Natural(r_) * s_);
}

Rational ExpansionParams::c0_sq() const {
  return make_rational(Natural(n() - 1), Natural(r_) * (s_ - 1));
}

Rational ExpansionParams::c1_sq() const {
  return make_rational(Natural(n() - 1), Natural(r_ - 1) * s_);
}

Rational ExpansionParams::t() const {
  return make_rational(Natural(s_), Natural(r_) + 1) - make_rational(Natural(r_), Natural(s_) + 1);
}

Rational ExpansionParams::xstar() const {
  return make_rational(Natural(n()), Natural(s_)) * (Rational(1) - alpha_);
}

Real ExpansionParams::c() const { return sqrt_real(to_real(c_sq())); }
Real ExpansionParams::c0() const { return sqrt_real(to_real(c0_sq())); }
Real ExpansionParams::c1() const { return sqrt_real(to_real(c1_sq())); }

Real ExpansionParams::q_threshold() const {
  const Real a = to_real(alpha_);
  return static_cast<Real>(n()) * c() * a * (1 - a);
}

Real alpha0_at(const ExpansionParams& p, Real x) {
  return to_real(p.alpha()) - (static_cast<Real>(p.r()) / p.n()) * x;
}

Real alpha1_at(const ExpansionParams& p, Real x) {
  return to_real(p.alpha()) + (static_cast<Real>(p.s()) / p.n()) * x;
}

Real eval_L(const ExpansionParams& p, LFunc which, Real x) {
  const Real t = to_real(p.t());
  const Real a1 = alpha1_at(p, x);
  const Real top = static_cast<Real>(p.r()) * a1 * (1 - a1);
  switch (which) {
    case LFunc::L1: {
      const Real a0 = alpha0_at(p, x);
      return t * x + static_cast<Real>(p.s()) * p.c0() * a0 * (1 - a0) + p.c1() * top;
    }
    case LFunc::L2:
      return (t + p.r()) * x + p.c1() * top;
    case LFunc::L2Minus:
      return (t + p.r()) * x + p.c() * top;
  }
  throw std::logic_error("eval_L: unknown function");
}

Real MonicQuadratic::eval(Real x) const { return x * x + B * x + C; }

Real MonicQuadratic::discriminant() const { return B * B - 4 * C; }

std::optional<std::pair<Real, Real>> MonicQuadratic::roots() const {
  const Real disc = discriminant();
  if (disc <= 0) return std::nullopt;
  const Real sq = sqrt_real(disc);
  const Real q = -(B + copysignq(sq, B)) / 2;
  Real r1, r2;
  if (q == 0) {
    r1 = -sq / 2;
    r2 = sq / 2;
  } else {
    r1 = q;
    r2 = C / q;
  }
  if (r1 > r2) std::swap(r1, r2);
  return std::make_pair(r1, r2);
}

namespace {

// ascending real roots of A x^2 + B x + C with A != 0, via the stable form
std::optional<std::pair<Real, Real>> quadratic_roots(Real A, Real B, Real C) {
  const Real disc = B * B - 4 * A * C;
  if (disc <= 0) return std::nullopt;
  const Real sq = sqrt_real(disc);
  const Real q = -(B + copysignq(sq, B)) / 2;
  Real r1, r2;
  if (q == 0) {
    r1 = -sq / (2 * A);
    r2 = sq / (2 * A);
  } else {
    r1 = q / A;
    r2 = C / q;
  }
  if (r1 > r2) std::swap(r1, r2);
  return std::make_pair(r1, r2);
}

Tri tri_and(Tri a, Tri b) {
  if (a == Tri::Fails || b == Tri::Fails) return Tri::Fails;
  if (a == Tri::Inconclusive || b == Tri::Inconclusive) return Tri::Inconclusive;
  return Tri::Holds;
}

}  // namespace

InterlaceResult interlace_check(const MonicQuadratic& p1, const MonicQuadratic& p2) {
  InterlaceResult out;
  const auto r1 = p1.roots();
  const auto r2 = p2.roots();
  out.roots_real = r1.has_value() && r2.has_value();
  if (out.roots_real) {
    out.order_minus = strictly_less(r1->first, r2->first);
    out.order_plus = strictly_less(r1->second, r2->second);
    out.conclusion = strictly_less(r2->first, r1->second);
  }
  if (abs_real(p1.B - p2.B) <= static_cast<Real>(kInconclusiveMargin)) {
    out.b_coincide = true;  // equal quadratics shifted by a constant: no crossing
    return out;
  }
  const Real h = (p1.C - p2.C) * (p1.C - p2.C) + (p1.B - p2.B) * (p1.B * p2.C - p2.B * p1.C);
  out.hypothesis = strictly_less(h, 0);
  out.crossing_x = -(p1.C - p2.C) / (p1.B - p2.B);
  out.p1_at_crossing = p1.eval(out.crossing_x);
  return out;
}

RootsBundle claim_roots(const ExpansionParams& p) {
  RootsBundle out;
  const Real Q = p.q_threshold();
  const Real xs = to_real(p.xstar());
  out.pre_l1_at_xstar = strictly_less(eval_L(p, LFunc::L1, xs), Q);
  out.pre_l2_at_zero = strictly_less(eval_L(p, LFunc::L2, 0), Q);
  out.vacuous = out.pre_l1_at_xstar == Tri::Fails || out.pre_l2_at_zero == Tri::Fails;
  out.any_inconclusive = out.pre_l1_at_xstar == Tri::Inconclusive ||
                         out.pre_l2_at_zero == Tri::Inconclusive;
  if (out.vacuous || out.any_inconclusive) return out;

  const Real rr = p.r(), ss = p.s(), nn = p.n();
  const Real a = to_real(p.alpha());
  const Real t = to_real(p.t());
  const Real rho = rr / nn, sigma = ss / nn;

  // L1 - L2 = s c0 (a - rho x)(1 - a + rho x) - r x
  const Real c0 = p.c0();
  const auto roots1 = quadratic_roots(-ss * c0 * rho * rho,
                                      ss * c0 * rho * (2 * a - 1) - rr,
                                      ss * c0 * a * (1 - a));
  // L2- - Q = (t + r) x + r c (a + sigma x)(1 - a - sigma x) - Q;
  // the constant collapses to -s c a (1-a)
  const Real c = p.c();
  const auto roots2 = quadratic_roots(-rr * c * sigma * sigma,
                                      (t + rr) + rr * c * sigma * (1 - 2 * a),
                                      -ss * c * a * (1 - a));
  if (!roots1 || !roots2) {
    out.any_inconclusive = true;
    return out;
  }
  out.evaluated = true;
  out.x1_minus = roots1->first;
  out.x1_plus = roots1->second;
  out.x2_minus = roots2->first;
  out.x2_plus = roots2->second;

  out.x1_minus_negative = strictly_less(out.x1_minus, 0);
  out.x1_plus_positive = strictly_less(0, out.x1_plus);
  out.x1_plus_below_xstar = strictly_less(out.x1_plus, xs);
  out.x2_minus_positive = strictly_less(0, out.x2_minus);
  out.x2_minus_below_xstar = strictly_less(out.x2_minus, xs);
  out.x2_plus_above_xstar = strictly_less(xs, out.x2_plus);
  out.conclusion = strictly_less(out.x2_minus, out.x1_plus);

  // monic normalizations of the two differences, +C convention
  out.p1.B = (nn / rr) * (1 - 2 * a) + nn * nn / (rr * ss * c0);
  out.p1.C = -(nn * nn / (rr * rr)) * a * (1 - a);
  out.p2.B = -((nn / ss) * (1 - 2 * a) + nn * nn * (t + rr) / (rr * ss * ss * c));
  out.p2.C = (nn * nn / (rr * ss)) * a * (1 - a);

  double dev = 0;
  auto record = [&dev](Real monic, Real direct) {
    const Real denom = abs_real(direct) > 1 ? abs_real(direct) : Real(1);
    dev = std::max(dev, to_double(abs_real(monic - direct) / denom));
  };
  if (auto m1 = out.p1.roots()) {
    record(m1->first, out.x1_minus);
    record(m1->second, out.x1_plus);
  } else {
    out.any_inconclusive = true;
  }
  if (auto m2 = out.p2.roots()) {
    record(m2->first, out.x2_minus);
    record(m2->second, out.x2_plus);
  } else {
    out.any_inconclusive = true;
  }
  out.monic_root_deviation = dev;

  out.interlace = interlace_check(out.p1, out.p2);
  out.criterion_agrees = out.interlace.conclusion == out.conclusion &&
                         out.conclusion != Tri::Inconclusive;

  const Tri orderings =
      tri_and(tri_and(tri_and(out.x1_minus_negative, out.x1_plus_positive),
                      tri_and(out.x1_plus_below_xstar, out.x2_minus_positive)),
              tri_and(tri_and(out.x2_minus_below_xstar, out.x2_plus_above_xstar),
                      out.conclusion));
  out.any_inconclusive = out.any_inconclusive || orderings == Tri::Inconclusive ||
                         out.interlace.hypothesis == Tri::Inconclusive ||
                         out.interlace.conclusion == Tri::Inconclusive;
  out.all_hold = out.evaluated && !out.any_inconclusive && orderings == Tri::Holds &&
                 out.criterion_agrees && out.monic_root_deviation <= 1e-9;
  return out;
}

ClaimAlphaResult claim_alpha(const ExpansionParams& p) {
  ClaimAlphaResult out;
  const Real Q = p.q_threshold();
  const Real xs = to_real(p.xstar());
  out.hypothesis = strictly_less(eval_L(p, LFunc::L1, xs), Q);
  // alpha < (t+r)/(s c)  <=>  (alpha s)^2 c^2 < (t+r)^2, both sides >= 0
  const Rational lhs = p.alpha() * p.alpha() * Rational(p.s()) * Rational(p.s()) * p.c_sq();
  const Rational tr = p.t() + Rational(p.r());
  out.conclusion = lhs < tr * tr;
  out.implication_holds = out.hypothesis != Tri::Holds || out.conclusion;
  return out;
}

ConstantOrdering constant_ordering_check(unsigned r, unsigned s) {
  if (r < 2 || s < 2)
    throw std::invalid_argument("constant_ordering_check: r, s >= 2 required");
  ExpansionParams p(r, s, Rational(0));
  ConstantOrdering out;
  out.c_lt_c0 = p.c_sq() < p.c0_sq();
  out.c0_le_c1 = p.c0_sq() <= p.c1_sq();
  out.holds = out.c_lt_c0 && out.c0_le_c1;
  return out;
}

AuxChainResult verify_aux_chain(unsigned r, unsigned s) {
  if (r < 2 || s < r) throw std::invalid_argument("verify_aux_chain: 2 <= r <= s required");
  AuxChainResult out;
  out.ordering = constant_ordering_check(r, s);
  ExpansionParams p(r, s, Rational(0));
  const Rational t = p.t();
  const unsigned n = r + s;

  // rs(c+1) <= (t+r)n  <=>  rs c <= (t+r)n - rs, squared since both sides >= 0
  const Rational rhs = (t + r) * Rational(n) - Rational(static_cast<unsigned long>(r) * s);
  if (sgn(rhs) >= 0) {
    const Rational lhs_sq = Rational(static_cast<unsigned long>(r) * s) *
                            Rational(static_cast<unsigned long>(r) * s) * p.c_sq();
    out.core_exact = lhs_sq <= rhs * rhs;
  }

  // (r^2 t + t + r)(t + r)/c^2 + (s t - r^2)/c0^2 - s^2/4 > 0
  const Rational inv_csq = make_rational(Natural(r) * s, Natural(n));
  const Rational inv_c0sq = make_rational(Natural(r) * (s - 1), Natural(n - 1));
  const Rational reduction = (Rational(r) * Rational(r) * t + t + Rational(r)) * (t + Rational(r)) * inv_csq +
                             (Rational(s) * t - Rational(r) * Rational(r)) * inv_c0sq -
                             make_rational(Natural(s) * s, Natural(4));
  out.reduction_exact = sgn(reduction) > 0;

  // rsc(c0+1) < (t+r) n c0, mixed radicals: numeric with margin
  const Real c = p.c(), c0 = p.c0();
  out.refined = strictly_less(static_cast<Real>(r) * s * c * (c0 + 1),
                              to_real(t + Rational(r)) * static_cast<Real>(n) * c0);

  out.holds = out.ordering.holds && out.core_exact && out.reduction_exact && out.refined == Tri::Holds;
  return out;
}

namespace {

using Poly = IntPolynomial;

const std::vector<std::string> kVarsRD = {"r", "d"};

Poly pconst(long v) { return Poly::constant(kVarsRD, Integer(v)); }
Poly pr() { return Poly::variable(kVarsRD, 0); }
Poly pd() { return Poly::variable(kVarsRD, 1); }

// coefficient polynomial in r from ascending integer coefficients
Poly rpoly(std::initializer_list<long> ascending) {
  Poly out = pconst(0);
  Poly power = pconst(1);
  const Poly r = pr();
  for (long a : ascending) {
    out = out + pconst(a) * power;
    power = power * r;
  }
  return out;
}

struct Expansion {
  Poly computed{kVarsRD};              // expansion over Z[r, d]
  std::vector<Poly> expected_coeffs;   // index = power of d
  Poly expected{kVarsRD};              // sum of expected_coeffs[j] d^j
};

IdentityCheck check_expansion(const Expansion& e) {
  IdentityCheck out;
  const Poly diff = e.computed - e.expected;
  out.match = diff.is_zero();
  if (!out.match) out.residual = diff.to_string();

  auto computed_coeffs = e.computed.coefficients_in(1);
  computed_coeffs.resize(std::max(computed_coeffs.size(), e.expected_coeffs.size()),
                         Poly(kVarsRD));
  for (std::size_t j = e.expected_coeffs.size(); j-- > 0;) {
    CoefficientEntry entry;
    entry.power = static_cast<unsigned>(j);
    entry.expected = e.expected_coeffs[j].to_string();
    entry.computed = computed_coeffs[j].to_string();
    entry.matches = computed_coeffs[j] == e.expected_coeffs[j];
    out.coefficients.push_back(std::move(entry));
  }

  // positivity for r >= 2, d >= 0: substitute r = u + 2 and demand
  // nonnegative coefficients
  const Poly shifted = e.expected.shift_variable(0, Integer(2));
  out.positivity_certified = out.match && shifted.all_coefficients_nonnegative();
  out.strictly_positive_at_origin =
      sgn(e.expected.eval({Rational(2), Rational(0)})) > 0;
  return out;
}

}  // namespace

IdentityCheck verify_ineq17() {
  const Poly r = pr(), d = pd();
  const Poly s = r + d;
  const Poly one = pconst(1);

  // t = (s-r)(s+r+1) / ((r+1)(s+1)); the fraction-cleared form of
  //   ((t)(1/r + 1/s) + r/s)^2 - (1/r + 1/s)
  // multiplied by r^2 (r+1)^2 s (s+1)^2 equals
  //   [NA^2 - (r+s) r s (r+1)^2 (s+1)^2] / s
  const Poly nt = d * (s + r + one);
  const Poly na = nt * (r + s) + r * r * (r + one) * (s + one);
  const Poly numerator =
      na * na - (r + s) * r * s * (r + one).pow(2) * (s + one).pow(2);

  Expansion e;
  e.expected_coeffs = {
      (r - pconst(2)) * r.pow(2) * (r + one).pow(4),   // d^0
      r * (r + one).pow(2) * rpoly({-1, -3, 3, 1}),    // d^1
      r * rpoly({1, 10, 17, 4}),                       // d^2
      rpoly({1, 9, 17, 1}),                            // d^3
      rpoly({2, 7}),                                   // d^4
      rpoly({1}),                                      // d^5
  };
  e.expected = Poly(kVarsRD);
  Poly dpow = pconst(1);
  for (const Poly& cj : e.expected_coeffs) {
    e.expected = e.expected + cj * dpow;
    dpow = dpow * d;
  }

  // numerator must equal s * expected; divide synthetically by s = d + r,
  // monic in d, to expose the computed coefficients
  auto num_coeffs = numerator.coefficients_in(1);
  std::vector<Poly> quotient;
  Poly remainder(kVarsRD);
  if (!num_coeffs.empty()) {
    quotient.assign(num_coeffs.size() > 1 ? num_coeffs.size() - 1 : 1, Poly(kVarsRD));
    Poly carry = num_coeffs.back();
    for (std::size_t j = num_coeffs.size() - 1; j-- > 0;) {
      quotient[j] = carry;
      carry = num_coeffs[j] - r * carry;
    }
    remainder = carry;
  }
  Poly computed(kVarsRD);
  Poly dp = pconst(1);
  for (const Poly& qj : quotient) {
    computed = computed + qj * dp;
    dp = dp * d;
  }
  e.computed = computed;

  IdentityCheck out = check_expansion(e);
  out.match = out.match && remainder.is_zero();
  if (!remainder.is_zero()) out.residual += " remainder: " + remainder.to_string();
  return out;
}

IdentityCheck verify_ineq18() {
  const Poly r = pr(), d = pd();
  const Poly s = r + d;
  const Poly one = pconst(1);

  // fraction-cleared form of
  //   4 (r+1)^2 (s+1)^2 (r+s)(r+s-1) *
  //     [ (r^2 t + t + r)(t + r) rs/(r+s) + (st - r^2) r(s-1)/(r+s-1) - s^2/4 ]
  const Poly nt = d * (s + r + one);
  const Poly dt = (r + one) * (s + one);
  const Poly term1 = pconst(4) * r * s * (r + s - one) *
                     ((r * r + one) * nt + r * dt) * (nt + r * dt);
  const Poly term2 = pconst(4) * r * (s - one) * (r + s) * dt * (s * nt - r * r * dt);
  const Poly term3 = s * s * dt * dt * (r + s) * (r + s - one);

  Expansion e;
  e.computed = term1 + term2 - term3;
  e.expected_coeffs = {
      pconst(2) * r.pow(3) * (r + one).pow(4),                     // d^0
      r.pow(2) * (r + one).pow(2) * rpoly({5, -14, -23, 32, 0, 16}),  // d^1
      r * rpoly({4, -11, -96, -48, 156, 163, 112, 48}),            // d^2
      rpoly({1, -2, -59, -12, 232, 208, 152, 52}),                 // d^3
      rpoly({1, -14, 3, 160, 122, 100, 24}),                       // d^4
      rpoly({-1, -2, 51, 32, 32, 4}),                              // d^5
      rpoly({-1, 6, 3, 4}),                                        // d^6
  };
  e.expected = Poly(kVarsRD);
  Poly dpow = pconst(1);
  for (const Poly& cj : e.expected_coeffs) {
    e.expected = e.expected + cj * dpow;
    dpow = dpow * d;
  }
  return check_expansion(e);
}

}  // namespace isoball
