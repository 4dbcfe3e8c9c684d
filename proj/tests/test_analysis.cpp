#include <random>

#include "doctest.h"

#include "isoball/analysis.hpp"

using namespace isoball;

namespace {

ExpansionParams figure_params() { return ExpansionParams(2, 4, make_rational(2, 5)); }

// the two appendix expressions evaluated directly over rationals, as an
// independent oracle for the symbolic expansion
Rational ineq17_direct(unsigned r, unsigned s) {
  const Rational t = make_rational(Natural(s), Natural(r + 1)) -
                     make_rational(Natural(r), Natural(s + 1));
  const Rational inv = make_rational(Natural(r + s), Natural(r) * s);  // 1/r + 1/s
  const Rational expr = (t * inv + make_rational(Natural(r), Natural(s))) *
                            (t * inv + make_rational(Natural(r), Natural(s))) -
                        inv;
  return expr * Rational(Natural(r) * r) * Rational(Natural(r + 1) * (r + 1)) *
         Rational(Natural(s)) * Rational(Natural(s + 1) * (s + 1));
}

Rational ineq18_direct(unsigned r, unsigned s) {
  const Rational t = make_rational(Natural(s), Natural(r + 1)) -
                     make_rational(Natural(r), Natural(s + 1));
  const Rational rr(static_cast<unsigned long>(r)), ss(static_cast<unsigned long>(s));
  const Rational inner = (rr * rr * t + t + rr) * (t + rr) * rr * ss / Rational(Natural(r + s)) +
                         (ss * t - rr * rr) * rr * (ss - 1) / Rational(Natural(r + s - 1)) -
                         ss * ss / Rational(4);
  return inner * Rational(4) * Rational(Natural(r + 1) * (r + 1)) *
         Rational(Natural(s + 1) * (s + 1)) * Rational(Natural(r + s)) *
         Rational(Natural(r + s - 1));
}

}  // namespace

TEST_CASE("expansion parameter constants, exact") {
  const auto p = figure_params();
  CHECK(p.n() == 6);
  CHECK(p.c_sq() == make_rational(3, 4));
  CHECK(p.c0_sq() == make_rational(5, 6));
  CHECK(p.c1_sq() == make_rational(5, 4));
  CHECK(p.t() == make_rational(14, 15));
  CHECK(p.xstar() == make_rational(9, 10));
  CHECK(to_double(p.q_threshold()) == doctest::Approx(1.2470766).epsilon(1e-6));
  CHECK_THROWS_AS(ExpansionParams(1, 4, Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(ExpansionParams(2, 1, Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(ExpansionParams(2, 4, Rational(2)), std::invalid_argument);
}

TEST_CASE("derived constant ordering, exact squared form") {
  for (unsigned r = 2; r <= 120; r += (r < 12 ? 1 : 7))
    for (unsigned s = r; s <= 120; s += (s < 12 ? 1 : 5))
      CHECK(constant_ordering_check(r, s).holds);
}

TEST_CASE("L evaluations at the figure instance") {
  const auto p = figure_params();
  CHECK(to_double(eval_L(p, LFunc::L1, 0)) == doctest::Approx(1.4130124).epsilon(1e-6));
  // alpha1(x*) = 1 kills the quadratic term of L2-
  const Real xs = to_real(p.xstar());
  CHECK(to_double(alpha1_at(p, xs)) == doctest::Approx(1.0));
  CHECK(to_double(eval_L(p, LFunc::L2Minus, xs)) == doctest::Approx(2.64).epsilon(1e-9));
  CHECK(to_double(eval_L(p, LFunc::L2, xs)) == doctest::Approx(2.64).epsilon(1e-9));
  // L1(0) clears the threshold
  CHECK(eval_L(p, LFunc::L1, 0) > p.q_threshold());
}

TEST_CASE("claim roots at the figure instance") {
  const auto rb = claim_roots(figure_params());
  CHECK(!rb.vacuous);
  REQUIRE(rb.evaluated);
  CHECK(to_double(rb.x2_minus) == doctest::Approx(0.2821).epsilon(1e-3));
  CHECK(to_double(rb.x1_plus) == doctest::Approx(0.3664).epsilon(1e-3));
  CHECK(rb.conclusion == Tri::Holds);
  CHECK(rb.all_hold);
  CHECK(rb.criterion_agrees);
  CHECK(rb.monic_root_deviation <= 1e-9);
  // the monic normalizations at this instance
  CHECK(to_double(rb.p1.B) == doctest::Approx(5.5295).epsilon(1e-4));
  CHECK(to_double(rb.p1.C) == doctest::Approx(-2.16).epsilon(1e-9));
  CHECK(to_double(rb.p2.B) == doctest::Approx(-4.1105).epsilon(1e-4));
  CHECK(to_double(rb.p2.C) == doctest::Approx(1.08).epsilon(1e-9));
}

TEST_CASE("interlace criterion") {
  // figure instance quadratics, +C convention
  MonicQuadratic p1{Real(5.5295), Real(-2.16)};
  MonicQuadratic p2{Real(-4.1105), Real(1.08)};
  const auto res = interlace_check(p1, p2);
  CHECK(res.roots_real);
  CHECK(res.hypothesis == Tri::Holds);
  CHECK(res.order_minus == Tri::Holds);
  CHECK(res.order_plus == Tri::Holds);
  CHECK(res.conclusion == Tri::Holds);
  CHECK(to_double(res.p1_at_crossing) < 0);

  // shifted pair with known roots: (-1, 1) and (0, 2)
  const auto shifted = interlace_check(MonicQuadratic{Real(0), Real(-1)},
                                       MonicQuadratic{Real(-2), Real(0)});
  CHECK(shifted.conclusion == Tri::Holds);  // 0 < 1
  CHECK(shifted.hypothesis == Tri::Holds);  // 1 + 2*(-2) = -3 < 0
  CHECK(to_double(shifted.crossing_x) == doctest::Approx(0.5));

  // equal linear coefficients: crossing undefined
  const auto degenerate = interlace_check(MonicQuadratic{Real(1), Real(-1)},
                                          MonicQuadratic{Real(1), Real(-2)});
  CHECK(degenerate.b_coincide);
}

TEST_CASE("claim alpha") {
  const auto good = claim_alpha(figure_params());
  CHECK(good.hypothesis == Tri::Holds);
  CHECK(good.conclusion);  // 0.4 < (t+r)/(s c) = 0.8468
  CHECK(good.implication_holds);

  // alpha near 1: the hypothesis fails, implication vacuous
  const auto vac = claim_alpha(ExpansionParams(2, 4, make_rational(9, 10)));
  CHECK(vac.hypothesis == Tri::Fails);
  CHECK(vac.implication_holds);
}

TEST_CASE("claim machinery sweep (reduced grid)") {
  for (unsigned r = 2; r <= 20; ++r)
    for (unsigned s = r; s <= 20; ++s)
      for (unsigned num = 1; num <= 19; num += 2) {
        const ExpansionParams p(r, s, make_rational(num, 20));
        const auto rb = claim_roots(p);
        CHECK(!rb.any_inconclusive);
        if (!rb.vacuous) {
          CHECK(rb.all_hold);
          CHECK(rb.criterion_agrees);
        }
        CHECK(claim_alpha(p).implication_holds);
      }
}

TEST_CASE("quintic appendix expansion") {
  const auto chk = verify_ineq17();
  CHECK(chk.match);
  CHECK(chk.positivity_certified);
  REQUIRE(chk.coefficients.size() == 6);
  CHECK(chk.coefficients.front().power == 5);
  CHECK(chk.coefficients.front().expected == "1");
  for (const auto& c : chk.coefficients) CHECK(c.matches);

  // printed coefficient spot values
  const std::vector<std::string> vars{"r"};
  const auto r = IntPolynomial::variable(vars, 0);
  const auto one = IntPolynomial::constant(vars, 1);
  const auto d3 = r.pow(3) + IntPolynomial::constant(vars, 17) * r.pow(2) +
                  IntPolynomial::constant(vars, 9) * r + one;
  CHECK(d3.eval({Rational(2)}) == 95);
  const auto d0 = (r - IntPolynomial::constant(vars, 2)) * r.pow(2) * (r + one).pow(4);
  CHECK(d0.eval({Rational(2)}) == 0);
}

TEST_CASE("sextic appendix expansion") {
  const auto chk = verify_ineq18();
  CHECK(chk.match);
  CHECK(chk.positivity_certified);
  CHECK(chk.strictly_positive_at_origin);
  REQUIRE(chk.coefficients.size() == 7);
  CHECK(chk.coefficients.front().power == 6);
  for (const auto& c : chk.coefficients) CHECK(c.matches);

  // leading coefficient 4r^3 + 3r^2 + 6r - 1 at r = 2
  const std::vector<std::string> vars{"r"};
  const auto r = IntPolynomial::variable(vars, 0);
  const auto lead = IntPolynomial::constant(vars, 4) * r.pow(3) +
                    IntPolynomial::constant(vars, 3) * r.pow(2) +
                    IntPolynomial::constant(vars, 6) * r - IntPolynomial::constant(vars, 1);
  CHECK(lead.eval({Rational(2)}) == 55);
}

TEST_CASE("appendix expansions agree with direct rational evaluation") {
  // the polynomial identities, spot-checked against fraction arithmetic
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const unsigned r = 2 + static_cast<unsigned>(rng() % 12);
    const unsigned s = r + static_cast<unsigned>(rng() % 12);
    // rebuild the printed polynomials and evaluate at (r, d)
    const Rational d(static_cast<unsigned long>(s - r));
    const Rational rr(static_cast<unsigned long>(r));

    Rational p17(0), p18(0);
    {
      const std::vector<Rational> c17 = {
          (rr - 2) * rr * rr * (rr + 1) * (rr + 1) * (rr + 1) * (rr + 1),
          rr * (rr + 1) * (rr + 1) * (rr * rr * rr + 3 * rr * rr - 3 * rr - 1),
          rr * (4 * rr * rr * rr + 17 * rr * rr + 10 * rr + 1),
          rr * rr * rr + 17 * rr * rr + 9 * rr + 1,
          7 * rr + 2,
          Rational(1)};
      Rational dp(1);
      for (const auto& c : c17) {
        p17 += c * dp;
        dp *= d;
      }
    }
    {
      const Rational r2 = rr * rr, r3 = rr * rr * rr;
      const Rational r4 = r2 * r2, r5 = r4 * rr, r6 = r5 * rr, r7 = r6 * rr;
      const std::vector<Rational> c18 = {
          2 * r3 * (rr + 1) * (rr + 1) * (rr + 1) * (rr + 1),
          r2 * (rr + 1) * (rr + 1) * (16 * r5 + 32 * r3 - 23 * r2 - 14 * rr + 5),
          rr * (48 * r7 + 112 * r6 + 163 * r5 + 156 * r4 - 48 * r3 - 96 * r2 - 11 * rr + 4),
          52 * r7 + 152 * r6 + 208 * r5 + 232 * r4 - 12 * r3 - 59 * r2 - 2 * rr + 1,
          24 * r6 + 100 * r5 + 122 * r4 + 160 * r3 + 3 * r2 - 14 * rr + 1,
          4 * r5 + 32 * r4 + 32 * r3 + 51 * r2 - 2 * rr - 1,
          4 * r3 + 3 * r2 + 6 * rr - 1};
      Rational dp(1);
      for (const auto& c : c18) {
        p18 += c * dp;
        dp *= d;
      }
    }
    CHECK(p17 == ineq17_direct(r, s));
    CHECK(p18 == ineq18_direct(r, s));
  }
}

TEST_CASE("aux inequality chain") {
  const auto a24 = verify_aux_chain(2, 4);
  CHECK(a24.ordering.holds);
  CHECK(a24.core_exact);
  CHECK(a24.reduction_exact);
  CHECK(a24.refined == Tri::Holds);
  CHECK(a24.holds);

  const auto a22 = verify_aux_chain(2, 2);  // t = 0
  CHECK(a22.holds);

  for (unsigned r = 2; r <= 30; ++r)
    for (unsigned s = r; s <= 30; ++s) CHECK(verify_aux_chain(r, s).holds);

  CHECK_THROWS_AS(verify_aux_chain(1, 4), std::invalid_argument);
  CHECK_THROWS_AS(verify_aux_chain(4, 2), std::invalid_argument);
}

TEST_CASE("integer polynomial arithmetic") {
  const std::vector<std::string> vars{"x", "y"};
  const auto x = IntPolynomial::variable(vars, 0);
  const auto y = IntPolynomial::variable(vars, 1);
  const auto one = IntPolynomial::constant(vars, 1);

  CHECK((x + one).pow(2) == x * x + IntPolynomial::constant(vars, 2) * x + one);
  CHECK(((x + y) * (x - y)) == x * x - y * y);
  CHECK((x - x).is_zero());

  const auto shifted = (x * x).shift_variable(0, Integer(2));
  CHECK(shifted == x * x + IntPolynomial::constant(vars, 4) * x +
                       IntPolynomial::constant(vars, 4));

  const auto p = x * x * y + IntPolynomial::constant(vars, 3) * y + x;
  const auto coeffs = p.coefficients_in(1);
  REQUIRE(coeffs.size() == 2);
  CHECK(coeffs[0] == x);
  CHECK(coeffs[1] == x * x + IntPolynomial::constant(vars, 3));
  CHECK(p.degree_in(0) == 2);
  CHECK(p.eval({Rational(2), Rational(3)}) == 2 * 2 * 3 + 3 * 3 + 2);
  CHECK(!(x - y).all_coefficients_nonnegative());
  CHECK((x + y).all_coefficients_nonnegative());
}

TEST_CASE("real layer") {
  CHECK(to_double(to_real(make_rational(1, 3))) == doctest::Approx(1.0 / 3));
  CHECK(to_double(to_real(Integer("123456789012345678901234567890"))) ==
        doctest::Approx(1.2345678901234568e29));
  CHECK(real_to_string(Real(2), 3) == "2");
  CHECK(strictly_less(Real(0), Real(1)) == Tri::Holds);
  CHECK(strictly_less(Real(1), Real(0)) == Tri::Fails);
  CHECK(strictly_less(Real(0), Real(1e-12)) == Tri::Inconclusive);
}

TEST_CASE("monic quadratic roots") {
  MonicQuadratic q{Real(-3), Real(2)};  // roots 1 and 2
  const auto roots = q.roots();
  REQUIRE(roots.has_value());
  CHECK(to_double(roots->first) == doctest::Approx(1.0));
  CHECK(to_double(roots->second) == doctest::Approx(2.0));
  CHECK(!MonicQuadratic{Real(0), Real(1)}.roots().has_value());
}
