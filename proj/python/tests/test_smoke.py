import math
from fractions import Fraction

import isoball


def test_exact_counting_matches_math_comb():
    assert isoball.binom(6, 3) == 20
    assert isoball.binom(5, 7) == 0
    assert isoball.binom(200, 100) == math.comb(200, 100)
    assert isoball.ball_size(6, 3) == 42
    assert isoball.ball_size(64, 64) == 2**64


def test_lemma6_style_checks():
    assert isoball.check_ratio_monotone(20)
    assert isoball.check_slice_lower_bound(20, 10)
    assert isoball.check_central_binomial(30)


def test_shadows_and_boundaries():
    a0 = isoball.costar(4, 2, 1)
    assert a0["size"] == 3
    assert isoball.family_size(a0) == 3
    assert isoball.lower_shadow(a0)["size"] == 3
    assert isoball.upper_shadow(a0)["size"] == 4
    assert isoball.cube_boundary(a0)["size"] == 7

    ball1 = {"repr": "explicit", "n": 4, "members": [[], [1], [2], [3], [4]]}
    bd = isoball.ball_boundary(ball1, 2)
    assert bd["size"] == 6  # the next slice


def test_profile_round_trip_and_boundary():
    p = isoball.ball_halfspace(4, 2, 0)
    assert isoball.family_size(p) == 8
    explicit = isoball.expand_profile(p)
    back = isoball.profile_of(explicit, p["m"])
    assert back["cells"] == p["cells"]

    profile_ball1 = isoball.profile_of(
        {"repr": "explicit", "n": 6, "members": [[], [1], [2], [3], [4], [5], [6]]}, 3
    )
    bd = isoball.profile_ball_boundary(profile_ball1, 2)
    assert isoball.family_size(bd) == 15


def test_bounds():
    lower, upper = isoball.nm_bounds(4, 2, 3)
    assert (lower, upper) == (Fraction(2), Fraction(2))
    verdict = isoball.local_expansion_check(4, 2, 3, 7)
    assert verdict["holds"]
    assert verdict["linear_excess"] == Fraction(3, 2) + Fraction(3, 2)
    assert isoball.hypergeometric_pmf(2, 2, 4, 1) == Fraction(2, 3)
    assert isoball.hypergeometric_max_ratio(2, 4) == Fraction(4, 9)
    params = isoball.lemma7_params(8, 4, 40)
    assert params == {"epsilon": Fraction(1, 4), "r0": 2, "c": Fraction(113, 153)}


def test_quadratic_machinery():
    roots = isoball.claim_roots(2, 4, Fraction(2, 5))
    assert roots["evaluated"] and roots["all_hold"]
    assert abs(roots["x2_minus"] - 0.2821) < 1e-3
    assert abs(roots["x1_plus"] - 0.3664) < 1e-3
    assert isoball.verify_ineq17() == {"match": True, "positivity_certified": True}
    assert isoball.verify_ineq18() == {"match": True, "positivity_certified": True}


def test_searches():
    report = isoball.exhaustive_verify_local_expansion(4, 2)
    assert report["counters"]["violations"] == "0"
    assert report["families_examined"] == "64"
    harper = isoball.exhaustive_min_boundary(4, 5)
    assert harper["counters"]["min_boundary"] == "6"
    descent = isoball.local_search_minimizer(4, 4, 5, seed=1, steps=50)
    assert int(descent["counters"]["min_boundary"]) >= 6
