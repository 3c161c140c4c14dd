from __future__ import annotations

import json
import math
from fractions import Fraction

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mahlerctl.measures import (
    LEHMER,
    BoundFunctionValue,
    HypothesisError,
    MeasureReport,
    check_bounds,
    corollary_bounds,
    lower_bound_function,
    mahler_classical_inequalities,
    mahler_measure,
    silverman_disc_bound,
    systole_lower_bound,
    translation_length_poly,
    voutier_bound,
)
from mahlerctl.polycore import IntPolynomial, RatPolynomial, discriminant

PHI2 = (3 + math.sqrt(5)) / 2
M_LEHMER = 1.1762808182599176


def numpy_mahler(coeffs) -> float:
    """Independent double-precision oracle."""
    return abs(coeffs[0]) * float(np.prod(np.maximum(1.0, np.abs(np.roots(coeffs)))))


def numpy_length(coeffs) -> float:
    logs = np.log(np.abs(np.roots(coeffs)))
    return float(np.sqrt(2 * np.sum(logs**2)))


# --- Mahler measure and translation length ------------------------------------


def test_mahler_lehmer():
    m, err = mahler_measure(LEHMER)
    assert abs(m - 1.1762808183) < 1e-9
    assert err < 1e-9


def test_mahler_examples():
    assert mahler_measure(IntPolynomial((1, 0, -1, 0, 1)))[0] == pytest.approx(1.0, abs=1e-12)
    assert mahler_measure(IntPolynomial((1, -3, 1)))[0] == pytest.approx(PHI2, abs=1e-10)
    # non-monic convention: |lead| times the root contribution
    assert mahler_measure(IntPolynomial((2, -5, 2)))[0] == pytest.approx(4.0, abs=1e-12)


@given(st.lists(st.integers(-6, 6), min_size=2, max_size=9).filter(lambda c: c[0] != 0))
@settings(max_examples=60, deadline=None)
def test_mahler_matches_numpy(cs):
    m, _ = mahler_measure(IntPolynomial(cs))
    assert abs(m - numpy_mahler(cs)) <= 1e-6 * m


def test_translation_length_examples():
    v, _ = translation_length_poly(IntPolynomial((1, -3, 1)))
    assert abs(v - 2 * math.log(PHI2)) < 1e-12 and abs(v - 1.9248473) < 1e-7
    assert translation_length_poly(IntPolynomial((1, 0, -1, 0, 1)))[0] == pytest.approx(0.0, abs=1e-9)
    v, _ = translation_length_poly(RatPolynomial((1, Fraction(-5, 2), 1)))
    assert abs(v - 2 * math.log(2)) < 1e-12


def test_translation_length_rejects_zero_constant():
    with pytest.raises(HypothesisError):
        translation_length_poly(IntPolynomial((1, -3, 0)))


@given(st.lists(st.integers(-6, 6), min_size=1, max_size=8).filter(lambda c: c[-1] != 0))
@settings(max_examples=40, deadline=None)
def test_translation_length_matches_numpy(cs):
    cs = [1] + cs
    v, _ = translation_length_poly(IntPolynomial(cs))
    assert abs(v - numpy_length(cs)) < 1e-6 * max(1.0, v)


# --- the sandwich and equality cases ------------------------------------------


def test_bounds_quadratic_both_tight():
    r = check_bounds(IntPolynomial((1, -3, 1)))
    assert r.equality_case == "both_tight"
    assert r.lower_bound == pytest.approx(r.upper_bound, abs=1e-12)
    assert abs(r.translation_length - 1.9248473) < 1e-7


def test_bounds_lehmer_upper_tight():
    r = check_bounds(LEHMER, strict=True)
    assert r.equality_case == "upper_tight"
    assert abs(r.translation_length - 2 * math.log(M_LEHMER)) < 1e-9
    assert r.lower_holds() and r.upper_holds()


def test_bounds_square_lower_tight():
    r = check_bounds(IntPolynomial((1, -3, 1)) ** 2)
    assert r.equality_case == "lower_tight"
    assert abs(r.translation_length - 2 * math.sqrt(2 / 4) * r.log_mahler) < 1e-9


def test_bounds_generic_neither():
    # roots: 2, 1/2 and a pair (3 ± sqrt 5)/2 -> three distinct moduli off the circle
    p = IntPolynomial((2, -5, 2)) * IntPolynomial((1, -3, 1))
    r = check_bounds(RatPolynomial(tuple(Fraction(c, 2) for c in p.coeffs)))
    assert r.equality_case == "neither"
    assert r.lower_bound < r.translation_length < r.upper_bound


def test_bounds_modes_on_root_product():
    minus_one = IntPolynomial((1, 0, -3, -1))  # product of roots is +1 -> ok both modes
    check_bounds(minus_one, strict=True)
    flipped = IntPolynomial((1, -3, -1))  # product -1
    check_bounds(flipped)
    with pytest.raises(HypothesisError):
        check_bounds(flipped, strict=True)
    with pytest.raises(HypothesisError):
        check_bounds(IntPolynomial((1, -3, 2)))
    with pytest.raises(HypothesisError):
        check_bounds(IntPolynomial((2, -5, 2)))


@given(st.lists(st.integers(-5, 5), min_size=1, max_size=9), st.sampled_from([1, -1]))
@settings(max_examples=60, deadline=None)
def test_sandwich_holds_on_random_unit_constant(middle, c0):
    r = check_bounds(IntPolynomial([1] + middle + [c0]))
    assert r.lower_holds() and r.upper_holds()


def test_report_json_round_trip():
    r = check_bounds(LEHMER)
    back = MeasureReport.from_dict(json.loads(json.dumps(r.to_dict())))
    assert back == r


# --- the bound function f and systole bound -----------------------------------


def _voutier_mp(n: int) -> float:
    with mpmath.workprec(200):
        ln = mpmath.log(n)
        return float((mpmath.log(ln) / ln) ** 3 / 4)


def test_lower_bound_function_examples():
    assert lower_bound_function(10).value == pytest.approx(0.1623576120, abs=1e-10)
    assert lower_bound_function(10).branch == "lehmer_branch"
    v21 = lower_bound_function(21)
    assert v21.branch == "voutier_branch" and abs(v21.value - 0.0122258) < 1e-6
    assert voutier_bound(15) < 0.01245


@pytest.mark.parametrize("n", [21, 50, 100, 1000, 10_000])
def test_voutier_branch_matches_mpmath(n):
    assert abs(voutier_bound(n) - _voutier_mp(n)) < 1e-15


def test_lower_bound_function_rejects_small_n():
    with pytest.raises(ValueError):
        lower_bound_function(1)
    with pytest.raises(ValueError):
        systole_lower_bound(1)


def test_lower_bound_function_monotone():
    vals = [lower_bound_function(n).value for n in range(2, 2001)]
    assert all(b <= a for a, b in zip(vals, vals[1:]))


def test_bound_value_round_trip():
    v = lower_bound_function(33)
    assert BoundFunctionValue.from_dict(json.loads(json.dumps(v.to_dict()))) == v


def test_systole_examples():
    assert abs(systole_lower_bound(2) - 0.3247152) < 1e-6
    assert abs(systole_lower_bound(2) - 2 * math.log(M_LEHMER)) < 1e-12
    # independently evaluated: (2 sqrt2 / sqrt20) log M(L) and (2 sqrt2/10) f_V(100)
    assert abs(systole_lower_bound(20) - 0.1026840) < 1e-6
    assert abs(systole_lower_bound(100) - 0.0025788) < 1e-6


# --- corollary and Silverman bounds -------------------------------------------


def test_corollary_examples():
    b = corollary_bounds(IntPolynomial((1, -3, 1)))
    assert b.length_lower == pytest.approx(2 * math.log(5 / 4), abs=1e-12)
    assert b.length_upper == pytest.approx(2 * math.log(5), abs=1e-12)
    assert b.disc_lower == pytest.approx(math.log(5 / 4), abs=1e-12)
    assert corollary_bounds(IntPolynomial((1, 0, -1, 0, 1))).length_lower == 0.0
    b = corollary_bounds(LEHMER)
    assert b.length_lower == 0.0
    assert b.length_upper == pytest.approx(2 * math.log(9), abs=1e-12)


@given(st.lists(st.integers(-4, 4), min_size=2, max_size=7).filter(lambda c: c[-1] in (1, -1)))
@settings(max_examples=40, deadline=None)
def test_corollary_brackets_translation_length(cs):
    p = IntPolynomial([1] + cs)
    b = corollary_bounds(p)
    v, err = translation_length_poly(p)
    assert b.length_lower <= v + err + 1e-9
    assert b.disc_lower <= v + err + 1e-9
    assert v <= b.length_upper + err + 1e-9


@pytest.mark.parametrize(
    "prime,logm,expected", [(3, 0.0, 9 * math.log(3)), (3, 0.1623576, 12 * 0.1623576 + 9 * math.log(3)), (5, 1.0, 40 + 25 * math.log(5))]
)
def test_silverman_examples(prime, logm, expected):
    assert silverman_disc_bound(prime, logm) == pytest.approx(expected, abs=1e-12)


@pytest.mark.parametrize("bad", [2, 4, 9, 1])
def test_silverman_rejects_bad_prime(bad):
    with pytest.raises(ValueError):
        silverman_disc_bound(bad, 0.1)


# --- classical inequalities ----------------------------------------------------


def test_classical_examples():
    r = mahler_classical_inequalities(LEHMER)
    assert r.all_hold and int(r.discriminant) == discriminant(LEHMER)
    r = mahler_classical_inequalities(IntPolynomial((1, -1)))
    assert r.all_hold and r.length == "2"
    r = mahler_classical_inequalities(IntPolynomial((1, -3, 1)))
    assert r.all_hold and r.discriminant == "5"
    assert r.length_margin == pytest.approx(4 * PHI2 - 5)


@given(st.lists(st.integers(-5, 5), min_size=2, max_size=11).filter(lambda c: c[0] != 0))
@settings(max_examples=60, deadline=None)
def test_classical_inequalities_hold(cs):
    assert mahler_classical_inequalities(IntPolynomial(cs)).all_hold
