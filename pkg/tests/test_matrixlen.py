from __future__ import annotations

import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mahlerctl import exactmat
from mahlerctl.matrixlen import (
    MatrixParseError,
    NotSemisimpleError,
    RealMatrix,
    char_poly,
    check_semisimple,
    companion,
    format_matrix,
    matrix_from_json,
    parse_matrix,
    random_semisimple_sl,
    random_unimodular,
    translation_length_matrix,
    verify_theorem_a,
)
from mahlerctl.measures import LEHMER, HypothesisError
from mahlerctl.polycore import IntPolynomial, RatPolynomial

ROT45 = [[math.cos(math.pi / 4), -math.sin(math.pi / 4)], [math.sin(math.pi / 4), math.cos(math.pi / 4)]]


def diag(*vals):
    n = len(vals)
    return RealMatrix([[vals[i] if i == j else 0 for j in range(n)] for i in range(n)])


# --- parsing -------------------------------------------------------------------


def test_parse_matrix_forms():
    a = parse_matrix("3,4;2,3")
    assert a.exact and a.entries == ((3, 4), (2, 3))
    b = parse_matrix("[[2, 0], [0, \"1/2\"]]")
    assert b.entries == ((2, 0), (0, Fraction(1, 2)))
    assert parse_matrix("0.5,0;0,2").entries == ((Fraction(1, 2), 0), (0, 2))
    assert parse_matrix(format_matrix(a)).entries == a.entries


@pytest.mark.parametrize("text,token", [("1,2;3,q", "q"), ("1,2;3", "3")])
def test_parse_matrix_errors_name_token(text, token):
    with pytest.raises((MatrixParseError, ValueError)) as info:
        parse_matrix(text)
    assert token in str(info.value)


def test_matrix_from_json_float_entries_are_numeric():
    m = matrix_from_json([[1.5, 0.0], [0.0, 2.0]])
    assert not m.exact


# --- characteristic polynomial ----------------------------------------------------


def test_char_poly_examples():
    assert char_poly(diag(2, Fraction(1, 2))) == RatPolynomial((1, Fraction(-5, 2), 1))
    assert char_poly(parse_matrix("3,4;2,3")) == IntPolynomial((1, -6, 1))
    assert char_poly(diag(1, 1, 1)) == IntPolynomial((1, -3, 3, -1))


@given(st.lists(st.integers(-4, 4), min_size=9, max_size=9))
@settings(max_examples=50)
def test_faddeev_leverrier_matches_numpy(vals):
    rows = [vals[0:3], vals[3:6], vals[6:9]]
    cp = exactmat.faddeev_leverrier(exactmat.to_exact(rows))
    assert np.allclose([float(c) for c in cp.coeffs], np.poly(np.array(rows, dtype=float)), atol=1e-9)


def test_companion_char_poly_is_input():
    assert char_poly(companion(LEHMER)) == LEHMER


def test_exact_det_and_inverse():
    g = random_unimodular(5, np.random.default_rng(3))
    assert exactmat.det(g) == 1
    assert exactmat.matmul(g, exactmat.inverse(g)) == exactmat.identity(5)


# --- semisimplicity -----------------------------------------------------------------


def test_check_semisimple_examples():
    assert check_semisimple(diag(2, Fraction(1, 2))).is_semisimple
    jordan = check_semisimple(parse_matrix("1,1;0,1"))
    assert not jordan.is_semisimple and jordan.status == "not_semisimple"
    assert check_semisimple(RealMatrix(ROT45)).is_semisimple


def test_scalar_matrix_is_semisimple():
    assert check_semisimple(diag(3, 3, Fraction(1, 3), Fraction(1, 3))).is_semisimple


def test_numeric_jordan_block_detected():
    c = check_semisimple(RealMatrix([[1.0, 1.0], [0.0, 1.0]]))
    assert c.status in ("not_semisimple", "indeterminate") and not c.is_semisimple


# --- translation length -----------------------------------------------------------


def test_translation_length_examples():
    v, err = translation_length_matrix(diag(math.e, 1 / math.e))
    assert abs(v - 2.0) < 1e-12 and err < 1e-10
    v, _ = translation_length_matrix(diag(2, 2, Fraction(1, 4)))
    assert abs(v - math.sqrt(12) * math.log(2)) < 1e-12
    v, _ = translation_length_matrix(RealMatrix(ROT45))
    assert abs(v) < 1e-12


def test_translation_length_rejects_bad_input():
    with pytest.raises(NotSemisimpleError):
        translation_length_matrix(parse_matrix("1,1;0,1"))
    with pytest.raises(HypothesisError):
        translation_length_matrix(diag(2, 3))
    translation_length_matrix(diag(-2, Fraction(1, 2)))  # det -1 accepted by default
    with pytest.raises(HypothesisError):
        translation_length_matrix(diag(-2, Fraction(1, 2)), strict_det=True)


def test_verify_theorem_a_examples():
    r = verify_theorem_a(diag(2, Fraction(1, 2)))
    assert r.equality_case == "both_tight" and abs(r.translation_length - 2 * math.log(2)) < 1e-12
    r = verify_theorem_a(companion(LEHMER))
    assert r.equality_case == "upper_tight" and abs(r.translation_length - 2 * 0.1623576120) < 1e-9
    r = verify_theorem_a(diag(3, 3, Fraction(1, 3), Fraction(1, 3)))
    assert r.equality_case == "lower_tight"
    assert abs(r.translation_length - 2 * math.sqrt(2) * math.log(3)) < 1e-12
    assert abs(r.matrix_length - r.translation_length) < 1e-10


@pytest.mark.parametrize("seed", range(6))
def test_random_semisimple_samples(seed):
    rng = np.random.default_rng(seed)
    for n in range(2, 11):
        x = random_semisimple_sl(n, rng)
        assert x.exact and x.det() == 1
        r = verify_theorem_a(x, strict_det=True)
        assert r.lower_holds() and r.upper_holds()
