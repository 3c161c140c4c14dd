from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from mahlerctl.polycore import (
    X,
    IntPolynomial,
    PolynomialError,
    PolynomialParseError,
    RatPolynomial,
    coeffs_from_power_sums,
    count_real_roots,
    cyclotomic_part,
    cyclotomic_poly,
    discriminant,
    elementary_symmetric_from_power_sums,
    find_factor,
    format_human,
    format_poly,
    is_cyclotomic_product,
    is_irreducible,
    is_squarefree,
    parse_poly,
    poly_height,
    poly_length,
    power_sums_from_coeffs,
    resultant,
    squarefree_decomposition,
    squarefree_part,
)

LEHMER = IntPolynomial((1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1))
_x = sympy.Symbol("x")


def to_sympy(p: RatPolynomial) -> sympy.Poly:
    return sympy.Poly([sympy.Rational(c.numerator, c.denominator) if isinstance(c, Fraction) else c for c in p.coeffs], _x)


int_polys = st.lists(st.integers(-20, 20), min_size=2, max_size=9).filter(lambda cs: cs[0] != 0).map(IntPolynomial)
monic_polys = st.lists(st.integers(-10, 10), min_size=1, max_size=8).map(lambda cs: IntPolynomial([1] + cs))


# --- parsing and formatting -------------------------------------------------


def test_parse_comma_and_human_forms_agree():
    assert parse_poly("1,1,0,-1,-1,-1,-1,-1,0,1,1") == LEHMER
    assert parse_poly("x^10+x^9-x^7-x^6-x^5-x^4-x^3+x+1") == LEHMER
    assert parse_poly("X**2 - 3*X + 1") == IntPolynomial((1, -3, 1))
    assert parse_poly("1,-5/2,1") == RatPolynomial((1, Fraction(-5, 2), 1))


@pytest.mark.parametrize("text,token", [("1,a,3", "a"), ("1,,2", ""), ("x^2+y", "y")])
def test_parse_error_names_token(text, token):
    with pytest.raises(PolynomialParseError) as info:
        parse_poly(text)
    assert token in str(info.value)


@given(int_polys)
def test_format_parse_round_trip(p):
    assert parse_poly(format_poly(p)) == p
    assert parse_poly(format_human(p)) == p


def test_int_polynomial_rejects_fractions():
    with pytest.raises(PolynomialError):
        IntPolynomial((1, Fraction(1, 2)))


# --- arithmetic ---------------------------------------------------------------


@given(int_polys, int_polys)
def test_divmod_identity(a, b):
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.is_zero() or r.degree < b.degree


@given(int_polys, int_polys)
@settings(max_examples=50)
def test_gcd_matches_sympy(a, b):
    g = a.gcd(b)
    expected = sympy.gcd(to_sympy(a), to_sympy(b)).monic()
    assert [Fraction(int(c.p), int(c.q)) for c in expected.all_coeffs()] == [Fraction(c) for c in g.coeffs]


def test_evaluation_and_derivative():
    p = IntPolynomial((1, -3, 1))
    assert p(2) == -1
    assert p.derivative() == IntPolynomial((2, -3))
    assert (X**2 - 1) // (X - 1) == X + 1


# --- Newton's identities ------------------------------------------------------


@pytest.mark.parametrize(
    "sums,expected", [([3, 7], [3, 1]), ([0, 0, 0], [0, 0, 0]), ([2, 2], [2, 1])]
)
def test_elementary_from_power_sums(sums, expected):
    assert elementary_symmetric_from_power_sums(sums) == expected


@pytest.mark.parametrize(
    "coeffs,k,expected", [((1, -3, 1), 2, [3, 7]), ((1, 0, 0, -1), 3, [0, 0, 3]), ((1, -2, 1), 2, [2, 2])]
)
def test_power_sums_from_coeffs(coeffs, k, expected):
    assert power_sums_from_coeffs(IntPolynomial(coeffs), k) == expected


def test_power_sums_beyond_degree_match_numeric_roots():
    sums = power_sums_from_coeffs(LEHMER, 15)
    roots = np.roots(LEHMER.coeffs)
    for k, s in enumerate(sums, start=1):
        assert abs(complex(np.sum(roots**k)) - float(s)) < 1e-8


def test_power_sums_rejects_non_monic():
    with pytest.raises(PolynomialError):
        power_sums_from_coeffs(IntPolynomial((2, 1)), 2)


@given(monic_polys)
def test_newton_round_trip(p):
    assert coeffs_from_power_sums(power_sums_from_coeffs(p, p.degree)) == p


# --- length, height, resultant, discriminant ----------------------------------


@pytest.mark.parametrize("p,length", [(IntPolynomial((1, -3, 1)), 5), (LEHMER, 9), (IntPolynomial((1, -1)), 2)])
def test_poly_length(p, length):
    assert poly_length(p) == length


def test_height():
    assert poly_height(IntPolynomial((1, -7, 3))) == 7


@pytest.mark.parametrize(
    "coeffs,disc", [((1, -3, 1), 5), ((1, -2, 1), 0), ((1, -1, -2, 1), 49), (LEHMER.coeffs, 1332031009)]
)
def test_discriminant_examples(coeffs, disc):
    assert discriminant(IntPolynomial(coeffs)) == disc


def test_discriminant_rejects_constant():
    with pytest.raises(PolynomialError):
        discriminant(IntPolynomial((5,)))


def _sylvester_resultant(a: RatPolynomial, b: RatPolynomial) -> Fraction:
    """Independent oracle: determinant of the Sylvester matrix by exact elimination."""
    m, n = a.degree, b.degree
    size = m + n
    rows = []
    for i in range(n):
        rows.append([0] * i + [Fraction(c) for c in a.coeffs] + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + [Fraction(c) for c in b.coeffs] + [0] * (size - n - 1 - i))
    det = Fraction(1)
    for col in range(size):
        piv = next((r for r in range(col, size) if rows[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            det = -det
        det *= rows[col][col]
        for r in range(col + 1, size):
            f = rows[r][col] / rows[col][col]
            rows[r] = [x - f * y for x, y in zip(rows[r], rows[col])]
    return det


@given(int_polys, int_polys)
@settings(max_examples=60)
def test_resultant_matches_sylvester(a, b):
    if a.degree < 1 or b.degree < 1:
        return
    assert resultant(a, b) == _sylvester_resultant(a, b)


@given(int_polys)
@settings(max_examples=60)
def test_discriminant_matches_sylvester_oracle(p):
    if p.degree < 2:
        return
    n = p.degree
    expected = (-1) ** (n * (n - 1) // 2) * _sylvester_resultant(p, p.derivative()) / p.lead
    assert discriminant(p) == expected


# --- square-free structure and real roots -------------------------------------


def test_squarefree_decomposition_reconstructs():
    p = (X - 1) ** 3 * (X + 2) ** 2 * (X**2 + 1)
    parts = squarefree_decomposition(p)
    prod = IntPolynomial((1,))
    for f, k in parts:
        prod = prod * f**k
    assert prod == p
    assert sorted(k for _, k in parts) == [1, 2, 3]
    assert squarefree_part(p) == (X - 1) * (X + 2) * (X**2 + 1)
    assert not is_squarefree(p)
    assert is_squarefree(LEHMER)


@given(int_polys)
@settings(max_examples=50)
def test_sturm_count_matches_sympy(p):
    if p.degree < 1:
        return
    assert count_real_roots(p) == len(set(sympy.real_roots(to_sympy(p))))  # distinct roots


# --- cyclotomic detection and irreducibility ----------------------------------


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5, 6, 8, 12, 15, 30, 105])
def test_cyclotomic_poly_matches_sympy(m):
    assert list(cyclotomic_poly(m).coeffs) == sympy.Poly(sympy.cyclotomic_poly(m, _x), _x).all_coeffs()


def test_cyclotomic_part_examples():
    phi12 = IntPolynomial((1, 0, -1, 0, 1))
    assert cyclotomic_part(phi12) == (phi12, IntPolynomial((1,)))
    assert cyclotomic_part(LEHMER) == (IntPolynomial((1,)), LEHMER)
    q = IntPolynomial((1, -3, 1))
    assert cyclotomic_part((X - 1) * q) == (X - 1, q)
    assert is_cyclotomic_product(phi12 * (X + 1) ** 2)


def test_cyclotomic_part_rejects_non_monic():
    with pytest.raises(PolynomialError):
        cyclotomic_part(IntPolynomial((2, 0, 1)))


@given(st.lists(st.sampled_from([1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12]), min_size=1, max_size=3))
def test_products_of_cyclotomics_detected(ms):
    p = IntPolynomial((1,))
    for m in ms:
        p = p * cyclotomic_poly(m)
    cyc, rest = cyclotomic_part(p)
    assert cyc == p and rest == IntPolynomial((1,))


@given(int_polys)
@settings(max_examples=40, deadline=None)
def test_irreducibility_over_q_matches_sympy(p):
    if p.degree < 1 or p.degree > 6:
        return
    factors = sympy.factor_list(to_sympy(p))[1]  # content is split off separately
    expected = len(factors) == 1 and factors[0][1] == 1
    assert is_irreducible(p) == expected


def test_find_factor_divides():
    p = (X**2 + X + 2) * (X**3 - X + 5)
    f = find_factor(p)
    assert f is not None and 0 < f.degree < p.degree
    assert (p % f).is_zero()
    assert find_factor(LEHMER) is None
