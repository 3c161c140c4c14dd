"""Exact rational matrices as tuples of tuples of int/Fraction."""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

from .polycore import RatPolynomial

Matrix = tuple  # tuple[tuple[int | Fraction, ...], ...]


def to_exact(rows: Sequence[Sequence]) -> Matrix:
    out = []
    for row in rows:
        r = []
        for x in row:
            x = Fraction(x)
            r.append(int(x) if x.denominator == 1 else x)
        out.append(tuple(r))
    if any(len(r) != len(out[0]) for r in out):
        raise ValueError("ragged matrix")
    return tuple(out)


def identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def zeros(n: int, m: int | None = None) -> Matrix:
    return tuple((0,) * (n if m is None else m) for _ in range(n))


def matmul(a: Matrix, b: Matrix) -> Matrix:
    bt = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def matadd(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def matscale(a: Matrix, c) -> Matrix:
    return tuple(tuple(c * x for x in row) for row in a)


def trace(a: Matrix):
    return sum(a[i][i] for i in range(len(a)))


def is_zero(a: Matrix) -> bool:
    return all(x == 0 for row in a for x in row)


def common_denominator(a: Matrix) -> int:
    d = 1
    for row in a:
        for x in row:
            if isinstance(x, Fraction):
                d = d * x.denominator // gcd(d, x.denominator)
    return d


def scaled_integer(a: Matrix) -> tuple[Matrix, int]:
    """(B, c) with B = c·a integral."""
    c = common_denominator(a)
    return tuple(tuple(int(x * c) for x in row) for row in a), c


def det(a: Matrix):
    """Exact determinant by Bareiss fraction-free elimination on c·a."""
    n = len(a)
    if n == 0:
        return 1
    b, c = scaled_integer(a)
    m = [list(row) for row in b]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    d = sign * m[n - 1][n - 1]
    return Fraction(d, c**n) if c != 1 else d


def _faddeev_leverrier_int(b: Matrix) -> list[int]:
    n = len(b)
    coeffs = [1]
    bm = zeros(n)  # B·M_{k-1}, with M_0 = 0
    for k in range(1, n + 1):
        # M_k = B M_{k-1} + c_{k-1} I ;  c_k = -tr(B M_k) / k
        c = coeffs[-1]
        m = tuple(tuple(bm[i][j] + (c if i == j else 0) for j in range(n)) for i in range(n))
        bm = matmul(b, m)
        t = trace(bm)
        assert t % k == 0
        coeffs.append(-t // k)
    return coeffs


def faddeev_leverrier(a: Matrix) -> RatPolynomial:
    """Monic det(X·I - a), exactly.

    The Faddeev-LeVerrier recursion is Newton's identities run on the traces
    of matrix powers.  It is executed on the integer matrix c·a, whose
    coefficients are integers so every division by k is exact, and scaled
    back: coefficient j of a equals coefficient j of c·a divided by c^j.
    """
    b, c = scaled_integer(a)
    cs = _faddeev_leverrier_int(b)
    if c == 1:
        return RatPolynomial._wrap(tuple(cs))
    return RatPolynomial._wrap(tuple(Fraction(x, c**j) for j, x in enumerate(cs)))


def poly_eval_matrix(p: RatPolynomial, a: Matrix) -> Matrix:
    """p(a) by Horner over exact matrices."""
    n = len(a)
    out = zeros(n)
    ident = identity(n)
    for coef in p.coeffs:
        out = matadd(matmul(out, a), matscale(ident, coef))
    return out


def annihilates(p: RatPolynomial, a: Matrix) -> bool:
    """Whether p(a) == 0, evaluated in integers.

    With a = B/c and d = deg p, c^d·p(a) = Σ p_j c^j B^(d-j), so after clearing
    denominators of the p_j c^j the test runs on the integer matrix B.
    """
    b, c = scaled_integer(a)
    d = p.degree
    cs = [Fraction(x) * c**j for j, x in enumerate(p.coeffs)]
    den = common_denominator((tuple(cs),))
    cs = [int(x * den) for x in cs]
    n = len(a)
    out = zeros(n)
    for coef in cs:
        out = matmul(out, b)
        out = tuple(tuple(v + (coef if i == j else 0) for j, v in enumerate(row)) for i, row in enumerate(out))
    return is_zero(out)


def block(blocks: Sequence[Sequence[Matrix]]) -> Matrix:
    """Assemble a block matrix from a grid of equally sized square blocks."""
    rows = []
    for brow in blocks:
        h = len(brow[0])
        for r in range(h):
            row: list = []
            for blk in brow:
                row.extend(blk[r])
            rows.append(tuple(row))
    return tuple(rows)


def inverse(a: Matrix) -> Matrix:
    """Gauss-Jordan inverse over Q."""
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        m[col], m[piv] = m[piv], m[col]
        inv = 1 / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return to_exact([row[n:] for row in m])
