"""Totally real number fields in the power basis, the regular representation,
and the block / diagonal embeddings of matrices over the field."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import exactmat
from .polycore import (
    IntPolynomial,
    RatPolynomial,
    as_poly,
    count_real_roots,
    find_factor,
    format_poly,
    is_squarefree,
    parse_poly,
)
from .roots import find_roots

IRREDUCIBILITY_MAX_DEGREE = 8


class FieldError(ValueError):
    pass


@dataclass(frozen=True)
class NumberField:
    min_poly: IntPolynomial
    embeddings: tuple  # real roots of min_poly, descending
    radii: tuple
    label: str = ""
    irreducibility: str = "verified"  # or "asserted by caller"

    @property
    def degree(self) -> int:
        return self.min_poly.degree

    def element(self, coords: Sequence) -> "FieldElement":
        return FieldElement(self, coords)

    def from_int(self, c) -> "FieldElement":
        return FieldElement(self, [c] + [0] * (self.degree - 1))

    @property
    def one(self) -> "FieldElement":
        return self.from_int(1)

    @property
    def zero(self) -> "FieldElement":
        return self.from_int(0)

    @property
    def theta(self) -> "FieldElement":
        if self.degree == 1:
            return self.from_int(-self.min_poly.coeffs[1])
        return FieldElement(self, [0, 1] + [0] * (self.degree - 2))


def make_field(min_poly, label: str = "") -> NumberField:
    """Validate a totally real field given by a monic integer minimal polynomial.

    Squarefreeness and total reality (Sturm count) are exact.  Irreducibility
    is checked exactly by Kronecker's method up to degree 8 and recorded as
    asserted by the caller above that.
    """
    p = as_poly(min_poly)
    if not isinstance(p, IntPolynomial) or not p.is_monic() or p.degree < 1:
        raise FieldError("minimal polynomial must be monic with integer coefficients")
    if not is_squarefree(p):
        raise FieldError("minimal polynomial is not squarefree")
    if p.degree <= IRREDUCIBILITY_MAX_DEGREE:
        factor = find_factor(p)
        if factor is not None:
            raise FieldError(f"minimal polynomial is reducible: factor {format_poly(factor)}")
        irr = "verified"
    else:
        irr = "asserted by caller"
    if count_real_roots(p) != p.degree:
        raise FieldError("not totally real: complex roots present")
    rs = find_roots(p)
    for z, r in zip(rs.roots, rs.radii):
        if abs(z.imag) > r:
            raise FieldError("not totally real: certified non-real root")
    pairs = sorted(((float(z.real), float(r)) for z, r in zip(rs.roots, rs.radii)), reverse=True)
    return NumberField(
        p,
        tuple(v for v, _ in pairs),
        tuple(r for _, r in pairs),
        label,
        irr,
    )


# ---------------------------------------------------------------------------
# elements
# ---------------------------------------------------------------------------


def _reduce(coeffs_asc: list, min_poly: IntPolynomial) -> list:
    """Reduce an ascending coefficient list modulo monic min_poly."""
    d = min_poly.degree
    mp = min_poly.coeffs  # descending, monic
    cs = list(coeffs_asc)
    for k in range(len(cs) - 1, d - 1, -1):
        c = cs[k]
        if c:
            # θ^k = θ^(k-d) · θ^d,  θ^d = -Σ_{j<d} mp[d-j] θ^j
            for j in range(d):
                cs[k - d + j] -= c * mp[d - j]
        cs[k] = 0
    cs = cs[:d] + [0] * max(0, d - len(cs))
    return cs


class FieldElement:
    """Element Σ coords[i]·θ^i of a number field (ascending power basis)."""

    __slots__ = ("field", "coords")

    def __init__(self, field: NumberField, coords: Sequence):
        cs = []
        for c in coords:
            c = Fraction(c)
            cs.append(int(c) if c.denominator == 1 else c)
        if len(cs) > field.degree:
            cs = _reduce(cs, field.min_poly)
        cs += [0] * (field.degree - len(cs))
        self.field = field
        self.coords = tuple(cs)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self.field.from_int(other)
        return isinstance(other, FieldElement) and self.coords == other.coords

    def __hash__(self) -> int:
        return hash(self.coords)

    def __repr__(self) -> str:
        return f"FieldElement({list(self.coords)})"

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            return other
        return self.field.from_int(other)

    def __add__(self, other) -> "FieldElement":
        other = self._coerce(other)
        return FieldElement(self.field, [a + b for a, b in zip(self.coords, other.coords)])

    __radd__ = __add__

    def __neg__(self) -> "FieldElement":
        return FieldElement(self.field, [-a for a in self.coords])

    def __sub__(self, other) -> "FieldElement":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "FieldElement":
        return self._coerce(other) - self

    def __mul__(self, other) -> "FieldElement":
        other = self._coerce(other)
        d = self.field.degree
        prod = [0] * (2 * d - 1)
        for i, a in enumerate(self.coords):
            if a:
                for j, b in enumerate(other.coords):
                    prod[i + j] += a * b
        return FieldElement(self.field, _reduce(prod, self.field.min_poly))

    __rmul__ = __mul__

    def __truediv__(self, other) -> "FieldElement":
        return self * self._coerce(other).inverse()

    def inverse(self) -> "FieldElement":
        reg = regular_representation(self.field, self)
        inv = exactmat.inverse(reg)
        # first column of Reg(a)^-1 holds the coordinates of a^-1 · 1
        return FieldElement(self.field, [row[0] for row in inv])

    def embed(self, sigma: float) -> float:
        acc = 0.0
        for c in reversed(self.coords):
            acc = acc * sigma + float(c)
        return acc

    def norm(self):
        return exactmat.det(regular_representation(self.field, self))


def regular_representation(f: NumberField, a: FieldElement) -> exactmat.Matrix:
    """Matrix of x ↦ a·x in the power basis (column j = coordinates of a·θ^j)."""
    d = f.degree
    cols = []
    basis_elt = f.one
    for _ in range(d):
        cols.append((a * basis_elt).coords)
        basis_elt = basis_elt * f.theta
    return exactmat.to_exact([[cols[j][i] for j in range(d)] for i in range(d)])


# ---------------------------------------------------------------------------
# matrices over the field
# ---------------------------------------------------------------------------


def _entry(field: NumberField, x) -> FieldElement:
    if isinstance(x, FieldElement):
        return x
    if isinstance(x, (int, Fraction)):
        return field.from_int(x)
    return field.element(x)


class FieldMatrix:
    """d₂×d₂ matrix with FieldElement entries."""

    __slots__ = ("field", "entries")

    def __init__(self, field: NumberField, rows: Sequence[Sequence]):
        self.field = field
        ents = []
        for row in rows:
            ents.append(tuple(_entry(field, x) for x in row))
        n = len(ents)
        if n < 1 or any(len(r) != n for r in ents):
            raise ValueError("field matrix must be square and nonempty")
        self.entries = tuple(ents)

    @property
    def n(self) -> int:
        return len(self.entries)

    def __eq__(self, other) -> bool:
        return isinstance(other, FieldMatrix) and self.entries == other.entries

    def __matmul__(self, other: "FieldMatrix") -> "FieldMatrix":
        n = self.n
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = self.field.zero
                for k in range(n):
                    acc = acc + self.entries[i][k] * other.entries[k][j]
                row.append(acc)
            rows.append(row)
        return FieldMatrix(self.field, rows)

    def trace(self) -> FieldElement:
        acc = self.field.zero
        for i in range(self.n):
            acc = acc + self.entries[i][i]
        return acc

    def det(self) -> FieldElement:
        """Exact determinant over k by cofactor-free Gaussian elimination."""
        n = self.n
        m = [list(r) for r in self.entries]
        det = self.field.one
        for col in range(n):
            piv = next((r for r in range(col, n) if m[r][col] != 0), None)
            if piv is None:
                return self.field.zero
            if piv != col:
                m[col], m[piv] = m[piv], m[col]
                det = -det
            det = det * m[col][col]
            inv = m[col][col].inverse()
            for r in range(col + 1, n):
                if m[r][col] != 0:
                    f = m[r][col] * inv
                    m[r] = [x - f * y for x, y in zip(m[r], m[col])]
        return det

    def to_json(self) -> list:
        return [[[str(c) for c in e.coords] for e in row] for row in self.entries]

    @classmethod
    def identity(cls, field: NumberField, n: int) -> "FieldMatrix":
        return cls(field, [[field.one if i == j else field.zero for j in range(n)] for i in range(n)])


def iota1(f: NumberField, y: FieldMatrix) -> exactmat.Matrix:
    """Block matrix with (i, j) block Reg(y_ij); size d₁d₂."""
    return exactmat.block([[regular_representation(f, e) for e in row] for row in y.entries])


def char_poly_exact(m: exactmat.Matrix) -> RatPolynomial:
    """Exact monic characteristic polynomial of a rational matrix (Faddeev-LeVerrier)."""
    return exactmat.faddeev_leverrier(exactmat.to_exact(m))


def char_poly_over_field(y: FieldMatrix) -> list[FieldElement]:
    """Coefficients (descending, monic) of det(X·I - y) over k, by Faddeev-LeVerrier."""
    f = y.field
    n = y.n
    coeffs = [f.one]
    ym = FieldMatrix(f, [[f.zero] * n for _ in range(n)])
    for k in range(1, n + 1):
        c = coeffs[-1]
        mk = FieldMatrix(
            f, [[ym.entries[i][j] + (c if i == j else f.zero) for j in range(n)] for i in range(n)]
        )
        ym = y @ mk
        coeffs.append(ym.trace() * Fraction(-1, k))
    return coeffs


def iota2_char_poly(f: NumberField, y: FieldMatrix) -> np.ndarray:
    """∏ over real embeddings σ of σ applied to the characteristic polynomial of y.

    Returned as float coefficients, descending.  This is the characteristic
    polynomial of the diagonal embedding across all real places.
    """
    coeffs = char_poly_over_field(y)
    out = np.array([1.0])
    for sigma in f.embeddings:
        out = np.convolve(out, np.array([c.embed(sigma) for c in coeffs]))
    return out


@dataclass
class IntegrityReport:
    passed: bool
    char_poly: str
    non_integral: list = field(default_factory=list)
    field_label: str = ""

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "char_poly": self.char_poly,
            "non_integral": self.non_integral,
            "field_label": self.field_label,
        }


def verify_integrality(f: NumberField, y: FieldMatrix) -> IntegrityReport:
    """Whether char_poly_exact(iota1(y)) has integer coefficients."""
    p = char_poly_exact(iota1(f, y))
    bad = [str(c) for c in p.coeffs if not (isinstance(c, int) or c.denominator == 1)]
    return IntegrityReport(not bad, format_poly(p), bad, f.label)


# ---------------------------------------------------------------------------
# random SL_2(Z[θ]) elements and file formats
# ---------------------------------------------------------------------------


def random_integral_element(f: NumberField, rng, height: int = 3) -> FieldElement:
    return f.element([int(rng.integers(-height, height + 1)) for _ in range(f.degree)])


def random_sl2(f: NumberField, rng, max_factors: int = 8, height: int = 3) -> FieldMatrix:
    """Product of 1..max_factors elementary matrices with Z[θ] entries; det exactly 1."""
    y = FieldMatrix.identity(f, 2)
    for _ in range(int(rng.integers(1, max_factors + 1))):
        t = random_integral_element(f, rng, height)
        if rng.random() < 0.5:
            e = FieldMatrix(f, [[f.one, t], [f.zero, f.one]])
        else:
            e = FieldMatrix(f, [[f.one, f.zero], [t, f.one]])
        y = y @ e
    return y


def load_field(path_or_text: str) -> NumberField:
    """Read ``{"min_poly": "1,0,-2", "label": "Q(sqrt2)"}`` from a file or a JSON string."""
    data = _load_json(path_or_text)
    try:
        mp = data["min_poly"]
    except (KeyError, TypeError):
        raise FieldError("field spec needs a 'min_poly' key") from None
    poly = parse_poly(mp) if isinstance(mp, str) else IntPolynomial(mp)
    return make_field(poly, data.get("label", ""))


def load_field_matrix(f: NumberField, path_or_text: str) -> FieldMatrix:
    """Array of arrays of coordinate vectors (numbers or "p/q" strings)."""
    data = _load_json(path_or_text)
    if not isinstance(data, list) or not data:
        raise FieldError("field matrix must be a nonempty array of arrays")
    rows = []
    for row in data:
        r = []
        for coords in row:
            if isinstance(coords, (int, str)):
                coords = [coords]
            if len(coords) > f.degree:
                raise FieldError(f"coordinate vector {coords} longer than field degree {f.degree}")
            r.append(f.element([Fraction(c) for c in coords]))
        rows.append(r)
    return FieldMatrix(f, rows)


def _load_json(path_or_text: str):
    s = path_or_text.strip()
    if s.startswith("{") or s.startswith("["):
        return json.loads(s)
    with open(path_or_text, encoding="utf-8") as fh:
        return json.load(fh)
