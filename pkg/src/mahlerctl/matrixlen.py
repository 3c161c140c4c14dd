"""Semisimple elements of SL_n(R): characteristic polynomial, semisimplicity,
translation length for the metric <X, Y> = 2 tr(XY)."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import exactmat
from .measures import HypothesisError, MeasureReport, check_bounds
from .polycore import RatPolynomial, squarefree_part
from .roots import DEFAULT_PRECISION

DET_TOL = 1e-6
CLUSTER_REL = 1e-7

_EPS = np.finfo(float).eps


class MatrixParseError(ValueError):
    def __init__(self, token: str, text: str):
        super().__init__(f"cannot parse matrix {text!r}: bad token {token!r}")
        self.token = token


class NotSemisimpleError(HypothesisError):
    pass


class AgreementError(ArithmeticError):
    """Matrix-side and polynomial-side translation lengths disagree."""


class RealMatrix:
    """Square real matrix; exact (int/Fraction entries) or floating point."""

    __slots__ = ("entries", "exact", "_char_poly")

    def __init__(self, rows: Sequence[Sequence]):
        rows = [list(r) for r in rows]
        n = len(rows)
        if n < 1 or any(len(r) != n for r in rows):
            raise ValueError("matrix must be square and nonempty")
        exact = all(isinstance(x, (int, Fraction)) and not isinstance(x, bool) for r in rows for x in r)
        if exact:
            self.entries = exactmat.to_exact(rows)
        else:
            self.entries = tuple(tuple(float(x) for x in r) for r in rows)
        self.exact = exact
        self._char_poly = None

    @property
    def n(self) -> int:
        return len(self.entries)

    def to_numpy(self) -> np.ndarray:
        return np.array([[float(x) for x in r] for r in self.entries], dtype=float)

    def __repr__(self) -> str:
        return f"RealMatrix({format_matrix(self)})"

    def det(self):
        if self.exact:
            return exactmat.det(self.entries)
        return float(np.linalg.det(self.to_numpy()))


def _parse_entry(tok: str, text: str):
    tok = tok.strip()
    try:
        return Fraction(tok)
    except (ValueError, ZeroDivisionError):
        raise MatrixParseError(tok, text) from None


def parse_matrix(text: str) -> RealMatrix:
    """``3,4;2,3`` or a JSON array of arrays.  Text entries are read exactly."""
    s = text.strip()
    if s.startswith("["):
        try:
            data = json.loads(s)
        except json.JSONDecodeError as exc:
            raise MatrixParseError(s[exc.pos:exc.pos + 8] or s, text) from None
        return matrix_from_json(data, text)
    rows = []
    for row in s.split(";"):
        if not row.strip():
            raise MatrixParseError(row, text)
        rows.append([_parse_entry(tok, text) for tok in row.split(",")])
    try:
        return RealMatrix(rows)
    except ValueError as exc:
        raise MatrixParseError(str(exc), text) from None


def matrix_from_json(data, text: str = "") -> RealMatrix:
    rows = []
    for row in data:
        r = []
        for x in row:
            if isinstance(x, str):
                r.append(_parse_entry(x, text))
            elif isinstance(x, (int, float)) and not isinstance(x, bool):
                r.append(x)
            else:
                raise MatrixParseError(repr(x), text)
        rows.append(r)
    return RealMatrix(rows)


def format_matrix(x: RealMatrix) -> str:
    return ";".join(",".join(str(v) for v in row) for row in x.entries)


# ---------------------------------------------------------------------------


def char_poly(x: RealMatrix) -> RatPolynomial:
    """Monic characteristic polynomial; exact for rational entries.

    Floating-point input goes through numpy and the resulting double
    coefficients are converted to rationals without rounding.
    """
    if x._char_poly is None:
        if x.exact:
            x._char_poly = exactmat.faddeev_leverrier(x.entries)
        else:
            cs = np.poly(x.to_numpy())
            x._char_poly = RatPolynomial([Fraction(1)] + [Fraction(float(c.real)) for c in cs[1:]])
    return x._char_poly


@dataclass
class SemisimpleCertificate:
    is_semisimple: bool
    eigenvalues: list
    min_geometric_defect: float
    status: str = "semisimple"  # semisimple | not_semisimple | indeterminate
    method: str = "numeric"


def _clusters(eigs: np.ndarray, scale: float) -> list[list[int]]:
    order = sorted(range(len(eigs)), key=lambda i: (eigs[i].real, eigs[i].imag))
    clusters: list[list[int]] = []
    for i in order:
        for c in clusters:
            if any(abs(eigs[i] - eigs[j]) <= CLUSTER_REL * max(scale, abs(eigs[j])) for j in c):
                c.append(i)
                break
        else:
            clusters.append([i])
    return clusters


def _numeric_defects(a: np.ndarray, eigs: np.ndarray) -> tuple[float, bool]:
    """(max algebraic - geometric multiplicity, any cluster ambiguous)."""
    n = a.shape[0]
    norm = max(np.linalg.norm(a, 2), 1.0)
    defect = 0
    ambiguous = False
    for c in _clusters(eigs, 1.0):
        if len(c) == 1:
            continue
        lam = np.mean(eigs[c])
        sv = np.linalg.svd(a - lam * np.eye(n), compute_uv=False)
        spread = max(abs(eigs[i] - eigs[j]) for i in c for j in c)
        tol = max(spread, 1e3 * n * _EPS * norm) * 10
        geo = int(np.sum(sv <= tol))
        d = len(c) - min(geo, len(c))
        if d and spread > 1e3 * n * _EPS * norm:
            ambiguous = True
        defect = max(defect, d)
    return float(defect), ambiguous


def check_semisimple(x: RealMatrix) -> SemisimpleCertificate:
    """Diagonalizability over C.

    Rational input is decided exactly: x is semisimple iff the square-free
    part of its characteristic polynomial annihilates x.  Floating-point input
    compares, per eigenvalue cluster, algebraic multiplicity with the numeric
    nullity of x - λI and reports ``indeterminate`` when a defective-looking
    cluster is not a numerically exact multiple eigenvalue.
    """
    a = x.to_numpy()
    eigs = np.linalg.eigvals(a)
    defect, ambiguous = _numeric_defects(a, eigs)
    if x.exact:
        ok = exactmat.annihilates(squarefree_part(char_poly(x)), x.entries)
        return SemisimpleCertificate(
            is_semisimple=ok,
            eigenvalues=list(eigs),
            min_geometric_defect=0.0 if ok else max(defect, 1.0),
            status="semisimple" if ok else "not_semisimple",
            method="exact",
        )
    if defect == 0:
        status = "semisimple"
    elif ambiguous:
        status = "indeterminate"
    else:
        status = "not_semisimple"
    return SemisimpleCertificate(status == "semisimple", list(eigs), defect, status)


def _require_sl(x: RealMatrix, strict_det: bool) -> None:
    d = x.det()
    if strict_det:
        ok = d == 1 if x.exact else abs(d - 1) <= DET_TOL
        if not ok:
            raise HypothesisError(f"det = {float(d):.12g}, expected 1")
    elif abs(abs(float(d)) - 1) > DET_TOL:
        raise HypothesisError(f"det = {float(d):.12g} is not ±1")


def _require_semisimple(x: RealMatrix) -> None:
    cert = check_semisimple(x)
    if not cert.is_semisimple:
        raise NotSemisimpleError(f"matrix is {cert.status.replace('_', ' ')}")


def translation_length_matrix(x: RealMatrix, strict_det: bool = False) -> tuple[float, float]:
    """sqrt(Σ 2 (log|λ_i|)^2) over the eigenvalues, from a numeric eigensolve.

    The error bound is Bauer-Fike: each computed eigenvalue is within
    κ(V)·‖E‖ of a true one, with ‖E‖ the backward error of the eigensolver.
    """
    _require_semisimple(x)
    _require_sl(x, strict_det)
    return _eigen_length(x)


def _eigen_length(x: RealMatrix) -> tuple[float, float]:
    a = x.to_numpy()
    n = a.shape[0]
    eigs, vecs = np.linalg.eig(a)
    kappa = np.linalg.cond(vecs)
    if not np.isfinite(kappa):
        kappa = 1e16
    pert = kappa * 16 * n * _EPS * max(np.linalg.norm(a, 2), 1.0)
    sq = 0.0
    dsq = 0.0
    for lam in eigs:
        m = abs(lam)
        if m <= pert:
            raise HypothesisError("eigenvalue indistinguishable from 0")
        lg = math.log(m)
        sq += lg * lg
        dsq += (pert / (m - pert)) ** 2
    val = math.sqrt(2 * sq)
    return val, math.sqrt(2 * dsq) + val * 4 * n * _EPS


def verify_theorem_a(
    x: RealMatrix,
    strict_det: bool = False,
    tolerance: float = 1e-9,
    precision: int = DEFAULT_PRECISION,
) -> MeasureReport:
    """Mahler/length sandwich for a semisimple x with det 1 (±1 unless strict).

    The polynomial side goes through the certified roots of char_poly(x); the
    matrix side through an eigensolve.  They must agree to within their
    combined error bounds (at least 1e-8).
    """
    _require_semisimple(x)
    _require_sl(x, strict_det)
    p = char_poly(x)
    product_tol = 0.0 if x.exact else DET_TOL
    report = check_bounds(p, strict=strict_det, tolerance=tolerance, precision=precision, product_tol=product_tol)
    mlen, merr = _eigen_length(x)
    report.matrix_length = mlen
    report.matrix_length_err = merr
    report.inputs_echo["matrix"] = format_matrix(x)
    if abs(mlen - report.translation_length) > max(1e-8, merr + report.length_err):
        raise AgreementError(
            f"matrix length {mlen!r} vs polynomial length {report.translation_length!r}"
        )
    return report


def companion(p: RatPolynomial) -> RealMatrix:
    """Companion matrix of monic p; its characteristic polynomial is p."""
    if not p.is_monic():
        raise ValueError("companion matrix needs a monic polynomial")
    n = p.degree
    rows = [[0] * n for _ in range(n)]
    for i in range(1, n):
        rows[i][i - 1] = 1
    for i in range(n):
        rows[i][n - 1] = -p.coeffs[n - i]
    return RealMatrix(rows)


# ---------------------------------------------------------------------------
# random semisimple SL_n samples with exact determinant 1
# ---------------------------------------------------------------------------


def _rational_near(v: float, den: int = 16) -> Fraction:
    return Fraction(round(v * den), den) or Fraction(1, den)


def random_unimodular(n: int, rng, steps: int | None = None, max_entry: int = 2) -> exactmat.Matrix:
    """Product of elementary integer matrices: integer entries, det 1, integer inverse."""
    g = [[int(i == j) for j in range(n)] for i in range(n)]
    if n == 1:
        return exactmat.to_exact(g)
    for _ in range(steps if steps is not None else 2 * n):
        i, j = rng.choice(n, size=2, replace=False)
        t = int(rng.integers(-max_entry, max_entry + 1))
        for k in range(n):
            g[i][k] += t * g[j][k]
    return exactmat.to_exact(g)


def random_semisimple_sl(n: int, rng, complex_pairs: bool = True) -> RealMatrix:
    """g·D·g⁻¹ with D block diagonal, log-moduli uniform in [-2, 2], det exactly 1.

    D has 1×1 blocks ±r and, optionally, 2×2 rotation-scaling blocks
    [[a, -b], [b, a]] (eigenvalues a ± ib).  The last block is 1×1 and
    chosen so that det D = 1.  g is unimodular, so the conjugate stays
    exactly rational.
    """
    blocks = []
    size = 0
    det = Fraction(1)
    while size < n - 1:
        if complex_pairs and size + 2 <= n - 1 and rng.random() < 0.4:
            mod = math.exp(rng.uniform(-2, 2))
            ang = rng.uniform(0.2, math.pi - 0.2)
            a = _rational_near(mod * math.cos(ang))
            b = _rational_near(mod * math.sin(ang))
            blocks.append(((a, -b), (b, a)))
            det *= a * a + b * b
            size += 2
        else:
            r = _rational_near(math.exp(rng.uniform(-2, 2)))
            if rng.random() < 0.3:
                r = -r
            blocks.append(((r,),))
            det *= r
            size += 1
    blocks.append(((1 / det,),))
    d = [[Fraction(0)] * n for _ in range(n)]
    pos = 0
    for blk in blocks:
        k = len(blk)
        for i in range(k):
            for j in range(k):
                d[pos + i][pos + j] = blk[i][j]
        pos += k
    g = random_unimodular(n, rng)
    gi = exactmat.inverse(g)
    return RealMatrix(exactmat.matmul(exactmat.matmul(g, exactmat.to_exact(d)), gi))
