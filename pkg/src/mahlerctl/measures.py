"""Mahler measure, translation length and the bounds relating them."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple, Optional

from .polycore import (
    IntPolynomial,
    RatPolynomial,
    as_poly,
    discriminant,
    format_poly,
    poly_length,
)
from .roots import DEFAULT_PRECISION, _context, find_roots, moduli, unit_tolerance

LEHMER = IntPolynomial((1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1))

EQUALITY_CASES = ("lower_tight", "upper_tight", "both_tight", "neither")

_EPS = 2.0**-52


class HypothesisError(ValueError):
    """Input violates the hypotheses of the requested bound."""


# ---------------------------------------------------------------------------
# Mahler measure and translation length
# ---------------------------------------------------------------------------


def _mods(p: RatPolynomial, precision: int) -> list[tuple[float, float]]:
    return moduli(find_roots(p, precision))


def _mahler_from_mods(lead, mods) -> tuple[float, float]:
    lead = abs(float(lead))
    val = hi = lo = lead
    for m, e in mods:
        val *= max(1.0, m)
        hi *= max(1.0, m + e)
        lo *= max(1.0, m - e)
    err = max(hi - val, val - lo) + val * (2 * len(mods) + 2) * _EPS
    return val, err


def mahler_measure(p, precision: int = DEFAULT_PRECISION) -> tuple[float, float]:
    """|lead| · ∏ max(1, |a_i|) and a certified error bound."""
    p = as_poly(p)
    if p.degree < 1:
        raise ValueError("mahler_measure needs degree >= 1")
    return _mahler_from_mods(p.lead, _mods(p, precision))


def _length_from_mods(mods) -> tuple[float, float]:
    sq = 0.0
    dsq = 0.0
    for m, e in mods:
        if m - e <= 0:
            raise HypothesisError("a root may be zero; log modulus is unbounded")
        lg = math.log(m)
        sq += lg * lg
        d = e / (m - e)
        dsq += d * d
    val = math.sqrt(2.0 * sq)
    err = math.sqrt(2.0 * dsq) + val * (4 * len(mods) + 4) * _EPS
    return val, err


def translation_length_poly(p, precision: int = DEFAULT_PRECISION) -> tuple[float, float]:
    """sqrt(Σ 2 (log|a_i|)^2) over the roots, with a certified error bound."""
    p = as_poly(p)
    if p.degree < 1:
        raise ValueError("translation length needs degree >= 1")
    if p.coeffs[-1] == 0:
        raise HypothesisError("constant coefficient is zero: a root at 0 has no log modulus")
    return _length_from_mods(_mods(p, precision))


def reciprocal_poly(p) -> RatPolynomial:
    """Monic polynomial whose roots are the inverses of the roots of ``p``."""
    p = as_poly(p)
    if p.coeffs[-1] == 0:
        raise HypothesisError("zero root has no inverse")
    return p.reversed().monic()


# ---------------------------------------------------------------------------
# Mahler measure / translation length sandwich
# ---------------------------------------------------------------------------


@dataclass
class MeasureReport:
    degree: int
    mahler: float
    mahler_err: float
    log_mahler: float
    translation_length: float
    length_err: float
    lower_bound: float
    upper_bound: float
    equality_case: str
    inputs_echo: dict = field(default_factory=dict)
    matrix_length: Optional[float] = None
    matrix_length_err: Optional[float] = None

    @property
    def tolerance(self) -> float:
        """Propagated certified error on ℓ - bound."""
        dlog = self.mahler_err / self.mahler if self.mahler > 0 else math.inf
        return self.length_err + 2.0 * dlog + 1e-15

    def lower_holds(self) -> bool:
        return self.lower_bound <= self.translation_length + self.tolerance

    def upper_holds(self) -> bool:
        return self.translation_length <= self.upper_bound + self.tolerance

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> "MeasureReport":
        return cls(**d)


def root_product(p: RatPolynomial) -> Fraction:
    """∏ a_i = (-1)^n a_0 / a_n, exactly."""
    n = p.degree
    return Fraction(p.coeffs[-1]) / p.lead * (-1 if n % 2 else 1)


def _check_product(p: RatPolynomial, strict: bool, product_tol: float) -> Fraction:
    prod = root_product(p)
    if strict:
        ok = abs(prod - 1) <= product_tol
        want = "1"
    else:
        ok = abs(abs(prod) - 1) <= product_tol
        want = "±1"
    if not ok:
        raise HypothesisError(f"product of roots is {float(prod):.12g}, expected {want}")
    return prod


def classify_equality(mods: list[tuple[float, float]], tol_floor: float = 1e-9) -> str:
    """Equality case of the Mahler/length sandwich from certified root moduli.

    lower side: every |a_i| is r or 1/r for one common r.
    upper side: |a_i| = 1 for all but at most two i (sufficient condition only).
    """
    r = mods[0][0]
    lower = all(
        abs(m - r) <= unit_tolerance(e, tol_floor) or abs(m - 1.0 / r) <= unit_tolerance(e, tol_floor)
        for m, e in mods
    )
    off_circle = sum(1 for m, e in mods if abs(m - 1.0) > unit_tolerance(e, tol_floor))
    upper = off_circle <= 2
    if lower and upper:
        return "both_tight"
    if lower:
        return "lower_tight"
    if upper:
        return "upper_tight"
    return "neither"


def check_bounds(
    p,
    strict: bool = False,
    tolerance: float = 1e-9,
    precision: int = DEFAULT_PRECISION,
    product_tol: float = 0.0,
) -> MeasureReport:
    """M(p), ℓ(p) and 2√(2/n)·log M ≤ ℓ ≤ 2·log M for monic p with ∏|a_i| = 1.

    ``strict`` demands ∏ a_i = 1 (det 1); otherwise ∏ a_i = -1 is
    accepted as well since only the moduli enter.
    """
    p = as_poly(p)
    if p.degree < 1 or not p.is_monic():
        raise HypothesisError("check_bounds needs a monic polynomial of degree >= 1")
    prod = _check_product(p, strict, product_tol)
    mods = _mods(p, precision)
    n = p.degree
    mahler, mahler_err = _mahler_from_mods(1, mods)
    length, length_err = _length_from_mods(mods)
    log_m = math.log(mahler)
    return MeasureReport(
        degree=n,
        mahler=mahler,
        mahler_err=mahler_err,
        log_mahler=log_m,
        translation_length=length,
        length_err=length_err,
        lower_bound=2.0 * math.sqrt(2.0 / n) * log_m,
        upper_bound=2.0 * log_m,
        equality_case=classify_equality(mods, tolerance),
        inputs_echo={
            "poly": format_poly(p),
            "root_product": str(prod) if len(str(prod)) < 64 else float(prod),
            "strict": strict,
        },
    )


# ---------------------------------------------------------------------------
# f(n), systole bound, Silverman
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BoundFunctionValue:
    n: int
    value: float
    branch: str

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> "BoundFunctionValue":
        return cls(**d)


@lru_cache(maxsize=None)
def lehmer_log_measure() -> float:
    """log M(L) from the certified real root of Lehmer's polynomial > 1."""
    rs = find_roots(LEHMER, 256)
    ctx = _context(256)
    top = max(rs.roots, key=abs)
    return float(ctx.log(abs(top)))


def voutier_bound(n: int) -> float:
    """(1/4)(log log n / log n)^3, defined for n ≥ 2."""
    if n < 2:
        raise ValueError("n must be >= 2")
    ln = math.log(n)
    return 0.25 * (math.log(ln) / ln) ** 3


def lower_bound_function(n: int) -> BoundFunctionValue:
    """Lower bound on log M(p) for monic degree-n p with a noncyclotomic factor."""
    if n < 2:
        raise ValueError("n must be >= 2")
    if n <= 20:
        return BoundFunctionValue(n, lehmer_log_measure(), "lehmer_branch")
    return BoundFunctionValue(n, voutier_bound(n), "voutier_branch")


def systole_lower_bound(n: int) -> float:
    """2·sqrt(2)/sqrt(n) · f(n)."""
    if n < 2:
        raise ValueError("n must be >= 2")
    return 2.0 * math.sqrt(2.0) / math.sqrt(n) * lower_bound_function(n).value


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    k = 2
    while k * k <= n:
        if n % k == 0:
            return False
        k += 1
    return True


def silverman_disc_bound(prime_p: int, log_mahler: float) -> float:
    """Upper bound on log N(Δ) from log M ≥ log N(Δ)/(2p(p-1)) - p·log p/(2(p-1))."""
    if prime_p < 3 or prime_p % 2 == 0 or not _is_prime(prime_p):
        raise ValueError(f"{prime_p} is not an odd prime")
    if log_mahler < 0:
        raise ValueError("log_mahler must be >= 0")
    p = prime_p
    return 2 * p * (p - 1) * log_mahler + p * p * math.log(p)


# ---------------------------------------------------------------------------
# length and discriminant corollaries
# ---------------------------------------------------------------------------


def _log_abs(q: Fraction) -> float:
    q = abs(Fraction(q))
    return math.log(q.numerator) - math.log(q.denominator)


def log_plus(q) -> float:
    """max(0, log q) evaluated exactly on the comparison with 1."""
    q = Fraction(q)
    return _log_abs(q) if q > 1 else 0.0


class CorollaryBounds(NamedTuple):
    length_lower: float
    length_upper: float
    disc_lower: float


def corollary_bounds(p, strict: bool = False) -> CorollaryBounds:
    """Bounds on ℓ(p) from the length L(p) and the discriminant."""
    p = as_poly(p)
    if p.degree < 2 or not p.is_monic():
        raise HypothesisError("corollary_bounds needs a monic polynomial of degree >= 2")
    _check_product(p, strict, 0.0)
    n = p.degree
    length = Fraction(poly_length(p))
    disc = discriminant(p)
    c = math.sqrt(2.0 / n)
    return CorollaryBounds(
        length_lower=2.0 * c * log_plus(length / 2**n),
        length_upper=2.0 * _log_abs(length),
        disc_lower=c / (n - 1) * log_plus(abs(disc) / Fraction(n) ** n),
    )


@dataclass
class ClassicalReport:
    degree: int
    length: str
    mahler: float
    mahler_err: float
    discriminant: str
    length_le_mahler: bool
    mahler_le_length: bool
    disc_le_mahler: bool
    length_margin: float
    mahler_margin: float
    disc_log_margin: float

    @property
    def all_hold(self) -> bool:
        return self.length_le_mahler and self.mahler_le_length and self.disc_le_mahler

    def to_dict(self) -> dict:
        return asdict(self)


def mahler_classical_inequalities(p, precision: int = DEFAULT_PRECISION) -> ClassicalReport:
    """L(p) ≤ 2^n M(p) ≤ 2^n L(p) and |disc(p)| ≤ n^n M(p)^(2n-2), certified.

    Each comparison uses the end of the certified interval for M(p) that is
    least favourable to the inequality; margins are rhs - lhs at the centre
    (the disc margin is on the log scale).
    """
    p = as_poly(p)
    n = p.degree
    if n < 1:
        raise ValueError("degree must be >= 1")
    length = poly_length(p)
    mahler, err = mahler_measure(p, precision)
    disc = discriminant(p)
    m_hi = mahler + err
    m_lo = max(mahler - err, 0.0)
    lf = float(length)
    length_ok = lf <= 2.0**n * m_hi * (1 + 4 * _EPS)
    mahler_ok = m_lo <= lf * (1 + 4 * _EPS)
    if disc == 0:
        disc_ok = True
        disc_margin = math.inf
    else:
        lhs = _log_abs(disc)
        rhs_hi = n * math.log(n) + (2 * n - 2) * math.log(m_hi)
        disc_ok = lhs <= rhs_hi + 1e-12
        disc_margin = n * math.log(n) + (2 * n - 2) * math.log(mahler) - lhs
    return ClassicalReport(
        degree=n,
        length=str(length),
        mahler=mahler,
        mahler_err=err,
        discriminant=str(disc),
        length_le_mahler=length_ok,
        mahler_le_length=mahler_ok,
        disc_le_mahler=disc_ok,
        length_margin=2.0**n * mahler - lf,
        mahler_margin=2.0**n * (lf - mahler),
        disc_log_margin=disc_margin,
    )

