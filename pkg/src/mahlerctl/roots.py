"""All complex roots of a rational polynomial with a posteriori error radii.

Pipeline: exact square-free decomposition (Yun) so that every factor has
simple roots; Aberth-Ehrlich iteration in double precision seeded on a
rotated circle of Fujiwara radius; the same iteration continued in
multiprecision; then, for each approximation z, the inclusion radius
``m·|f(z)|/|f'(z)|`` (m = deg f).  Since f'/f = Σ 1/(z - a_i), some root
a_i satisfies |z - a_i| ≤ m·|f(z)/f'(z)|.  Horner rounding errors are bounded
and folded into the radius.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import mpmath
import numpy as np

from .polycore import RatPolynomial, as_poly, squarefree_decomposition, strip_x_power

DEFAULT_PRECISION = 128
MAX_PRECISION = 1024
RADIUS_TARGET = 1e-10

_EPS = 2.0**-52


class PrecisionExhausted(ArithmeticError):
    """Certification failed at the maximum working precision."""


_local = threading.local()


def _context(prec: int) -> mpmath.ctx_mp.MPContext:
    cache = getattr(_local, "ctx", None)
    if cache is None:
        cache = _local.ctx = {}
    ctx = cache.get(prec)
    if ctx is None:
        ctx = mpmath.MPContext()
        ctx.prec = prec
        cache[prec] = ctx
    return ctx


@dataclass(frozen=True)
class RootSet:
    """Roots with multiplicity; the disk of radius ``radii[i]`` around
    ``roots[i]`` contains a root of the source polynomial."""

    roots: tuple
    radii: tuple
    source_degree: int
    precision: int = DEFAULT_PRECISION

    def __post_init__(self):
        if len(self.roots) != self.source_degree or len(self.radii) != self.source_degree:
            raise ValueError("root count does not match degree")

    def __len__(self) -> int:
        return self.source_degree

    def as_complex(self) -> list[complex]:
        return [complex(z) for z in self.roots]

    def radii_float(self) -> list[float]:
        return [float(r) * (1 + 4 * _EPS) for r in self.radii]


def fujiwara_bound(coeffs: Sequence[float]) -> float:
    """Fujiwara's upper bound on the moduli of the roots."""
    n = len(coeffs) - 1
    # ratios are formed exactly so huge integer coefficients do not overflow
    exact = all(isinstance(c, (int, Fraction)) for c in coeffs)
    lead = Fraction(coeffs[0]) if exact else float(coeffs[0])
    r = [abs(float(Fraction(c) / lead if exact else c / lead)) for c in coeffs]
    terms = [r[k] ** (1.0 / k) for k in range(1, n)]
    terms.append((r[n] / 2) ** (1.0 / n))
    return 2.0 * max(terms) if terms else 1.0


def _aberth_float(coeffs: Sequence[int], iters: int = 500) -> tuple[np.ndarray, bool]:
    """Double-precision Aberth iterates and whether they converged."""
    m = len(coeffs) - 1
    scale = max(abs(c) for c in coeffs)
    try:
        c = np.array([x / scale for x in coeffs], dtype=float)
    except OverflowError:
        c = np.array([float(Fraction(x, scale)) for x in coeffs])
    dc = np.polyder(c)
    bound = fujiwara_bound(coeffs)
    z = bound * np.exp(1j * (2 * np.pi * np.arange(m) / m + 0.4))
    converged = False
    with np.errstate(all="ignore"):
        for _ in range(iters):
            w = np.polyval(c, z) / np.polyval(dc, z)
            diff = z[:, None] - z[None, :]
            np.fill_diagonal(diff, 1.0)
            inv = 1.0 / diff
            np.fill_diagonal(inv, 0.0)
            corr = w / (1.0 - w * inv.sum(axis=1))
            corr = np.where(np.isfinite(corr), corr, 0.0)
            z = z - corr
            if np.all(np.abs(corr) <= 4 * _EPS * np.maximum(1.0, np.abs(z))):
                converged = True
                break
    if not np.all(np.isfinite(z)):
        z = np.roots(c).astype(complex)
        converged = False
    return z, converged


def _horner(ctx, coeffs, z):
    """p(z), p'(z) and the rounding-error scales Σ|c_k||z|^k, Σk|c_k||z|^(k-1)."""
    p = ctx.mpc(0)
    dp = ctx.mpc(0)
    absz = abs(z)
    mag = ctx.mpf(0)
    dmag = ctx.mpf(0)
    for c in coeffs:
        dp = dp * z + p
        p = p * z + c
        dmag = dmag * absz + mag
        mag = mag * absz + abs(c)
    return p, dp, mag, dmag


def _aberth_mp(ctx, coeffs, zs, tol, max_iter=60):
    m = len(zs)
    zs = list(zs)
    for _ in range(max_iter):
        worst = ctx.mpf(0)
        for i in range(m):
            p, dp, _, _ = _horner(ctx, coeffs, zs[i])
            if p == 0:
                continue
            if dp == 0:
                zs[i] += ctx.mpf(2) ** (-ctx.prec // 4)
                worst = ctx.inf
                continue
            w = p / dp
            s = ctx.mpc(0)
            for j in range(m):
                if j != i:
                    d = zs[i] - zs[j]
                    if d != 0:
                        s += 1 / d
            denom = 1 - w * s
            corr = w / denom if denom != 0 else w
            zs[i] -= corr
            rel = abs(corr) / max(1, abs(zs[i]))
            if rel > worst:
                worst = rel
        if worst <= tol:
            break
    return zs


def _certify(ctx, coeffs, zs):
    m = len(coeffs) - 1
    u = ctx.mpf(2) ** (1 - ctx.prec)
    # complex Horner: (2m+2) roundings, each at most 4u in modulus
    gamma = 4 * (2 * m + 2) * u
    radii = []
    for z in zs:
        p, dp, mag, dmag = _horner(ctx, coeffs, z)
        err = gamma * mag
        denom = abs(dp) - gamma * dmag
        if denom <= 0:
            radii.append(ctx.inf)
        else:
            radii.append(m * (abs(p) + err) / denom)
    return radii


def _disjoint(zs, radii) -> bool:
    # m disjoint disks, each holding a root of a degree-m squarefree factor,
    # hold exactly one root apiece
    for i in range(len(zs)):
        for j in range(i + 1, len(zs)):
            if abs(zs[i] - zs[j]) <= radii[i] + radii[j]:
                return False
    return True


def _roots_squarefree(f: RatPolynomial, prec: int, max_prec: int, target: float):
    ints, _ = f.integer_form()
    coeffs = ints.coeffs
    m = len(coeffs) - 1
    if m == 1:
        ctx = _context(prec)
        z = ctx.mpf(-coeffs[1]) / coeffs[0]
        return [ctx.mpc(z)], [abs(z) * ctx.mpf(2) ** (1 - prec)], prec
    zs_float, _ = _aberth_float(coeffs)
    zs = None
    while prec <= max_prec:
        ctx = _context(prec)
        cs = [ctx.mpf(c) for c in coeffs]
        if zs is None:
            zs = [ctx.mpc(complex(z)) for z in zs_float]
        else:
            zs = [ctx.mpc(z) for z in zs]
        zs = _aberth_mp(ctx, cs, zs, tol=ctx.mpf(2) ** (8 - prec))
        radii = _certify(ctx, cs, zs)
        if all(r <= target * max(1, abs(z)) for r, z in zip(radii, zs)) and _disjoint(zs, radii):
            return zs, radii, prec
        prec *= 2
    raise PrecisionExhausted(
        f"could not certify roots of {f!r} to radius {target} within {max_prec} bits"
    )


def find_roots(
    p,
    work_precision: int = DEFAULT_PRECISION,
    max_precision: int = MAX_PRECISION,
    target: float = RADIUS_TARGET,
) -> RootSet:
    """All roots of ``p`` with multiplicity and certified radii.

    Raises :class:`PrecisionExhausted` if some radius stays above ``target``
    (relative to max(1, |root|)) at ``max_precision`` bits.
    """
    p = as_poly(p)
    if p.degree < 1:
        raise ValueError("find_roots needs degree >= 1")
    core, zero_mult = strip_x_power(p)
    ctx = _context(work_precision)
    roots: list = [ctx.mpc(0)] * zero_mult
    radii: list = [ctx.mpf(0)] * zero_mult
    used = work_precision
    if core.degree >= 1:
        for factor, mult in squarefree_decomposition(core):
            zs, rs, prec = _roots_squarefree(factor, work_precision, max_precision, target)
            used = max(used, prec)
            for z, r in zip(zs, rs):
                roots.extend([z] * mult)
                radii.extend([r] * mult)
    return RootSet(tuple(roots), tuple(radii), p.degree, used)


def moduli(rs: RootSet) -> list[tuple[float, float]]:
    """(|a_i|, error bound) sorted by decreasing modulus, as floats."""
    out = []
    for z, r in zip(rs.roots, rs.radii):
        mod = abs(z)
        val = float(mod)
        err = float(r) + abs(val) * 2 * _EPS + float(abs(mod - val))
        out.append((val, err))
    out.sort(key=lambda t: -t[0])
    return out


def unit_tolerance(radius: float, floor: float = 1e-9) -> float:
    """Tolerance for deciding that a modulus equals 1 (or another modulus)."""
    return max(floor, 10.0 * radius)
