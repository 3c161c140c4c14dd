"""Exhaustive search for the smallest Mahler measure above 1 in a box of
monic integer polynomials, sharded across processes."""

from __future__ import annotations

import itertools
import multiprocessing
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Optional

import numpy as np

from .polycore import IntPolynomial, cyclotomic_part, format_poly, parse_poly, strip_x_power
from .roots import DEFAULT_PRECISION, _aberth_float, find_roots, moduli

MAX_SPACE = 10**9
PRUNE_FACTOR = 1.1
TIE_REL = 1e-9
_TRIVIAL = 1 + 1e-12


class SearchSpaceTooLarge(ValueError):
    pass


class NoCandidateError(ValueError):
    pass


@dataclass(frozen=True)
class SearchSpec:
    degree: int = 10
    height: int = 1
    reciprocal_only: bool = True
    workers: int = 1

    def __post_init__(self):
        if self.degree < 2:
            raise ValueError("degree must be >= 2")
        if self.height < 1:
            raise ValueError("height must be >= 1")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")

    @property
    def free_count(self) -> int:
        return self.degree // 2 if self.reciprocal_only else self.degree

    @property
    def space_size(self) -> int:
        return (2 * self.height + 1) ** self.free_count


@dataclass
class SearchRecord:
    best_measure: float
    best_measure_err: float
    witness: IntPolynomial
    candidates_scanned: int
    cyclotomic_skipped: int
    noncyclotomic_scanned: int
    pruned: int
    ties: list = field(default_factory=list)
    wall_time: float = 0.0
    spec: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "best_measure": self.best_measure,
            "best_measure_err": self.best_measure_err,
            "witness": format_poly(self.witness),
            "candidates_scanned": self.candidates_scanned,
            "cyclotomic_skipped": self.cyclotomic_skipped,
            "noncyclotomic_scanned": self.noncyclotomic_scanned,
            "pruned": self.pruned,
            "ties": [format_poly(t) for t in self.ties],
            "wall_time": self.wall_time,
            "spec": dict(self.spec),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "SearchRecord":
        d = dict(d)
        d["witness"] = parse_poly(d["witness"])
        d["ties"] = [parse_poly(t) for t in d.get("ties", [])]
        return cls(**d)

    def same_result(self, other: "SearchRecord") -> bool:
        a, b = self.to_dict(), other.to_dict()
        for k in ("wall_time", "pruned"):
            a.pop(k), b.pop(k)
        a["spec"].pop("workers", None), b["spec"].pop("workers", None)
        return a == b


def is_reciprocal(p) -> bool:
    """Palindromic coefficient vector."""
    cs = p.coeffs
    return cs == cs[::-1]


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------


def _build(spec: SearchSpec, free: tuple) -> tuple:
    n = spec.degree
    if not spec.reciprocal_only:
        return (1,) + free
    half = list(free)
    cs = [1] + half
    # palindrome: c_i = c_{n-i}
    mirror = cs[: n + 1 - len(cs)][::-1]
    return tuple(cs + mirror)


def shards(spec: SearchSpec) -> list[tuple]:
    """Prefixes fixing the first two free coefficients (fewer if not available)."""
    k = min(2, spec.free_count)
    rng = range(-spec.height, spec.height + 1)
    return list(itertools.product(rng, repeat=k))


def iter_candidates(spec: SearchSpec, prefix: tuple = ()) -> Iterator[tuple]:
    rng = range(-spec.height, spec.height + 1)
    for rest in itertools.product(rng, repeat=spec.free_count - len(prefix)):
        yield _build(spec, prefix + rest)


# ---------------------------------------------------------------------------
# shard worker
# ---------------------------------------------------------------------------

_shared_best = None


def _init_worker(shared) -> None:
    global _shared_best
    _shared_best = shared


def _approx_measure(coeffs: tuple) -> Optional[float]:
    """Double-precision measure, or None when the iteration did not settle."""
    if len(coeffs) == 2:
        return max(1.0, abs(coeffs[1] / coeffs[0]))
    z, ok = _aberth_float(coeffs, iters=200)
    if not ok:
        return None
    return float(np.prod(np.maximum(1.0, np.abs(z))))


def _dominant_positive(rs) -> bool:
    i = max(range(len(rs.roots)), key=lambda k: abs(rs.roots[k]))
    z, r = rs.roots[i], rs.radii[i]
    return abs(z.imag) <= r and z.real > 0


@dataclass
class _ShardResult:
    scanned: int = 0
    cyclotomic: int = 0
    noncyclotomic: int = 0
    pruned: int = 0
    best: list = field(default_factory=list)  # (measure, err, pref, coeffs)
    rows: list = field(default_factory=list)


def _run_shard(spec: SearchSpec, prefix: tuple, precision: int, report_threshold: Optional[float]) -> _ShardResult:
    out = _ShardResult()
    local_best = float("inf")
    for coeffs in iter_candidates(spec, prefix):
        out.scanned += 1
        p = IntPolynomial(coeffs)
        core, _ = strip_x_power(p)
        _, noncyc = cyclotomic_part(core) if core.degree >= 1 else (None, core)
        if noncyc.degree == 0:
            out.cyclotomic += 1
            if report_threshold is not None and 1.0 > report_threshold:
                out.rows.append((coeffs, 1.0, "kronecker_trivial"))
            continue
        out.noncyclotomic += 1
        approx = _approx_measure(noncyc.coeffs)
        best_now = local_best
        if _shared_best is not None:
            best_now = min(best_now, _shared_best.value)
        if approx is not None and approx > PRUNE_FACTOR * best_now:
            out.pruned += 1
            if report_threshold is not None and approx > report_threshold:
                out.rows.append((coeffs, approx, "approx"))
            continue
        rs = find_roots(noncyc, precision)
        mods = moduli(rs)
        m = 1.0
        hi = 1.0
        for v, e in mods:
            m *= max(1.0, v)
            hi *= max(1.0, v + e)
        err = hi - m + m * 4 * len(mods) * 2.0**-52
        if report_threshold is not None and m > report_threshold:
            out.rows.append((coeffs, m, "certified"))
        if m <= _TRIVIAL:
            continue
        pref = 0 if _dominant_positive(rs) else 1
        out.best.append((m, err, pref, coeffs))
        if m < local_best:
            local_best = m
            if _shared_best is not None and m < _shared_best.value:
                _shared_best.value = m
    if out.best:
        mn = min(b[0] for b in out.best)
        out.best = [b for b in out.best if b[0] <= mn * (1 + TIE_REL)]
    return out


def _merge(results: list[_ShardResult]) -> tuple:
    cands = [b for r in results for b in r.best]
    if not cands:
        raise NoCandidateError("no noncyclotomic candidate with measure > 1 in this box")
    mn = min(c[0] for c in cands)
    tied = [c for c in cands if c[0] <= mn * (1 + TIE_REL)]
    tied.sort(key=lambda c: (c[2], c[3]))
    return tied[0], [c[3] for c in tied]


def enumerate_and_minimize(
    spec: SearchSpec,
    precision: int = DEFAULT_PRECISION,
    report_threshold: Optional[float] = None,
    rows_out: Optional[list] = None,
) -> SearchRecord:
    """Smallest Mahler measure > 1 over all monic integer polynomials in the box.

    Candidates that are X^k times a product of cyclotomic polynomials
    (measure exactly 1, by Kronecker) are counted in ``cyclotomic_skipped``.
    Ties in measure (relative 1e-9) prefer a witness whose root of largest
    modulus is a positive real number, then the lexicographically smallest
    coefficient vector; every tied vector is listed in ``ties``.  The record
    does not depend on ``spec.workers``.
    """
    if spec.space_size > MAX_SPACE:
        raise SearchSpaceTooLarge(f"{spec.space_size} candidates exceeds the limit {MAX_SPACE}")
    t0 = time.perf_counter()
    prefixes = shards(spec)
    if spec.workers == 1:
        global _shared_best
        _shared_best = None
        results = [_run_shard(spec, pre, precision, report_threshold) for pre in prefixes]
    else:
        ctx = multiprocessing.get_context("spawn")
        shared = ctx.Value("d", float("inf"), lock=False)
        with ProcessPoolExecutor(spec.workers, mp_context=ctx, initializer=_init_worker, initargs=(shared,)) as ex:
            futs = [ex.submit(_run_shard, spec, pre, precision, report_threshold) for pre in prefixes]
            results = [f.result() for f in futs]
    (m, err, _, coeffs), ties = _merge(results)
    if rows_out is not None:
        for r in results:
            rows_out.extend(r.rows)
    return SearchRecord(
        best_measure=m,
        best_measure_err=err,
        witness=IntPolynomial(coeffs),
        candidates_scanned=sum(r.scanned for r in results),
        cyclotomic_skipped=sum(r.cyclotomic for r in results),
        noncyclotomic_scanned=sum(r.noncyclotomic for r in results),
        pruned=sum(r.pruned for r in results),
        ties=[IntPolynomial(t) for t in ties],
        wall_time=time.perf_counter() - t0,
        spec={
            "degree": spec.degree,
            "height": spec.height,
            "reciprocal_only": spec.reciprocal_only,
            "workers": spec.workers,
        },
    )
