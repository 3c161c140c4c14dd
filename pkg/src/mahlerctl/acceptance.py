"""Acceptance suite: ten end-to-end checks, each with a runtime budget.

Every check returns a :class:`CriterionResult`; ``run_all`` prints one
PASS/FAIL line per check.  Random samples use fixed seeds so runs are
reproducible.
"""

from __future__ import annotations

import io
import json
import math
import time
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Callable, Optional

import mpmath
import numpy as np

from . import matrixlen, measures, numfield, search
from .polycore import (
    IntPolynomial,
    coeffs_from_power_sums,
    discriminant,
    elementary_symmetric_from_power_sums,
    is_squarefree,
    power_sums_from_coeffs,
)
from .roots import find_roots

SEED = 20240601


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str
    elapsed: float
    budget: float

    def line(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        return f"[{tag}] criterion {self.number:>2} {self.name}: {self.detail} ({self.elapsed:.2f}s / {self.budget:g}s)"

    def to_dict(self) -> dict:
        return asdict(self)


def _cli_json(argv: list[str]) -> dict:
    from .cli import run

    buf, err = io.StringIO(), io.StringIO()
    code = run(argv + ["--json"], stdout=buf, stderr=err, environ={})
    if code != 0:
        raise RuntimeError(f"mahlerctl {' '.join(argv)} exited {code}: {err.getvalue().strip()}")
    return json.loads(buf.getvalue())


def _timed(number: int, name: str, budget: float, body: Callable[[], tuple[bool, str]]) -> CriterionResult:
    t0 = time.perf_counter()
    try:
        ok, detail = body()
    except Exception as exc:  # a crash is a failure, reported with its message
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    elapsed = time.perf_counter() - t0
    if ok and elapsed >= budget:
        ok, detail = False, detail + "; over runtime budget"
    return CriterionResult(number, name, ok, detail, elapsed, budget)


def _random_monic(rng, max_degree: int, height: int, min_degree: int = 1) -> IntPolynomial:
    n = int(rng.integers(min_degree, max_degree + 1))
    return IntPolynomial((1,) + tuple(int(c) for c in rng.integers(-height, height + 1, size=n)))


# ---------------------------------------------------------------------------
# independent oracles (no use of the package's root finder or bound code)
# ---------------------------------------------------------------------------


def oracle_lower_bound(n: int) -> float:
    """f(n) from mpmath.polyroots on Lehmer's polynomial, or the Voutier formula."""
    with mpmath.workprec(200):
        if n <= 20:
            roots = mpmath.polyroots(list(measures.LEHMER.coeffs), maxsteps=200, extraprec=200)
            return float(sum(mpmath.log(abs(r)) for r in roots if abs(r) > 1))
        ln = mpmath.log(n)
        return float(mpmath.mpf(1) / 4 * (mpmath.log(ln) / ln) ** 3)


def oracle_systole(n: int) -> float:
    with mpmath.workprec(200):
        return float(2 * mpmath.sqrt(2) / mpmath.sqrt(n) * mpmath.mpf(oracle_lower_bound(n)))


# ---------------------------------------------------------------------------
# criteria
# ---------------------------------------------------------------------------


def criterion_1() -> CriterionResult:
    def body():
        m = _cli_json(["mahler", "1,1,0,-1,-1,-1,-1,-1,0,1,1"])["mahler"]
        f10 = _cli_json(["f", "10"])["value"]
        ok = abs(m - 1.1762808) < 1e-6 and abs(f10 - math.log(m)) < 1e-12 and f10 > 0.16235
        return ok, f"M(L)={m:.10f}, f(10)={f10:.10f}"

    return _timed(1, "Lehmer constant", 0.1, body)


def criterion_2() -> CriterionResult:
    def body():
        v15 = measures.voutier_bound(15)
        prev = measures.lower_bound_function(2).value
        worst = None
        for n in range(3, 10_001):
            cur = measures.lower_bound_function(n).value
            if cur > prev:
                worst = n
                break
            prev = cur
        ok = v15 < 0.01245 and worst is None
        detail = f"f_V(15)={v15:.7f}, monotone on 2..10000" if worst is None else f"increase at n={worst}"
        return ok, detail

    return _timed(2, "Voutier spot check and monotonicity", 1.0, body)


def criterion_3(samples: int = 1000) -> CriterionResult:
    def body():
        rng = np.random.default_rng(SEED)
        violations = 0
        first = ""
        for i in range(samples):
            n = int(rng.integers(2, 11))
            x = matrixlen.random_semisimple_sl(n, rng)
            try:
                r = matrixlen.verify_theorem_a(x, strict_det=True)
                good = r.lower_holds() and r.upper_holds()
            except matrixlen.AgreementError as exc:
                good, r = False, exc
            if not good:
                violations += 1
                first = first or f"sample {i}: {r}"
        return violations == 0, f"{samples} samples, {violations} violations" + (f" ({first})" if first else "")

    return _timed(3, "Mahler/length sandwich on random SL_n", 30.0, body)


def criterion_4() -> CriterionResult:
    def body():
        bad = []
        count = 0
        for t in list(range(3, 101)) + list(range(-100, -2)):
            p = IntPolynomial((1, -t, 1))
            r = measures.check_bounds(p, strict=True)
            count += 1
            if r.equality_case != "both_tight" or abs(r.translation_length - 2 * r.log_mahler) >= 1e-9:
                bad.append(t)
        sq = IntPolynomial((1, -3, 1)) ** 2
        b = measures.check_bounds(sq, strict=True).equality_case
        lm = matrixlen.verify_theorem_a(matrixlen.companion(measures.LEHMER), strict_det=True)
        c_ok = lm.equality_case == "upper_tight" and abs(lm.translation_length - 2 * math.log(1.1762808182599176)) < 1e-8
        ok = not bad and b == "lower_tight" and c_ok
        return ok, f"(a) {count - len(bad)}/{count} both_tight; (b) {b}; (c) {lm.equality_case}, ℓ={lm.translation_length:.10f}"

    return _timed(4, "equality classifications", 1.0, body)


def criterion_5(samples: int = 500) -> CriterionResult:
    def body():
        rng = np.random.default_rng(SEED + 5)
        fails = 0
        for _ in range(samples):
            p = _random_monic(rng, 12, 10)
            ps = power_sums_from_coeffs(p, p.degree)
            e = elementary_symmetric_from_power_sums(ps)
            q = coeffs_from_power_sums(ps)
            expected = [Fraction((-1) ** k * c) for k, c in enumerate(p.coeffs)]
            if [Fraction(x) for x in [1] + list(e)] != expected or q != p:
                fails += 1
        return fails == 0, f"{samples - fails}/{samples} exact round trips"

    return _timed(5, "Newton round trip", 5.0, body)


def criterion_6(samples: int = 500) -> CriterionResult:
    def body():
        rng = np.random.default_rng(SEED + 6)
        fails = []
        for i in range(samples):
            n = int(rng.integers(1, 11))
            lead = 0
            while lead == 0:
                lead = int(rng.integers(-5, 6))
            p = IntPolynomial((lead,) + tuple(int(c) for c in rng.integers(-5, 6, size=n)))
            r = measures.mahler_classical_inequalities(p)
            if not r.all_hold:
                fails.append(i)
        return not fails, f"{samples - len(fails)}/{samples} hold" + (f", failures {fails[:5]}" if fails else "")

    return _timed(6, "classical inequalities", 10.0, body)


def criterion_7(per_field: int = 100) -> CriterionResult:
    def body():
        rng = np.random.default_rng(SEED + 7)
        worst = 0.0
        bad = 0
        for mp in ((1, 0, -2), (1, -1, -1), (1, -1, -2, 1)):
            f = numfield.make_field(IntPolynomial(mp))
            for _ in range(per_field):
                y = numfield.random_sl2(f, rng)
                exact = numfield.char_poly_exact(numfield.iota1(f, y))
                num = numfield.iota2_char_poly(f, y)
                integral = all(Fraction(c).denominator == 1 for c in exact.coeffs)
                diff = max(abs(float(a) - b) / max(1.0, abs(float(a))) for a, b in zip(exact.coeffs, num))
                worst = max(worst, diff)
                if not integral or diff >= 1e-8 or len(num) != len(exact.coeffs):
                    bad += 1
        return bad == 0, f"{3 * per_field - bad}/{3 * per_field} integral and matching, max rel diff {worst:.1e}"

    return _timed(7, "integrality of block embedding", 10.0, body)


def criterion_8() -> CriterionResult:
    def body():
        base = ["search", "--degree", "10", "--height", "1", "--reciprocal"]
        recs = [search.SearchRecord.from_dict(_cli_json(base + ["--workers", str(w)])) for w in (1, 4, 8)]
        r = recs[0]
        lehmer_minus = IntPolynomial(tuple(c * (-1) ** (10 - i) for i, c in enumerate(measures.LEHMER.coeffs)))
        ties_ok = {t.coeffs for t in r.ties} <= {measures.LEHMER.coeffs, lehmer_minus.coeffs}
        same = all(r.same_result(o) for o in recs[1:])
        ok = r.witness == measures.LEHMER and ties_ok and abs(r.best_measure - 1.1762808) < 1e-6 and same
        return ok, (
            f"witness {','.join(map(str, r.witness.coeffs))}, M={r.best_measure:.10f}, "
            f"ties={len(r.ties)} (X→-X images), identical for 1/4/8 workers: {same}, "
            f"single-worker {r.wall_time:.2f}s"
        )

    return _timed(8, "Lehmer search reproduction", 60.0, body)


def criterion_9() -> CriterionResult:
    ns = (2, 20, 21, 100)
    # the oracle runs before the clock starts; the budget covers sysbound itself
    expected = {n: oracle_systole(n) for n in ns}

    def body():
        worst = 0.0
        for n in ns:
            v = _cli_json(["sysbound", str(n)])["systole_lower_bound"]
            worst = max(worst, abs(v - expected[n]))
        return worst < 1e-9, f"max |sysbound - oracle| = {worst:.1e} for n in 2,20,21,100"

    return _timed(9, "systole bound values", 0.1, body)


def criterion_10(samples: int = 200) -> CriterionResult:
    def body():
        rng = np.random.default_rng(SEED + 10)
        worst = 0.0
        done = 0
        while done < samples:
            p = _random_monic(rng, 8, 5, min_degree=2)
            if not is_squarefree(p):
                continue
            d = discriminant(p)
            rs = find_roots(p)
            prod = mpmath.mpc(1)
            with mpmath.workprec(rs.precision):
                r = rs.roots
                for i in range(len(r)):
                    for j in range(i + 1, len(r)):
                        prod *= (r[i] - r[j]) ** 2
                rel = float(abs(prod - d) / abs(d))
            worst = max(worst, rel)
            done += 1
        return worst < 1e-6, f"{samples} samples, max relative difference {worst:.1e}"

    return _timed(10, "discriminant cross-check", 5.0, body)


CRITERIA = (
    criterion_1,
    criterion_2,
    criterion_3,
    criterion_4,
    criterion_5,
    criterion_6,
    criterion_7,
    criterion_8,
    criterion_9,
    criterion_10,
)


def run_all(stream=None) -> list[CriterionResult]:
    results = []
    for fn in CRITERIA:
        r = fn()
        results.append(r)
        if stream is not None:
            print(r.line(), file=stream, flush=True)
    return results


def run_one(number: int, stream=None) -> CriterionResult:
    r = CRITERIA[number - 1]()
    if stream is not None:
        print(r.line(), file=stream, flush=True)
    return r
