"""Exact arithmetic on integer and rational polynomials.

Coefficients are stored in descending degree order (leading coefficient
first) everywhere in this package.  Integers are Python ints and rationals
are :class:`fractions.Fraction`, so nothing here ever rounds.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from math import gcd as igcd
from typing import Iterable, Sequence, Union

Number = Union[int, Fraction]


class PolynomialError(ValueError):
    """Raised on invalid polynomial input (wrong degree, not monic, ...)."""


class PolynomialParseError(PolynomialError):
    def __init__(self, token: str, text: str):
        super().__init__(f"cannot parse polynomial {text!r}: bad token {token!r}")
        self.token = token
        self.text = text


# ---------------------------------------------------------------------------
# raw coefficient-tuple helpers (descending order)
# ---------------------------------------------------------------------------


def _strip(cs: Iterable[Number]) -> tuple:
    cs = tuple(cs)
    i = 0
    while i < len(cs) - 1 and cs[i] == 0:
        i += 1
    cs = cs[i:]
    return cs if cs else (0,)


def _is_zero(cs: Sequence[Number]) -> bool:
    return len(cs) == 1 and cs[0] == 0


def _deg(cs: Sequence[Number]) -> int:
    return -1 if _is_zero(cs) else len(cs) - 1


def _add(a: Sequence[Number], b: Sequence[Number]) -> tuple:
    n = max(len(a), len(b))
    a = (0,) * (n - len(a)) + tuple(a)
    b = (0,) * (n - len(b)) + tuple(b)
    return _strip(x + y for x, y in zip(a, b))


def _neg(a: Sequence[Number]) -> tuple:
    return tuple(-x for x in a)


def _mul(a: Sequence[Number], b: Sequence[Number]) -> tuple:
    if _is_zero(a) or _is_zero(b):
        return (0,)
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _strip(out)


def _scale(a: Sequence[Number], c: Number) -> tuple:
    return _strip(c * x for x in a)


def _divmod(a: Sequence[Number], b: Sequence[Number]) -> tuple[tuple, tuple]:
    """Long division over Q; stays in Z when ``b`` is monic and ``a`` integral."""
    if _is_zero(b):
        raise ZeroDivisionError("polynomial division by zero")
    lead = b[0]
    exact_int = lead in (1, -1) and all(isinstance(x, int) for x in a) and all(
        isinstance(x, int) for x in b
    )
    rem = list(a)
    db = len(b) - 1
    if len(rem) - 1 < db:
        return (0,), _strip(rem)
    quot = []
    for i in range(len(rem) - db):
        c = rem[i]
        if c != 0:
            c = c * lead if exact_int else Fraction(c) / lead
            for j in range(1, len(b)):
                rem[i + j] -= c * b[j]
        quot.append(c)
        rem[i] = 0
    return _strip(quot), _strip(rem[len(rem) - db:] if db else [0])


def _prem(a: Sequence[int], b: Sequence[int]) -> tuple:
    """Pseudo-remainder of integer polynomials: lc(b)^(da-db+1)·a mod b."""
    da, db = _deg(a), _deg(b)
    if da < db:
        return tuple(a)
    lead = b[0]
    rem = list(a)
    for i in range(da - db + 1):
        c = rem[i]
        rem = [lead * x for x in rem]
        if c:
            for j in range(len(b)):
                rem[i + j] -= c * b[j]
    return _strip(rem[da - db + 1:] if db else [0])


def _derivative(a: Sequence[Number]) -> tuple:
    n = len(a) - 1
    if n <= 0:
        return (0,)
    return _strip(c * (n - i) for i, c in enumerate(a[:-1]))


def _content(a: Sequence[int]) -> int:
    g = 0
    for x in a:
        g = igcd(g, x)
    return g


def _primitive(a: Sequence[int]) -> tuple:
    if _is_zero(a):
        return (0,)
    g = _content(a)
    if a[0] < 0:
        g = -g
    return tuple(x // g for x in a)


def _clear_denominators(a: Sequence[Number]) -> tuple[tuple, int]:
    """Return (integer coefficients, d) with d·a == integer coefficients, d > 0."""
    d = 1
    for x in a:
        if isinstance(x, Fraction):
            d = d * x.denominator // igcd(d, x.denominator)
    return tuple(int(x * d) for x in a), d


def _to_monic(a: Sequence[Number]) -> tuple:
    lead = a[0]
    if lead == 1:
        return tuple(a)
    return tuple(Fraction(x) / lead for x in a)


def _int_or_frac(x: Number) -> Number:
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    return x


def _gcd(a: Sequence[Number], b: Sequence[Number]) -> tuple:
    """Monic gcd over Q via the primitive PRS on cleared integer polynomials."""
    if _is_zero(a):
        return _to_monic(b) if not _is_zero(b) else (0,)
    if _is_zero(b):
        return _to_monic(a)
    x = _primitive(_clear_denominators(a)[0])
    y = _primitive(_clear_denominators(b)[0])
    if _deg(x) < _deg(y):
        x, y = y, x
    while not _is_zero(y):
        r = _prem(x, y)
        x, y = y, (_primitive(r) if not _is_zero(r) else (0,))
    return tuple(_int_or_frac(c) for c in _to_monic(x))


# ---------------------------------------------------------------------------
# polynomial types
# ---------------------------------------------------------------------------


class RatPolynomial:
    """Polynomial with exact rational coefficients, leading coefficient first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Number]):
        cs = []
        for c in coeffs:
            if isinstance(c, bool) or not isinstance(c, (int, Fraction)):
                c = Fraction(c)
            cs.append(_int_or_frac(c))
        object.__setattr__(self, "coeffs", _strip(cs))

    def __setattr__(self, name, value):
        raise AttributeError("polynomials are immutable")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Number:
        return self.coeffs[0]

    def is_zero(self) -> bool:
        return _is_zero(self.coeffs)

    def is_monic(self) -> bool:
        return self.coeffs[0] == 1

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, RatPolynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({format_poly(self)})"

    def __str__(self) -> str:
        return format_human(self)

    # arithmetic -------------------------------------------------------------

    @staticmethod
    def _wrap(cs: tuple) -> "RatPolynomial":
        if all(isinstance(c, int) or (isinstance(c, Fraction) and c.denominator == 1) for c in cs):
            return IntPolynomial(int(c) for c in cs)
        return RatPolynomial(cs)

    def __add__(self, other) -> "RatPolynomial":
        return self._wrap(_add(self.coeffs, _operand(other)))

    __radd__ = __add__

    def __sub__(self, other) -> "RatPolynomial":
        return self._wrap(_add(self.coeffs, _neg(_operand(other))))

    def __rsub__(self, other) -> "RatPolynomial":
        return self._wrap(_add(_operand(other), _neg(self.coeffs)))

    def __neg__(self) -> "RatPolynomial":
        return self._wrap(_neg(self.coeffs))

    def __mul__(self, other) -> "RatPolynomial":
        if isinstance(other, (int, Fraction)):
            return self._wrap(_scale(self.coeffs, other))
        return self._wrap(_mul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "RatPolynomial":
        out: tuple = (1,)
        for _ in range(k):
            out = _mul(out, self.coeffs)
        return self._wrap(out)

    def __divmod__(self, other) -> tuple["RatPolynomial", "RatPolynomial"]:
        q, r = _divmod(self.coeffs, _operand(other))
        return self._wrap(q), self._wrap(r)

    def __floordiv__(self, other: "RatPolynomial") -> "RatPolynomial":
        return divmod(self, other)[0]

    def __mod__(self, other: "RatPolynomial") -> "RatPolynomial":
        return divmod(self, other)[1]

    def exact_div(self, other: "RatPolynomial") -> "RatPolynomial":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise PolynomialError(f"{other!r} does not divide {self!r}")
        return q

    def derivative(self) -> "RatPolynomial":
        return self._wrap(_derivative(self.coeffs))

    def __call__(self, x):
        acc = 0
        for c in self.coeffs:
            acc = acc * x + c
        return acc

    def monic(self) -> "RatPolynomial":
        return self._wrap(_to_monic(self.coeffs))

    def gcd(self, other: "RatPolynomial") -> "RatPolynomial":
        return self._wrap(_gcd(self.coeffs, other.coeffs))

    def reversed(self) -> "RatPolynomial":
        """X^n p(1/X) (the reciprocal polynomial, same length)."""
        return self._wrap(tuple(reversed(self.coeffs)))

    def integer_form(self) -> tuple["IntPolynomial", int]:
        """(q, d) with q = d·self having coprime integer coefficients up to sign, d rational."""
        cs, d = _clear_denominators(self.coeffs)
        return IntPolynomial(cs), d


class IntPolynomial(RatPolynomial):
    """Polynomial with arbitrary-precision integer coefficients."""

    __slots__ = ()

    def __init__(self, coeffs: Iterable[Number]):
        cs = []
        for c in coeffs:
            if isinstance(c, Fraction):
                if c.denominator != 1:
                    raise PolynomialError(f"non-integer coefficient {c}")
                c = int(c)
            elif isinstance(c, bool) or not isinstance(c, int):
                if isinstance(c, float) and c.is_integer():
                    c = int(c)
                else:
                    raise PolynomialError(f"non-integer coefficient {c!r}")
            cs.append(c)
        object.__setattr__(self, "coeffs", _strip(cs))


Poly = Union[IntPolynomial, RatPolynomial]


def _operand(other) -> tuple:
    """Coefficient tuple of a polynomial or scalar operand."""
    if isinstance(other, RatPolynomial):
        return other.coeffs
    if isinstance(other, (int, Fraction)):
        return _strip((other,))
    raise TypeError(f"unsupported polynomial operand {other!r}")


def as_poly(p) -> RatPolynomial:
    if isinstance(p, RatPolynomial):
        return p
    if isinstance(p, str):
        return parse_poly(p)
    return RatPolynomial._wrap(tuple(p))


X = IntPolynomial((1, 0))
ONE = IntPolynomial((1,))


# ---------------------------------------------------------------------------
# text formats
# ---------------------------------------------------------------------------

_TERM_RE = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:(?P<coef>\d+(?:/\d+)?)\s*\*?\s*)?
        (?:(?P<var>[xX])(?:\s*(?:\^|\*\*)\s*(?P<exp>\d+))?)?\s*""",
    re.VERBOSE,
)


def _parse_number(tok: str, text: str) -> Number:
    tok = tok.strip()
    try:
        if "/" in tok:
            return _int_or_frac(Fraction(tok))
        return int(tok)
    except (ValueError, ZeroDivisionError):
        raise PolynomialParseError(tok, text) from None


def _parse_human(text: str) -> RatPolynomial:
    terms: dict[int, Number] = {}
    pos = 0
    s = text.strip()
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if m is None or m.end() == pos or (m.group("coef") is None and m.group("var") is None):
            bad = re.match(r"\S+?(?=[+-]|$)", s[pos:].lstrip())
            raise PolynomialParseError(bad.group(0) if bad else s[pos:], text)
        if pos > 0 and m.group("sign") is None:
            raise PolynomialParseError(s[pos:m.end()].strip(), text)
        coef = _parse_number(m.group("coef"), text) if m.group("coef") else 1
        if m.group("sign") == "-":
            coef = -coef
        if m.group("var"):
            exp = int(m.group("exp")) if m.group("exp") else 1
        else:
            exp = 0
        terms[exp] = terms.get(exp, 0) + coef
        pos = m.end()
    if not terms:
        raise PolynomialParseError(text, text)
    deg = max(terms)
    return RatPolynomial._wrap(tuple(terms.get(k, 0) for k in range(deg, -1, -1)))


def parse_poly(text: str) -> RatPolynomial:
    """Parse ``1,0,-3,1`` or ``x^3-3x+1``.

    Returns an :class:`IntPolynomial` when every coefficient is an integer.
    """
    s = text.strip()
    if not s:
        raise PolynomialParseError("", text)
    if re.search(r"[xX]", s):
        return _parse_human(s)
    cs = [_parse_number(tok, text) for tok in s.split(",")]
    return RatPolynomial._wrap(tuple(cs))


def format_poly(p: RatPolynomial) -> str:
    return ",".join(str(c) for c in p.coeffs)


def format_human(p: RatPolynomial) -> str:
    n = p.degree
    parts = []
    for i, c in enumerate(p.coeffs):
        if c == 0:
            continue
        k = n - i
        mag = abs(c)
        sign = "-" if c < 0 else "+"
        if k == 0:
            body = str(mag)
        else:
            body = ("" if mag == 1 else f"{mag}*") + ("x" if k == 1 else f"x^{k}")
        parts.append((sign, body))
    if not parts:
        return "0"
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


# ---------------------------------------------------------------------------
# Newton's identities
# ---------------------------------------------------------------------------


def elementary_symmetric_from_power_sums(power_sums: Sequence[Number]) -> list[Fraction]:
    """s_1..s_n from p_1..p_n using j·s_j = Σ_{i≤j} (-1)^(i-1) s_(j-i) p_i."""
    if len(power_sums) < 1:
        raise PolynomialError("need at least one power sum")
    p = [Fraction(x) for x in power_sums]
    s = [Fraction(1)]
    for j in range(1, len(p) + 1):
        acc = Fraction(0)
        for i in range(1, j + 1):
            term = s[j - i] * p[i - 1]
            acc += term if i % 2 else -term
        s.append(acc / j)
    return s[1:]


def power_sums_from_coeffs(p: RatPolynomial, k_max: int) -> list[Fraction]:
    p = as_poly(p)
    if not p.is_monic():
        raise PolynomialError("power_sums_from_coeffs needs a monic polynomial")
    if k_max < 1:
        raise PolynomialError("k_max must be >= 1")
    n = p.degree
    s = [Fraction(1)] + [
        Fraction(p.coeffs[j]) * (-1 if j % 2 else 1) if j <= n else Fraction(0)
        for j in range(1, k_max + 1)
    ]
    sums: list[Fraction] = []
    for j in range(1, k_max + 1):
        acc = j * s[j]
        for i in range(1, j):
            term = s[j - i] * sums[i - 1]
            acc -= term if i % 2 else -term
        sums.append(acc if j % 2 else -acc)
    return sums


def coeffs_from_power_sums(power_sums: Sequence[Number]) -> RatPolynomial:
    """Monic polynomial whose roots have the given power sums p_1..p_n."""
    s = elementary_symmetric_from_power_sums(power_sums)
    cs = [Fraction(1)] + [x if j % 2 == 0 else -x for j, x in enumerate(s, start=1)]
    return RatPolynomial._wrap(tuple(cs))


# ---------------------------------------------------------------------------
# length, resultant, discriminant
# ---------------------------------------------------------------------------


def poly_length(p: RatPolynomial) -> Number:
    """Sum of absolute values of the coefficients."""
    return sum(abs(c) for c in as_poly(p).coeffs)


def poly_height(p: RatPolynomial) -> Number:
    return max(abs(c) for c in as_poly(p).coeffs)


def _resultant_int(a: Sequence[int], b: Sequence[int]) -> int:
    # subresultant PRS (Collins-Brown), exact integer divisions throughout
    if _is_zero(a) or _is_zero(b):
        return 0
    s = 1
    if _deg(a) < _deg(b):
        a, b = b, a
        if _deg(a) % 2 and _deg(b) % 2:
            s = -s
    ca, cb = _content(a), _content(b)
    a = tuple(x // ca for x in a)
    b = tuple(x // cb for x in b)
    t = ca ** _deg(b) * cb ** _deg(a)
    g = h = 1
    while _deg(b) > 0:
        delta = _deg(a) - _deg(b)
        if _deg(a) % 2 and _deg(b) % 2:
            s = -s
        r = _prem(a, b)
        if _is_zero(r):
            return 0
        a = b
        div = g * h**delta
        b = tuple(x // div for x in r)
        g = a[0]
        if delta:
            h = g**delta // h ** (delta - 1)
    da = _deg(a)
    return s * t * (b[0] ** da // h ** (da - 1))


def resultant(p: RatPolynomial, q: RatPolynomial) -> Fraction:
    p, q = as_poly(p), as_poly(q)
    a, da = _clear_denominators(p.coeffs)
    b, db = _clear_denominators(q.coeffs)
    r = _resultant_int(a, b)
    return Fraction(r) / (Fraction(da) ** q.degree * Fraction(db) ** p.degree)


def discriminant(p: RatPolynomial) -> Fraction:
    """(-1)^(n(n-1)/2) · Res(p, p') / lc(p); equals ∏_{i<j}(a_i - a_j)^2 when monic."""
    p = as_poly(p)
    n = p.degree
    if n < 1 or p.is_zero():
        raise PolynomialError("discriminant needs degree >= 1")
    if n == 1:
        return Fraction(1)
    r = resultant(p, p.derivative())
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * r / p.lead


# ---------------------------------------------------------------------------
# square-free decomposition and real-root counting
# ---------------------------------------------------------------------------


def is_squarefree(p: RatPolynomial) -> bool:
    p = as_poly(p)
    return p.gcd(p.derivative()).degree == 0


def squarefree_decomposition(p: RatPolynomial) -> list[tuple[RatPolynomial, int]]:
    """Yun's algorithm: monic factors f_i with p = lc · ∏ f_i^i, f_i squarefree, coprime."""
    p = as_poly(p)
    if p.degree < 1:
        return []
    f = p.monic()
    df = f.derivative()
    a = f.gcd(df)
    b = f.exact_div(a)
    c = df.exact_div(a)
    d = c - b.derivative()
    out = []
    i = 1
    while b.degree > 0:
        a = b.gcd(d)
        b = b.exact_div(a)
        c = d.exact_div(a)
        d = c - b.derivative()
        if a.degree > 0:
            out.append((a, i))
        i += 1
    return out


def squarefree_part(p: RatPolynomial) -> RatPolynomial:
    p = as_poly(p)
    return p.monic().exact_div(p.gcd(p.derivative()))


def _sign_at_infinity(cs: Sequence[Number], neg: bool) -> int:
    lead = cs[0]
    sgn = 1 if lead > 0 else -1
    if neg and (len(cs) - 1) % 2:
        sgn = -sgn
    return sgn


def count_real_roots(p: RatPolynomial) -> int:
    """Number of distinct real roots by a Sturm sequence (exact)."""
    p = as_poly(p)
    if p.degree < 1:
        return 0
    seq = [p.coeffs, _derivative(p.coeffs)]
    while not _is_zero(seq[-1]) and _deg(seq[-1]) > 0:
        _, r = _divmod(seq[-2], seq[-1])
        if _is_zero(r):
            break
        seq.append(_neg(r))

    def changes(neg: bool) -> int:
        signs = [_sign_at_infinity(cs, neg) for cs in seq if not _is_zero(cs)]
        return sum(1 for u, v in zip(signs, signs[1:]) if u != v)

    return changes(True) - changes(False)


# ---------------------------------------------------------------------------
# cyclotomic detection
# ---------------------------------------------------------------------------


def euler_phi(m: int) -> int:
    result, k, n = m, 2, m
    while k * k <= n:
        if n % k == 0:
            while n % k == 0:
                n //= k
            result -= result // k
        k += 1
    if n > 1:
        result -= result // n
    return result


@lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> IntPolynomial:
    """The m-th cyclotomic polynomial Φ_m."""
    if m < 1:
        raise PolynomialError("cyclotomic index must be positive")
    num: tuple = (1,) + (0,) * (m - 1) + (-1,)
    for d in range(1, m):
        if m % d == 0:
            num, r = _divmod(num, cyclotomic_poly(d).coeffs)
            assert _is_zero(r)
    return IntPolynomial(num)


@lru_cache(maxsize=None)
def cyclotomic_indices(n: int) -> tuple[int, ...]:
    """All m with φ(m) ≤ n.  φ(m) ≥ sqrt(m/2) bounds the search to m ≤ 2n²."""
    return tuple(m for m in range(1, 2 * n * n + 3) if euler_phi(m) <= n)


def cyclotomic_part(p: RatPolynomial) -> tuple[IntPolynomial, IntPolynomial]:
    """Split monic integer ``p`` as (cyclotomic factor, noncyclotomic factor).

    The cyclotomic factor is the largest divisor of p that divides a product
    of X^m - 1 with φ(m) ≤ deg p, i.e. the product of every Φ_m dividing p,
    with multiplicity.  By Kronecker's theorem those are exactly the
    irreducible factors with all roots on the unit circle.
    """
    p = as_poly(p)
    if not isinstance(p, IntPolynomial) or not p.is_monic():
        raise PolynomialError("cyclotomic_part needs a monic integer polynomial")
    cyc: tuple = (1,)
    rest = p.coeffs
    for m in cyclotomic_indices(max(p.degree, 1)):
        phi = cyclotomic_poly(m).coeffs
        if len(phi) > len(rest):
            continue
        while len(phi) <= len(rest):
            q, r = _divmod(rest, phi)
            if not _is_zero(r):
                break
            rest = q
            cyc = _mul(cyc, phi)
        if len(rest) == 1:
            break
    return IntPolynomial(cyc), IntPolynomial(rest)


def is_cyclotomic_product(p: RatPolynomial) -> bool:
    return cyclotomic_part(p)[1].degree == 0


def strip_x_power(p: RatPolynomial) -> tuple[RatPolynomial, int]:
    """(p / X^k, k) for the largest k with X^k | p."""
    cs = as_poly(p).coeffs
    k = 0
    while len(cs) > 1 and cs[-1] == 0:
        cs = cs[:-1]
        k += 1
    return RatPolynomial._wrap(cs), k


# ---------------------------------------------------------------------------
# irreducibility (Kronecker's method, small degree)
# ---------------------------------------------------------------------------


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    k = 1
    while k * k <= n:
        if n % k == 0:
            small.append(k)
            if k != n // k:
                large.append(n // k)
        k += 1
    ds = small + large[::-1]
    return ds + [-d for d in ds]


def _lagrange(xs: Sequence[int], ys: Sequence[int]) -> RatPolynomial:
    acc = RatPolynomial((0,))
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        if yi == 0:
            continue
        term = RatPolynomial((yi,))
        for j, xj in enumerate(xs):
            if j != i:
                term = term * RatPolynomial((Fraction(1, xi - xj), Fraction(-xj, xi - xj)))
        acc = acc + term
    return acc


def find_factor(p: RatPolynomial) -> IntPolynomial | None:
    """A nontrivial integer factor of primitive ``p`` by Kronecker's method, or None."""
    from itertools import product

    p = as_poly(p)
    if p.degree <= 1:
        return None
    n = p.degree
    # integer roots first
    for x in range(-50, 51):
        if p(x) == 0:
            return IntPolynomial((1, -x))
    pts = sorted(range(-30, 31), key=lambda x: (abs(p(x)), abs(x)))
    for d in range(2, n // 2 + 1):
        xs = sorted(pts[: d + 1])
        divs = [_divisors(p(x)) for x in xs]
        for ys in product(*divs):
            if ys[0] < 0:
                continue
            q = _lagrange(xs, ys)
            if q.degree != d or not q.is_integral():
                continue
            if (p % q).is_zero():
                return IntPolynomial(q.coeffs)
    return None


def is_irreducible(p: RatPolynomial) -> bool:
    """Irreducibility over Q (integer content is ignored)."""
    p = as_poly(p)
    if p.degree < 1:
        return False
    ints, _ = _clear_denominators(p.coeffs)
    return find_factor(IntPolynomial(_primitive(ints))) is None
