"""Exact polynomial arithmetic over the integers and real-root machinery.

:class:`IntPoly` is a univariate polynomial with Python ``int`` coefficients,
stored lowest degree first with trailing zeros trimmed; the zero polynomial
is the empty tuple and has degree ``-inf``.  :class:`BiPoly` is a polynomial
in ``x`` whose coefficients are :class:`IntPoly` values in a second variable
(``t`` or ``s``).

Real roots are handled with Sturm chains built from fraction-free remainder
sequences, so every answer is exact.  Rational numbers are
:class:`fractions.Fraction`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence, Union

from .errors import BothZero, DegreeTooHigh, InexactDivision, ZeroPolynomial

__all__ = [
    "IntPoly",
    "BiPoly",
    "RootIsolation",
    "NEG_INF_DEGREE",
    "reverse_coeffs",
    "derivative",
    "bipoly_dx",
    "prem",
    "exact_div",
    "poly_gcd",
    "squarefree_part",
    "squarefree_decomposition",
    "sturm_chain",
    "sign_variations",
    "count_real_roots_in",
    "count_distinct_real_roots",
    "isolate_real_roots",
]

NEG_INF_DEGREE = -math.inf

Number = Union[int, Fraction]


def _sign(v) -> int:
    return (v > 0) - (v < 0)


class IntPoly:
    """Univariate polynomial with arbitrary-precision integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[int, ...] = tuple(c)

    @classmethod
    def constant(cls, c: int) -> "IntPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "IntPoly":
        return cls([0] * degree + [coeff])

    # -- basic structure ---------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF_DEGREE

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int) -> int:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, IntPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == IntPoly((other,)).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    # -- ring operations ---------------------------------------------------

    def __neg__(self) -> "IntPoly":
        return IntPoly(-c for c in self.coeffs)

    def __add__(self, other) -> "IntPoly":
        if isinstance(other, int):
            other = IntPoly((other,))
        if not isinstance(other, IntPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    __radd__ = __add__

    def __sub__(self, other) -> "IntPoly":
        if isinstance(other, int):
            other = IntPoly((other,))
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "IntPoly":
        return (-self) + other

    def __mul__(self, other) -> "IntPoly":
        if isinstance(other, int):
            return IntPoly(c * other for c in self.coeffs) if other else IntPoly()
        if not isinstance(other, IntPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntPoly":
        if k < 0:
            raise ValueError("negative exponent")
        result = IntPoly((1,))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> "IntPoly":
        """Multiply by ``t**k``."""
        if not self.coeffs:
            return self
        return IntPoly((0,) * k + self.coeffs)

    # -- evaluation --------------------------------------------------------

    def __call__(self, x: Number) -> Number:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        if isinstance(x, Fraction):
            return Fraction(acc)
        return acc

    def sign_at(self, x: Number) -> int:
        """Sign of the value at a rational point, using integer arithmetic only."""
        if isinstance(x, int):
            return _sign(self(x))
        num, den = x.numerator, x.denominator
        # den > 0, so den**deg * p(num/den) has the same sign as p(x)
        acc = 0
        pw = 1
        for c in reversed(self.coeffs):
            acc = acc * num + c * pw
            pw *= den
        return _sign(acc)

    def sign_at_infinity(self, negative: bool = False) -> int:
        if not self.coeffs:
            return 0
        s = _sign(self.coeffs[-1])
        if negative and (len(self.coeffs) - 1) % 2:
            s = -s
        return s

    # -- misc --------------------------------------------------------------

    def content(self) -> int:
        return reduce(math.gcd, self.coeffs, 0)

    def primitive(self) -> "IntPoly":
        """Primitive part with positive leading coefficient."""
        if not self.coeffs:
            return self
        g = self.content()
        if self.coeffs[-1] < 0:
            g = -g
        return IntPoly(c // g for c in self.coeffs)

    def derivative(self) -> "IntPoly":
        return IntPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def to_json(self) -> dict:
        return {"coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj: dict) -> "IntPoly":
        return cls(int(c) for c in obj["coeffs"])

    def format(self, var: str = "t") -> str:
        """Lowest degree first, e.g. ``1 + 4t + t^2``."""
        if not self.coeffs:
            return "0"
        out = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                term = str(mag)
            else:
                mono = var if i == 1 else f"{var}^{i}"
                term = mono if mag == 1 else f"{mag}{mono}"
            if not out:
                out.append(term if c > 0 else f"-{term}")
            else:
                out.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(out)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"


def _as_poly(p) -> IntPoly:
    if isinstance(p, IntPoly):
        return p
    if isinstance(p, int):
        return IntPoly((p,))
    return IntPoly(p)


def reverse_coeffs(p: IntPoly, n: int) -> IntPoly:
    """Return ``t**n * p(1/t)``."""
    if p.degree > n:
        raise DegreeTooHigh(f"degree {p.degree} exceeds {n}")
    c = list(p.coeffs) + [0] * (n + 1 - len(p.coeffs))
    return IntPoly(reversed(c))


def derivative(p: IntPoly) -> IntPoly:
    return p.derivative()


# -- division and gcd ------------------------------------------------------


def prem(a: IntPoly, b: IntPoly) -> IntPoly:
    """Pseudo-remainder: ``lead(b)**(deg a - deg b + 1) * a`` reduced mod ``b``."""
    if not b:
        raise ZeroDivisionError("pseudo-division by zero polynomial")
    db = len(b.coeffs) - 1
    if len(a.coeffs) - 1 < db:
        return a
    lb = b.coeffs[-1]
    bc = b.coeffs
    r = list(a.coeffs)
    for top in range(len(r) - 1, db - 1, -1):
        q = r[top]
        r = [c * lb for c in r]
        if q:
            off = top - db
            for j in range(db + 1):
                r[off + j] -= q * bc[j]
        r.pop()
    return IntPoly(r)


def exact_div(a: IntPoly, b: IntPoly) -> IntPoly:
    """Quotient ``a / b`` over the integers; raises if anything is left over."""
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    if not a:
        return IntPoly()
    db = len(b.coeffs) - 1
    da = len(a.coeffs) - 1
    if da < db:
        raise InexactDivision("dividend degree below divisor degree")
    lb = b.coeffs[-1]
    bc = b.coeffs
    r = list(a.coeffs)
    q = [0] * (da - db + 1)
    for top in range(da, db - 1, -1):
        c = r[top]
        if c:
            qc, rem = divmod(c, lb)
            if rem:
                raise InexactDivision("non-integral quotient coefficient")
            q[top - db] = qc
            off = top - db
            for j in range(db + 1):
                r[off + j] -= qc * bc[j]
    if any(r):
        raise InexactDivision("nonzero remainder")
    return IntPoly(q)


def poly_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Primitive gcd with positive leading coefficient (subresultant PRS)."""
    a, b = _as_poly(a), _as_poly(b)
    if not a and not b:
        raise BothZero("gcd of two zero polynomials")
    if not b:
        return a.primitive()
    if not a:
        return b.primitive()
    if a.degree < b.degree:
        a, b = b, a
    a, b = a.primitive(), b.primitive()
    g = h = 1
    while True:
        delta = a.degree - b.degree
        r = prem(a, b)
        if not r:
            return b.primitive()
        if r.degree == 0:
            return IntPoly((1,))
        divisor = g * h**delta
        a, b = b, IntPoly(c // divisor for c in r.coeffs)
        g = a.lead
        if delta:
            h = g**delta // h ** (delta - 1)


def squarefree_part(p: IntPoly) -> IntPoly:
    """``p / gcd(p, p')``, primitive with positive leading coefficient."""
    if not p:
        raise ZeroPolynomial("squarefree part of the zero polynomial")
    if p.degree == 0:
        return IntPoly((1,))
    g = poly_gcd(p, p.derivative())
    return exact_div(p.primitive(), g).primitive()


def squarefree_decomposition(p: IntPoly) -> list[IntPoly]:
    """Yun's algorithm: returns ``[a_1, a_2, ...]`` with ``p ~ prod a_i**i``.

    Each ``a_i`` is squarefree, primitive and the ``a_i`` are pairwise coprime;
    ``a_i`` is the constant 1 when no root has multiplicity exactly ``i``.
    """
    if not p:
        raise ZeroPolynomial("squarefree decomposition of the zero polynomial")
    a = p.primitive()
    if a.degree == 0:
        return []
    b = a.derivative()
    c = poly_gcd(a, b)
    if c.degree == 0:
        return [a]
    w = exact_div(a, c)
    y = exact_div(b, c)
    z = y - w.derivative()
    factors = []
    while w.degree > 0:
        g = poly_gcd(w, z) if z else w.primitive()
        factors.append(g)
        w = exact_div(w, g)
        y = exact_div(z, g)
        z = y - w.derivative()
    return factors


# -- Sturm chains -----------------------------------------------------------


def sturm_chain(p: IntPoly) -> list[IntPoly]:
    """Sturm chain ``p, p', -rem, ...`` with every term scaled by a positive constant.

    Built as a signed primitive remainder sequence.  When ``p`` is not
    squarefree the last term is a gcd of ``p`` and ``p'``.
    """
    if not p:
        raise ZeroPolynomial("Sturm chain of the zero polynomial")
    p0 = _positive_primitive(p)
    chain = [p0]
    p1 = _positive_primitive(p.derivative())
    if not p1:
        return chain
    chain.append(p1)
    while p1.degree > 0:
        delta = p0.degree - p1.degree
        r = prem(p0, p1)
        if not r:
            break
        # prem = lead^(delta+1) * rem, and the chain wants a positive multiple of -rem
        if p1.lead > 0 or (delta + 1) % 2 == 0:
            r = -r
        nxt = _positive_primitive(r)
        chain.append(nxt)
        p0, p1 = p1, nxt
    return chain


def _positive_primitive(p: IntPoly) -> IntPoly:
    """Divide by the (positive) content, keeping the sign pattern."""
    if not p:
        return p
    g = p.content()
    return IntPoly(c // g for c in p.coeffs) if g != 1 else p


def sign_variations(chain: Sequence[IntPoly], x: Number | None, negative_infinity: bool = False) -> int:
    """Sign changes of the chain at ``x`` (``None`` means an infinity)."""
    if x is None:
        signs = [q.sign_at_infinity(negative_infinity) for q in chain]
    else:
        signs = [q.sign_at(x) for q in chain]
    count = 0
    prev = 0
    for s in signs:
        if s == 0:
            continue
        if prev and s != prev:
            count += 1
        prev = s
    return count


def _variations(chain, x, side):
    # side = -1 for the lower bound, +1 for the upper; None is the matching infinity
    if x is None:
        return sign_variations(chain, None, negative_infinity=side < 0)
    return sign_variations(chain, x)


def count_real_roots_in(p: IntPoly, lo: Number | None = None, hi: Number | None = None) -> int:
    """Number of distinct real roots in the half-open interval ``(lo, hi]``.

    ``None`` stands for ``-inf`` (``lo``) or ``+inf`` (``hi``).
    """
    if not p:
        raise ZeroPolynomial("root count of the zero polynomial")
    if lo is not None and hi is not None and not lo < hi:
        raise ValueError("need lo < hi")
    chain = sturm_chain(squarefree_part(p))
    return _variations(chain, lo, -1) - _variations(chain, hi, +1)


def count_distinct_real_roots(p: IntPoly) -> tuple[int, int]:
    """``(distinct real roots, degree of the squarefree part)`` from one Sturm chain."""
    if not p:
        raise ZeroPolynomial("root count of the zero polynomial")
    if p.degree == 0:
        return 0, 0
    chain = sturm_chain(p)
    real = sign_variations(chain, None, True) - sign_variations(chain, None, False)
    g = chain[-1]
    # a nonconstant final term is gcd(p, p'); otherwise p is squarefree
    sqf_degree = p.degree - (g.degree if g.degree > 0 else 0)
    return real, sqf_degree


# -- isolation --------------------------------------------------------------


@dataclass
class RootIsolation:
    """Disjoint isolating data for the distinct real roots of a polynomial.

    ``intervals`` holds ``(lo, hi, multiplicity)`` where the open interval
    ``(lo, hi)`` contains exactly one root; ``exact_points`` holds rational
    roots found exactly as ``(value, multiplicity)``.
    """

    intervals: list[tuple[Fraction, Fraction, int]]
    exact_points: list[tuple[Fraction, int]]
    _sqf: IntPoly = field(repr=False, default=None)
    _chain: list = field(repr=False, default=None)
    _factors: list = field(repr=False, default=None)

    @property
    def real_root_count(self) -> int:
        """Real roots counted with multiplicity."""
        return sum(m for *_, m in self.intervals) + sum(m for _, m in self.exact_points)

    @property
    def distinct_count(self) -> int:
        return len(self.intervals) + len(self.exact_points)

    def items(self) -> list[tuple[str, Fraction, Fraction, int]]:
        """All roots in increasing order as ``(kind, lo, hi, multiplicity)``."""
        rows = [("interval", lo, hi, m) for lo, hi, m in self.intervals]
        rows += [("exact", v, v, m) for v, m in self.exact_points]
        rows.sort(key=lambda r: (r[1], r[0] == "interval"))
        return rows

    def approximations(self) -> list[float]:
        """Midpoints repeated by multiplicity, increasing."""
        out = []
        for _, lo, hi, m in self.items():
            out.extend([float((lo + hi) / 2)] * m)
        return out

    def refine_to(self, width: Number) -> "RootIsolation":
        """Bisect every interval until it is narrower than ``width``."""
        width = Fraction(width)
        intervals = []
        exact = list(self.exact_points)
        for lo, hi, m in self.intervals:
            while hi - lo >= width:
                mid = (lo + hi) / 2
                if self._sqf.sign_at(mid) == 0:
                    exact.append((mid, m))
                    break
                if self._sqf.sign_at(lo) * self._sqf.sign_at(mid) < 0:
                    hi = mid
                else:
                    lo = mid
            else:
                intervals.append((lo, hi, m))
        exact.sort()
        return RootIsolation(intervals, exact, self._sqf, self._chain, self._factors)


def _cauchy_bound_pow2(p: IntPoly) -> int:
    lead = abs(p.lead)
    m = max((abs(c) for c in p.coeffs[:-1]), default=0)
    bound = 1 + Fraction(m, lead)
    k = 1
    while k <= bound:
        k *= 2
    return k


def _multiplicity(factors: list[IntPoly], lo: Fraction, hi: Fraction | None) -> int:
    for i, a in enumerate(factors, start=1):
        if a.degree <= 0:
            continue
        if hi is None:
            if a.sign_at(lo) == 0:
                return i
        elif a.sign_at(lo) * a.sign_at(hi) < 0:
            return i
    raise AssertionError("isolated root not found in squarefree decomposition")


def isolate_real_roots(p: IntPoly) -> RootIsolation:
    """Isolate every distinct real root of ``p`` and attach its multiplicity."""
    if not p:
        raise ZeroPolynomial("isolating roots of the zero polynomial")
    factors = squarefree_decomposition(p)
    sqf = squarefree_part(p)
    if sqf.degree <= 0:
        return RootIsolation([], [], sqf, [sqf], factors)
    chain = sturm_chain(sqf)
    bound = Fraction(_cauchy_bound_pow2(sqf))
    intervals: list[tuple[Fraction, Fraction, int]] = []
    exact: list[tuple[Fraction, int]] = []

    # zero is always a bisection point so the common root t = 0 comes out exact
    stack = [(Fraction(0), bound), (-bound, Fraction(0))]
    vcache: dict[Fraction, int] = {}

    def v(x):
        if x not in vcache:
            vcache[x] = sign_variations(chain, x)
        return vcache[x]

    found = []
    while stack:
        lo, hi = stack.pop()
        n = v(lo) - v(hi)
        if n == 0:
            continue
        if n == 1:
            if sqf.sign_at(hi) == 0:
                found.append(("exact", hi, None))
                continue
            # the left end may be a root already reported by the neighbouring piece
            while True:
                mid = (lo + hi) / 2
                if sqf.sign_at(mid) == 0:
                    found.append(("exact", mid, None))
                    break
                if sqf.sign_at(lo) != 0:
                    found.append(("interval", lo, hi))
                    break
                if v(mid) - v(hi) == 1:
                    lo = mid
                else:
                    hi = mid
            continue
        mid = (lo + hi) / 2
        # pop order keeps the output increasing
        stack.append((mid, hi))
        stack.append((lo, mid))

    for item in found:
        if item[0] == "exact":
            exact.append((item[1], _multiplicity(factors, item[1], None)))
        else:
            _, lo, hi = item
            intervals.append((lo, hi, _multiplicity(factors, lo, hi)))
    intervals.sort()
    exact.sort()
    return RootIsolation(intervals, exact, sqf, chain, factors)


# -- bivariate ---------------------------------------------------------------


class BiPoly:
    """Polynomial in ``x`` with :class:`IntPoly` coefficients (index = x-degree)."""

    __slots__ = ("x_coeffs",)

    def __init__(self, x_coeffs: Iterable = ()):
        c = [_as_poly(q) for q in x_coeffs]
        while c and not c[-1]:
            c.pop()
        self.x_coeffs: tuple[IntPoly, ...] = tuple(c)

    @classmethod
    def from_terms(cls, terms: dict[tuple[int, int], int]) -> "BiPoly":
        """Build from ``{(x_degree, t_degree): coefficient}``."""
        if not terms:
            return cls()
        xdeg = max(i for i, _ in terms)
        rows = [[0] * 1 for _ in range(xdeg + 1)]
        for (i, j), c in terms.items():
            row = rows[i]
            if len(row) <= j:
                row.extend([0] * (j + 1 - len(row)))
            row[j] += c
        return cls(IntPoly(r) for r in rows)

    @classmethod
    def x_power(cls, k: int, coeff: IntPoly | int = 1) -> "BiPoly":
        return cls([IntPoly()] * k + [_as_poly(coeff)])

    @property
    def x_degree(self):
        return len(self.x_coeffs) - 1 if self.x_coeffs else NEG_INF_DEGREE

    def __getitem__(self, i: int) -> IntPoly:
        if 0 <= i < len(self.x_coeffs):
            return self.x_coeffs[i]
        return IntPoly()

    def __len__(self) -> int:
        return len(self.x_coeffs)

    def __bool__(self) -> bool:
        return bool(self.x_coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, BiPoly):
            return self.x_coeffs == other.x_coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.x_coeffs)

    def __neg__(self) -> "BiPoly":
        return BiPoly(-q for q in self.x_coeffs)

    def __add__(self, other) -> "BiPoly":
        if isinstance(other, (int, IntPoly)):
            other = BiPoly([other])
        if not isinstance(other, BiPoly):
            return NotImplemented
        n = max(len(self), len(other))
        return BiPoly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __sub__(self, other) -> "BiPoly":
        if isinstance(other, (int, IntPoly)):
            other = BiPoly([other])
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "BiPoly":
        return (-self) + other

    def __mul__(self, other) -> "BiPoly":
        if isinstance(other, (int, IntPoly)):
            return BiPoly(q * other for q in self.x_coeffs)
        if not isinstance(other, BiPoly):
            return NotImplemented
        if not self or not other:
            return BiPoly()
        out = [IntPoly()] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.x_coeffs):
            if not a:
                continue
            for j, b in enumerate(other.x_coeffs):
                if b:
                    out[i + j] = out[i + j] + a * b
        return BiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "BiPoly":
        result = BiPoly([1])
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift_x(self, k: int) -> "BiPoly":
        if not self:
            return self
        return BiPoly([IntPoly()] * k + list(self.x_coeffs))

    def dx(self) -> "BiPoly":
        return BiPoly(q * i for i, q in enumerate(self.x_coeffs) if i)

    def subs(self, value: int) -> "BiPoly":
        """Specialize the inner variable to an integer; result has constant coefficients."""
        return BiPoly(IntPoly((q(value),)) for q in self.x_coeffs)

    def at_x(self, x: Number) -> IntPoly:
        """Evaluate at an integer ``x``, returning a polynomial in the inner variable."""
        acc = IntPoly()
        for q in reversed(self.x_coeffs):
            acc = acc * x + q
        return acc

    def to_x_poly(self) -> IntPoly:
        """View a BiPoly with constant coefficients as a polynomial in ``x``."""
        vals = []
        for q in self.x_coeffs:
            if q.degree > 0:
                raise ValueError("coefficients are not constant")
            vals.append(q[0])
        return IntPoly(vals)

    def exact_div(self, divisor: "BiPoly") -> "BiPoly":
        """Exact quotient by a divisor whose leading x-coefficient is the constant ±1."""
        if not divisor:
            raise ZeroDivisionError("division by zero BiPoly")
        lead = divisor.x_coeffs[-1]
        if lead not in (IntPoly((1,)), IntPoly((-1,))):
            raise ValueError("divisor leading coefficient must be a unit")
        unit = lead[0]
        db = len(divisor) - 1
        r = list(self.x_coeffs)
        if len(r) - 1 < db:
            if any(r):
                raise InexactDivision("dividend degree below divisor degree")
            return BiPoly()
        q = [IntPoly()] * (len(r) - db)
        for top in range(len(r) - 1, db - 1, -1):
            c = r[top]
            if c:
                qc = c * unit
                q[top - db] = qc
                for j, b in enumerate(divisor.x_coeffs):
                    if b:
                        r[top - db + j] = r[top - db + j] - qc * b
        if any(r):
            raise InexactDivision("nonzero remainder in BiPoly division")
        return BiPoly(q)

    def terms(self):
        """Yield ``(x_degree, t_degree, coefficient)`` for nonzero terms."""
        for i, q in enumerate(self.x_coeffs):
            for j, c in enumerate(q.coeffs):
                if c:
                    yield i, j, c

    def to_json(self) -> dict:
        return {"x_coeffs": [q.to_json() for q in self.x_coeffs]}

    @classmethod
    def from_json(cls, obj: dict) -> "BiPoly":
        return cls(IntPoly.from_json(q) for q in obj["x_coeffs"])

    def format(self, var: str = "t", xvar: str = "x") -> str:
        """Monomials by increasing x-degree, e.g. ``x + 3tx^3 + (3t^2 + t^3)x^5``."""
        if not self:
            return "0"
        parts = []
        for i, q in enumerate(self.x_coeffs):
            if not q:
                continue
            xm = "" if i == 0 else (xvar if i == 1 else f"{xvar}^{i}")
            nz = [c for c in q.coeffs if c]
            if i == 0:
                body = q.format(var)
                parts.append(body if len(nz) == 1 else f"({body})")
                continue
            if len(nz) == 1:
                j = next(k for k, c in enumerate(q.coeffs) if c)
                c = q.coeffs[j]
                mono = "" if j == 0 else (var if j == 1 else f"{var}^{j}")
                mag = "" if abs(c) == 1 else str(abs(c))
                parts.append(("-" if c < 0 else "") + mag + mono + xm)
            else:
                parts.append(f"({q.format(var)}){xm}")
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"BiPoly({[list(q.coeffs) for q in self.x_coeffs]})"


def bipoly_dx(b: BiPoly) -> BiPoly:
    return b.dx()
