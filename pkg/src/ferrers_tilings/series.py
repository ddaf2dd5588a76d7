"""Rational generating series ``N / (1 - M)`` and their coefficient streams.

Every polynomial family in this package (tilings, fault lines, dense
tilings, cylindric tilings, row-marked tilings) is a rational function of
``x`` whose numerator and denominator come from the fault-free polynomial.
Coefficients are pulled out with the linear recursion

    c_n = [x^n] N + sum_{j>=1} [x^j] M * c_(n-j)

with ``c_n = 0`` for ``n < 0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterator

from .errors import NotRigid
from .exactpoly import BiPoly, IntPoly, bipoly_dx
from .faultfree import faultfree_gf, faultfree_gf_weighted
from .shapes import TilingParams, is_rigid

__all__ = [
    "RationalSeries",
    "series_coeffs",
    "iter_coeffs",
    "tiling_series",
    "faultline_series",
    "dense_series",
    "dense_faultline_series",
    "cylindric_series",
    "row_refined_series",
    "rigid_coefficient_formula",
    "VARIANTS",
    "variant_series",
    "variant_offset",
    "variant_symbol",
]

T = IntPoly((0, 1))


@dataclass(frozen=True)
class RationalSeries:
    numer: BiPoly
    tail: BiPoly
    label: str = ""

    def __post_init__(self):
        if self.tail and self.tail[0]:
            raise ValueError("tail must have zero constant term in x")


def iter_coeffs(rs: RationalSeries) -> Iterator[IntPoly]:
    """Infinite stream of coefficients ``c_0, c_1, ...``."""
    numer = rs.numer
    steps = [(j, q) for j, q in enumerate(rs.tail.x_coeffs) if j and q]
    seen: list[IntPoly] = []
    n = 0
    while True:
        c = numer[n]
        for j, q in steps:
            if j > n:
                break
            prev = seen[n - j]
            if prev:
                c = c + q * prev
        seen.append(c)
        yield c
        n += 1


def series_coeffs(rs: RationalSeries, n_max: int) -> list[IntPoly]:
    """Exact coefficients ``c_0 .. c_nmax``."""
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    out = []
    for n, c in enumerate(iter_coeffs(rs)):
        out.append(c)
        if n == n_max:
            break
    return out


def tiling_series(params: TilingParams) -> RationalSeries:
    return RationalSeries(BiPoly([1]), faultfree_gf(params), "tilings")


def faultline_series(params: TilingParams) -> RationalSeries:
    """``1 + B(x,1) / (1 - t B(x,1))``; the coefficient at ``n >= 1`` counts fault lines."""
    b1 = faultfree_gf(params).subs(1)
    numer = BiPoly([1]) + b1 * (IntPoly((1,)) - T)
    return RationalSeries(numer, b1 * T, "faultlines")


def dense_series(params: TilingParams) -> RationalSeries:
    """``1 / (1 + x - B(x,t))``: tilings with no column free of big tiles."""
    tail = faultfree_gf(params) - BiPoly.x_power(1)
    return RationalSeries(BiPoly([1]), tail, "dense")


def dense_faultline_series(params: TilingParams) -> RationalSeries:
    """``1 / (1 - s (B(x,1) - x))``: dense tilings weighted by ``s**(faultlines + 1)``."""
    b1 = faultfree_gf(params).subs(1)
    tail = (b1 - BiPoly.x_power(1)) * T
    return RationalSeries(BiPoly([1]), tail, "dense-faults")


def cylindric_series(params: TilingParams) -> RationalSeries:
    """``1 + x B'(x,t) / (1 - B(x,t))``."""
    b = faultfree_gf(params)
    numer = BiPoly([1]) - b + bipoly_dx(b).shift_x(1)
    return RationalSeries(numer, b, "cylindric")


def row_refined_series(params: TilingParams, row_mark: int) -> RationalSeries:
    """Tilings with only the tiles anchored in ``row_mark`` weighted."""
    b = faultfree_gf_weighted(params, row_mark)
    return RationalSeries(BiPoly([1]), b, f"row{row_mark}")


def _binom(n: int, k: int) -> int:
    if k < 0 or n < 0 or n < k:
        return 0
    return comb(n, k)


def rigid_coefficient_formula(params: TilingParams, n: int) -> IntPoly:
    """``sum_j C(d(n - j l), j) t^j`` for rigid tiles."""
    if not is_rigid(params):
        raise NotRigid(f"{params} is not rigid")
    if n < 0:
        raise ValueError("n must be nonnegative")
    d, ell = params.d, params.ell
    coeffs = []
    j = 0
    while n - j * ell >= 0:
        coeffs.append(_binom(d * (n - j * ell), j))
        j += 1
    return IntPoly(coeffs)


# variant name -> (builder, first index with a meaningful polynomial, symbol)
VARIANTS = {
    "tilings": (tiling_series, 0, "t"),
    "faultlines": (faultline_series, 0, "t"),
    "dense": (dense_series, 0, "t"),
    "dense-faults": (dense_faultline_series, 0, "s"),
    "cylindric": (cylindric_series, 1, "t"),
    "row1": (lambda p: row_refined_series(p, 1), 0, "s"),
    "rowd": (lambda p: row_refined_series(p, p.d), 0, "s"),
}


def _lookup(variant: str):
    try:
        return VARIANTS[variant]
    except KeyError:
        raise ValueError(f"unknown variant {variant!r}; choose from {', '.join(VARIANTS)}") from None


def variant_series(params: TilingParams, variant: str) -> RationalSeries:
    return _lookup(variant)[0](params)


def variant_offset(variant: str) -> int:
    return _lookup(variant)[1]


def variant_symbol(variant: str) -> str:
    return _lookup(variant)[2]
