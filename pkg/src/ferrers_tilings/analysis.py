"""Exact decision procedures on integer polynomials and coefficient streams.

Real-rootedness is decided with a Sturm chain, the interleaving relation by
isolating the roots of ``f * g`` and matching the merged root multiset
against the required alternation pattern.  Nothing here uses floating point.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Callable, Iterable, Optional, Sequence

from .errors import NegativeCoefficients, NotRealRooted, ZeroPolynomial
from .exactpoly import (
    BiPoly,
    IntPoly,
    count_distinct_real_roots,
    count_real_roots_in,
    isolate_real_roots,
    squarefree_decomposition,
)
from .faultfree import fatL_gf
from .series import RationalSeries, iter_coeffs

__all__ = [
    "is_real_rooted",
    "roots_all_nonpositive",
    "interleaves",
    "is_interlacing_sequence",
    "is_log_concave",
    "is_unimodal",
    "has_internal_zeros",
    "first_failure",
    "first_realrooted_failure",
    "first_interlacing_failure",
    "fatL_series",
    "fatL_cell",
    "fatL_failure_scan",
    "PROPERTIES",
]


def is_real_rooted(p: IntPoly) -> bool:
    """True when every complex root of ``p`` is real; constants count as real-rooted."""
    if not p:
        raise ZeroPolynomial("real-rootedness of the zero polynomial")
    if p.degree <= 1:
        return True
    real, distinct = count_distinct_real_roots(p)
    return real == distinct


def roots_all_nonpositive(p: IntPoly) -> bool:
    """True when the real-rooted ``p`` has no positive root (0 is allowed)."""
    if not is_real_rooted(p):
        raise NotRealRooted(f"{p} is not real-rooted")
    if p.degree <= 0:
        return True
    return count_real_roots_in(p, 0, None) == 0


def _multiplicity_in(factors: list[IntPoly], lo: Fraction, hi: Fraction) -> int:
    """Multiplicity of the unique root of ``prod factors`` candidates in ``[lo, hi]``.

    ``lo == hi`` means an exactly known root.  For an isolating interval the
    Yun factors are squarefree, so a root inside shows up as a sign change.
    """
    for i, a in enumerate(factors, start=1):
        if a.degree <= 0:
            continue
        if lo == hi:
            if a.sign_at(lo) == 0:
                return i
        elif a.sign_at(lo) * a.sign_at(hi) < 0:
            return i
    return 0


def _pattern(deg_f: int, deg_g: int) -> Optional[str]:
    # ascending order of merged roots; None when the degrees rule out f << g
    if deg_g == deg_f + 1:
        return "g" + "fg" * deg_f
    if deg_g == deg_f:
        return "fg" * deg_f
    return None


def interleaves(f: IntPoly, g: IntPoly) -> bool:
    """The relation ``f << g``: ``f`` interlaces ``g`` or alternates left of it.

    Both polynomials must be real-rooted with positive leading coefficients.
    Zero polynomials follow the conventions ``0 << h`` and ``h << 0``.
    """
    if not f or not g:
        return True
    if f.lead < 0 or g.lead < 0:
        return False
    pattern = _pattern(f.degree, g.degree)
    if pattern is None:
        return False
    if not pattern:
        return True
    if not (is_real_rooted(f) and is_real_rooted(g)):
        return False

    iso = isolate_real_roots(f * g)
    f_factors = squarefree_decomposition(f)
    g_factors = squarefree_decomposition(g)
    pos = 0
    for _, lo, hi, _ in iso.items():
        mf = _multiplicity_in(f_factors, lo, hi)
        mg = _multiplicity_in(g_factors, lo, hi)
        # equal roots may be listed in either order, so a tie only needs the counts to fit
        window = pattern[pos:pos + mf + mg]
        if window.count("f") != mf or window.count("g") != mg:
            return False
        pos += mf + mg
    return pos == len(pattern)


def is_interlacing_sequence(polys: Sequence[IntPoly]) -> bool:
    """``polys[i] << polys[j]`` for all ``i < j``, each entry real-rooted."""
    for p in polys:
        if p and not is_real_rooted(p):
            return False
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            if not interleaves(polys[i], polys[j]):
                return False
    return True


def _check_nonnegative(p: IntPoly) -> tuple[int, ...]:
    if any(c < 0 for c in p.coeffs):
        raise NegativeCoefficients(f"{p} has a negative coefficient")
    return p.coeffs


def is_log_concave(p: IntPoly) -> bool:
    a = _check_nonnegative(p)
    return all(a[i] * a[i] >= a[i - 1] * a[i + 1] for i in range(1, len(a) - 1))


def is_unimodal(p: IntPoly) -> bool:
    a = _check_nonnegative(p)
    i = 1
    while i < len(a) and a[i - 1] <= a[i]:
        i += 1
    while i < len(a) and a[i - 1] >= a[i]:
        i += 1
    return i >= len(a)


def has_internal_zeros(p: IntPoly) -> bool:
    a = _check_nonnegative(p)
    nonzero = [i for i, c in enumerate(a) if c]
    return bool(nonzero) and len(nonzero) != nonzero[-1] - nonzero[0] + 1


def _holds(pred: Callable[[IntPoly], bool], p: IntPoly) -> bool:
    # zero coefficients (no tilings of that width) never count as failures
    return not p or pred(p)


PROPERTIES: dict[str, Callable[[IntPoly], bool]] = {
    "realroots": is_real_rooted,
    "logconcave": is_log_concave,
    "unimodal": is_unimodal,
}


def first_failure(series: RationalSeries, n_max: int, pred: Callable[[IntPoly], bool],
                  start: int = 0) -> Optional[int]:
    """Smallest ``n`` in ``start..n_max`` whose coefficient violates ``pred``."""
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    for n, c in enumerate(iter_coeffs(series)):
        if n > n_max:
            return None
        if n >= start and not _holds(pred, c):
            return n
    return None


def first_realrooted_failure(series: RationalSeries, n_max: int, start: int = 0) -> Optional[int]:
    return first_failure(series, n_max, is_real_rooted, start)


INTERLACING_STEPS = ("degree", "all")


def first_interlacing_failure(series: RationalSeries, n_max: int, start: int = 1,
                              steps: str = "degree") -> Optional[int]:
    """Smallest ``n`` with ``not (c_(n-1) << c_n)``.

    With ``steps="degree"`` only the steps where the degree goes up by one are
    tested, i.e. the question is whether ``c_(n-1)`` interlaces ``c_n``.
    ``steps="all"`` also demands that equal-degree neighbours alternate, which
    is strictly stronger: for ``mu=(2,2,2), d=3`` it first fails at 25 where
    the degree-step test first fails at 32.
    """
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    if steps not in INTERLACING_STEPS:
        raise ValueError(f"steps must be one of {INTERLACING_STEPS}")
    prev = None
    for n, c in enumerate(iter_coeffs(series)):
        if n > n_max:
            return None
        if n >= max(start, 1):
            tested = steps == "all" or (prev and c and c.degree == prev.degree + 1)
            if tested and not interleaves(prev, c):
                return n
        prev = c
    return None


# -- fat-L search -----------------------------------------------------------


def fatL_series(d: int, r: int, s: int) -> RationalSeries:
    return RationalSeries(BiPoly([1]), fatL_gf(d, r, s), f"fatL({d},{r},{s})")


def fatL_cell(d: int, r: int, s_max: int, n_max: int) -> Optional[tuple[int, int]]:
    """Smallest ``s <= s_max`` with a non-real-rooted tiling polynomial for some ``n <= n_max``."""
    for s in range(1, s_max + 1):
        n = first_realrooted_failure(fatL_series(d, r, s), n_max)
        if n is not None:
            return s, n
    return None


def _cell_job(args):
    d, r, s_max, n_max = args
    return (d, r), fatL_cell(d, r, s_max, n_max)


def fatL_failure_scan(d_range: Iterable[int], r_range: Iterable[int], s_max: int, n_max: int,
                      workers: int | None = 1) -> dict[tuple[int, int], Optional[tuple[int, int]]]:
    """First failures over a box of fat-L tiles, keyed by ``(d, r)`` in sorted order.

    ``workers`` > 1 fans the cells out over processes; ``None`` uses every CPU.
    The result does not depend on the worker count.
    """
    if s_max < 1 or n_max < 1:
        raise ValueError("s_max and n_max must be at least 1")
    cells = sorted((d, r) for d in d_range for r in r_range)
    if any(d < 1 or r < 1 for d, r in cells):
        raise ValueError("d and r must be positive")
    jobs = [(d, r, s_max, n_max) for d, r in cells]
    if workers is None:
        workers = os.cpu_count() or 1
    if workers <= 1 or len(jobs) <= 1:
        results = map(_cell_job, jobs)
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_cell_job, jobs))
    return dict(results)
