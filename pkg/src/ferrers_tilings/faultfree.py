"""Fault-free words and the fault-free generating polynomial ``B(x, t)``.

A fault-free word is either the single letter ``INF`` or a word that starts
with a row number, ends with ``l`` copies of ``INF`` and has no other run of
``l`` consecutive ``INF``.  Every anchor word splits uniquely into fault-free
pieces, which is why ``B`` drives all the generating functions in
:mod:`ferrers_tilings.series`.

Closed forms for hooks, rigid tiles, fat-L tiles and two-column tiles live
here too; each is checked against enumeration in the test suite.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb

from .anchorwords import INF, AnchorWord, _fits, _letters
from .errors import NotAHook, NotRigid
from .exactpoly import BiPoly, IntPoly
from .shapes import TilingParams, is_rigid, max_faultfree_width

__all__ = [
    "enumerate_faultfree_words",
    "faultfree_gf",
    "faultfree_gf_weighted",
    "hook_gf",
    "rigid_gf",
    "fatL_gf",
    "fatL_shape",
    "two_column_gf",
    "two_column_B_sequence",
    "row_refined_hook_gf",
    "row_refined_rigid_gf",
]

T = IntPoly((0, 1))
ONE = IntPoly((1,))


def _binom(n: int, k: int) -> int:
    if k < 0 or n < 0 or n < k:
        return 0
    return comb(n, k)


def _walk_faultfree(params: TilingParams):
    mu = params.mu
    ell = params.ell
    letters = _letters(params.d)
    limit = max_faultfree_width(params)
    word: list = []

    def rec(inf_run: int):
        if inf_run == ell:
            yield word
            return
        if len(word) >= limit:
            return
        for a in letters:
            if _fits(word, a, mu):
                word.append(a)
                yield from rec(inf_run + 1 if a == INF else 0)
                word.pop()

    yield [INF]
    # a fault-free word of positive weight starts with a row number
    for first in range(1, params.d + 1):
        word.append(first)
        yield from rec(0)
        word.pop()


def enumerate_faultfree_words(params: TilingParams) -> list[AnchorWord]:
    """All fault-free words, ``(INF)`` first and the rest lexicographically."""
    return [AnchorWord(tuple(w)) for w in _walk_faultfree(params)]


@lru_cache(maxsize=256)
def faultfree_gf(params: TilingParams) -> BiPoly:
    """``B(x, t)``: sum of ``x**width * t**bigtiles`` over fault-free words."""
    terms: dict[tuple[int, int], int] = {}
    for w in _walk_faultfree(params):
        key = (len(w), sum(1 for a in w if a != INF))
        terms[key] = terms.get(key, 0) + 1
    return BiPoly.from_terms(terms)


@lru_cache(maxsize=256)
def faultfree_gf_weighted(params: TilingParams, row_mark: int) -> BiPoly:
    """Fault-free GF where only tiles anchored in ``row_mark`` carry the variable ``s``."""
    if not 1 <= row_mark <= params.d:
        raise ValueError(f"row_mark must lie in 1..{params.d}")
    terms: dict[tuple[int, int], int] = {}
    for w in _walk_faultfree(params):
        key = (len(w), sum(1 for a in w if a == row_mark))
        terms[key] = terms.get(key, 0) + 1
    return BiPoly.from_terms(terms)


def _x_run(lo: int, hi: int) -> BiPoly:
    """``x**lo + ... + x**hi``."""
    return BiPoly([0] * lo + [1] * (hi - lo + 1))


def hook_gf(params: TilingParams) -> BiPoly:
    """Closed form for ``mu = (h, 1, ..., 1)``, evaluated with an exact division."""
    if not params.shape.is_hook:
        raise NotAHook(f"{params.shape} is not a hook")
    ell, d = params.ell, params.d
    s = _x_run(1, ell)
    numerator = (BiPoly([1]) + s * T) ** d - BiPoly([1])
    return BiPoly.x_power(1) + numerator.exact_div(s).shift_x(ell + 1)


def rigid_gf(params: TilingParams) -> BiPoly:
    """``x (1 + t x**l)**d`` for rigid tiles."""
    if not is_rigid(params):
        raise NotRigid(f"{params} is not rigid")
    step = BiPoly([1]) + BiPoly.x_power(params.ell, T)
    return (step ** params.d).shift_x(1)


def fatL_shape(d: int, r: int, s: int) -> tuple[int, ...]:
    """``r`` columns of height ``d`` followed by ``s`` columns of height 1."""
    return (d,) * r + (1,) * s


def fatL_gf(d: int, r: int, s: int) -> BiPoly:
    """Fault-free GF of the fat-L tile, via exact division by ``1 + x + ... + x**(s-1)``."""
    if min(d, r, s) < 1:
        raise ValueError("d, r, s must be positive")
    u = _x_run(0, s - 1)
    inner = BiPoly([1]) + (u * T).shift_x(r)
    numerator = inner ** d - BiPoly([1])
    return BiPoly.x_power(1) + numerator.exact_div(u).shift_x(s)


def two_column_gf(k: int, d: int) -> BiPoly:
    """``x + sum_m C(d+k+m-km-1, m) t^m x^(m+1)`` for ``mu = (k, k)``."""
    if k < 1 or d < 1:
        raise ValueError("k and d must be positive")
    terms = {(1, 0): 1}
    m = 1
    while True:
        c = _binom(d + k + m - k * m - 1, m)
        if c == 0:
            break
        terms[(m + 1, m)] = c
        m += 1
    return BiPoly.from_terms(terms)


def two_column_B_sequence(k: int, d_max: int) -> list[IntPoly]:
    """``[B_0, B_1, ..., B_dmax]`` with ``B_d = B_(d-1) + t B_(d-k)``; ``B_d = 1 + d t`` for ``d <= k``."""
    if k < 1 or d_max < 1:
        raise ValueError("k and d_max must be positive")
    seq = [IntPoly((1, d)) for d in range(min(k, d_max) + 1)]
    for d in range(k + 1, d_max + 1):
        seq.append(seq[d - 1] + T * seq[d - k])
    return seq


def _marked_elementary(d: int, k: int) -> IntPoly:
    # e_k(s, 1, ..., 1) with d variables
    return IntPoly((_binom(d - 1, k), _binom(d - 1, k - 1)))


def row_refined_hook_gf(params: TilingParams) -> BiPoly:
    """Hook fault-free GF with one anchor row marked by ``s`` (coefficients in ``s``)."""
    if not params.shape.is_hook:
        raise NotAHook(f"{params.shape} is not a hook")
    ell, d = params.ell, params.d
    s_run = _x_run(1, ell)
    out = BiPoly.x_power(1)
    for k in range(1, d + 1):
        out = out + (s_run ** (k - 1)).shift_x(ell + 1) * _marked_elementary(d, k)
    return out


def row_refined_rigid_gf(params: TilingParams) -> BiPoly:
    """``x (1 + x**l)**(d-1) (1 + s x**l)`` for rigid tiles."""
    if not is_rigid(params):
        raise NotRigid(f"{params} is not rigid")
    ell = params.ell
    plain = BiPoly([1]) + BiPoly.x_power(ell)
    marked = BiPoly([1]) + BiPoly.x_power(ell, T)
    return (plain ** (params.d - 1) * marked).shift_x(1)
