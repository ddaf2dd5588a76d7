"""Anchor words: the column-by-column encoding of tilings.

A word has one letter per column: the row ``1..d`` of an anchor square in
that column, or ``INF`` when the column holds no anchor.  A letter ``a_i``
forces ``a_{i+k} >= a_i + mu_k`` for ``k = 1..l``, and a straight word must
end in ``l`` copies of ``INF``.  Enumeration here is deliberately brute force;
it is the reference every generating function is checked against.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from typing import Iterator

from .errors import EnumerationCapExceeded
from .exactpoly import IntPoly
from .shapes import TilingParams

__all__ = [
    "INF",
    "AnchorWord",
    "DEFAULT_ENUMERATION_CAP",
    "enumeration_cap",
    "enumerate_anchor_words",
    "tiling_poly_bruteforce",
    "anchor_word_count",
    "faultline_poly_bruteforce",
    "refined_last_letter_polys",
    "enumerate_cylindric_words",
    "cylindric_poly_bruteforce",
    "count_faultlines",
    "is_valid_word",
]

INF = math.inf

DEFAULT_ENUMERATION_CAP = 10**7
CAP_ENV = "FERRERS_ENUM_CAP"


def enumeration_cap() -> int:
    """Word-count cap, overridable through ``FERRERS_ENUM_CAP``."""
    raw = os.environ.get(CAP_ENV)
    return int(raw) if raw else DEFAULT_ENUMERATION_CAP


@dataclass(frozen=True)
class AnchorWord:
    letters: tuple

    @property
    def width(self) -> int:
        return len(self.letters)

    @property
    def bigtiles(self) -> int:
        return sum(1 for a in self.letters if a != INF)

    def tile_rows(self) -> list[int]:
        return [a for a in self.letters if a != INF]

    def __str__(self) -> str:
        return "".join("-" if a == INF else str(a) for a in self.letters)

    @classmethod
    def parse(cls, text: str) -> "AnchorWord":
        """Inverse of ``str`` for single-digit rows (``"-1-2-"``)."""
        return cls(tuple(INF if ch == "-" else int(ch) for ch in text))


def _letters(d: int) -> list:
    # lexicographic order with INF greatest
    return list(range(1, d + 1)) + [INF]


def _fits(word: list, letter, mu: tuple[int, ...]) -> bool:
    """Can ``letter`` be appended given the constraints from the last ``l`` letters?"""
    if letter == INF:
        return True
    j = len(word)
    for k in range(1, len(mu)):
        i = j - k
        if i < 0:
            break
        a = word[i]
        if a != INF and letter < a + mu[k]:
            return False
    return True


def is_valid_word(params: TilingParams, letters, cylindric: bool = False) -> bool:
    """Direct check of the anchor inequalities (modular when ``cylindric``)."""
    mu = params.mu
    n = len(letters)
    for i, a in enumerate(letters):
        if a == INF:
            continue
        if not (1 <= a <= params.d):
            return False
        for k in range(1, len(mu)):
            j = i + k
            if j >= n:
                if not cylindric:
                    break
                j %= n
            if letters[j] < a + mu[k]:
                return False
    if not cylindric and n:
        tail = letters[max(0, n - params.ell):]
        if any(a != INF for a in tail):
            return False
    return True


def _walk(params: TilingParams, n: int) -> Iterator[list]:
    """Depth-first generation of straight anchor words (yields a shared list)."""
    mu = params.mu
    ell = params.ell
    letters = _letters(params.d)
    word: list = []

    def rec():
        j = len(word)
        if j == n:
            yield word
            return
        # the final l positions are forced to INF
        choices = (INF,) if j >= n - ell else letters
        for a in choices:
            if _fits(word, a, mu):
                word.append(a)
                yield from rec()
                word.pop()

    yield from rec()


def enumerate_anchor_words(params: TilingParams, n: int) -> Iterator[AnchorWord]:
    """Every straight anchor word of length ``n``, lexicographically (INF last)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    for w in _walk(params, n):
        yield AnchorWord(tuple(w))


def tiling_poly_bruteforce(params: TilingParams, n: int, cap: int | None = None) -> IntPoly:
    """Sum of ``t**bigtiles`` over all anchor words of length ``n``."""
    cap = enumeration_cap() if cap is None else cap
    counts: dict[int, int] = {}
    total = 0
    for w in _walk(params, n):
        total += 1
        if total > cap:
            raise EnumerationCapExceeded(f"more than {cap} words for {params}, n={n}")
        k = sum(1 for a in w if a != INF)
        counts[k] = counts.get(k, 0) + 1
    return IntPoly(counts.get(k, 0) for k in range(max(counts) + 1))


def anchor_word_count(params: TilingParams, n: int, cap: int | None = None) -> int:
    return tiling_poly_bruteforce(params, n, cap)(1)


def count_faultlines(letters, ell: int) -> int:
    """Interior vertical lines crossed by no tile.

    The line after column ``j`` (1-based, ``1 <= j < n``) is crossed by a tile
    anchored in column ``i`` exactly when ``j - l < i <= j``.
    """
    n = len(letters)
    count = 0
    for j in range(1, n):
        window = letters[max(0, j - ell):j]
        if all(a == INF for a in window):
            count += 1
    return count


def faultline_poly_bruteforce(params: TilingParams, n: int, cap: int | None = None) -> IntPoly:
    """Sum of ``t**faultlines`` over anchor words of length ``n``."""
    cap = enumeration_cap() if cap is None else cap
    counts: dict[int, int] = {}
    total = 0
    for w in _walk(params, n):
        total += 1
        if total > cap:
            raise EnumerationCapExceeded(f"more than {cap} words for {params}, n={n}")
        k = count_faultlines(w, params.ell)
        counts[k] = counts.get(k, 0) + 1
    return IntPoly(counts.get(k, 0) for k in range(max(counts) + 1))


def refined_last_letter_polys(d: int, n: int) -> list[IntPoly]:
    """``[Q_inf, Q_1, ..., Q_d]`` for words of length ``n`` with ``a_{i+1} >= a_i + 1``.

    Iterates the last-letter transfer matrix from the length-one vector
    ``(1, t, ..., t)``.
    """
    if d < 1 or n < 1:
        raise ValueError("need d >= 1 and n >= 1")
    t = IntPoly((0, 1))
    vec = [IntPoly((1,))] + [t] * d
    for _ in range(n - 1):
        inf_part = vec[0]
        total = vec[0]
        for q in vec[1:]:
            total = total + q
        new = [total]
        running = inf_part
        for j in range(1, d + 1):
            # words ending in j extend words ending in INF or in a letter < j
            new.append(running * t)
            running = running + vec[j]
        vec = new
    return vec


def enumerate_cylindric_words(params: TilingParams, n: int) -> Iterator[AnchorWord]:
    """Words of length ``n`` whose anchor inequalities hold with indices mod ``n``."""
    if n < 1:
        raise ValueError("cylindric words need n >= 1")
    mu = params.mu
    letters = _letters(params.d)
    word: list = []

    def rec():
        j = len(word)
        if j == n:
            if is_valid_word(params, word, cylindric=True):
                yield AnchorWord(tuple(word))
            return
        for a in letters:
            if _fits(word, a, mu):
                word.append(a)
                yield from rec()
                word.pop()

    yield from rec()


def cylindric_poly_bruteforce(params: TilingParams, n: int, cap: int | None = None) -> IntPoly:
    cap = enumeration_cap() if cap is None else cap
    counts: dict[int, int] = {}
    total = 0
    for w in enumerate_cylindric_words(params, n):
        total += 1
        if total > cap:
            raise EnumerationCapExceeded(f"more than {cap} cylindric words for {params}, n={n}")
        counts[w.bigtiles] = counts.get(w.bigtiles, 0) + 1
    return IntPoly(counts.get(k, 0) for k in range(max(counts) + 1))
