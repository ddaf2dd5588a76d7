"""Ferrers tiles and board parameters.

A Ferrers tile is given by its column heights ``(mu_0, ..., mu_l)``, leftmost
first.  The board for ``d`` anchor rows has height ``mu_0 + d - 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    EmptyShape,
    InvalidParams,
    NonPositivePart,
    NotWeaklyDecreasing,
    SingleColumnUnsupported,
)

__all__ = [
    "FerrersShape",
    "TilingParams",
    "validate",
    "parse_shape",
    "make_params",
    "max_faultfree_width",
    "is_rigid",
    "shape_contains",
]


@dataclass(frozen=True, order=True)
class FerrersShape:
    parts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", _check_parts(self.parts))

    @property
    def ell(self) -> int:
        """Number of columns minus one."""
        return len(self.parts) - 1

    @property
    def height(self) -> int:
        return self.parts[0]

    @property
    def last(self) -> int:
        return self.parts[-1]

    @property
    def is_hook(self) -> bool:
        return all(p == 1 for p in self.parts[1:])

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))


def _check_parts(parts: Sequence[int]) -> tuple[int, ...]:
    parts = tuple(parts)
    if not parts:
        raise EmptyShape("shape has no parts")
    for p in parts:
        if not isinstance(p, int) or isinstance(p, bool):
            raise TypeError(f"shape parts must be integers, got {p!r}")
        if p < 1:
            raise NonPositivePart(f"part {p} is not positive")
    for a, b in zip(parts, parts[1:]):
        if b > a:
            raise NotWeaklyDecreasing(f"parts {parts} are not weakly decreasing")
    if len(parts) < 2:
        raise SingleColumnUnsupported("single-column tiles are not supported")
    return parts


def validate(parts: Iterable[int]) -> FerrersShape:
    """Check ``parts`` and return the corresponding shape."""
    return FerrersShape(tuple(parts))


def parse_shape(text: str) -> FerrersShape:
    """Parse a comma separated list such as ``"3,1,1"``."""
    try:
        parts = [int(tok) for tok in text.replace(" ", "").split(",") if tok]
    except ValueError as exc:
        raise InvalidParams(f"cannot parse shape {text!r}") from exc
    return validate(parts)


@dataclass(frozen=True, order=True)
class TilingParams:
    shape: FerrersShape
    d: int

    def __post_init__(self):
        if not isinstance(self.d, int) or self.d < 1:
            raise InvalidParams(f"d must be a positive integer, got {self.d!r}")

    @property
    def mu(self) -> tuple[int, ...]:
        return self.shape.parts

    @property
    def ell(self) -> int:
        return self.shape.ell

    @property
    def board_height(self) -> int:
        return self.shape.height + self.d - 1

    @property
    def tiling_interpretation_valid(self) -> bool:
        # anchor words model actual tilings only when d <= mu_0
        return self.d <= self.shape.height

    def __str__(self) -> str:
        return f"mu=({self.shape}), d={self.d}"


def make_params(mu: Sequence[int] | str | FerrersShape, d: int) -> TilingParams:
    if isinstance(mu, FerrersShape):
        shape = mu
    elif isinstance(mu, str):
        shape = parse_shape(mu)
    else:
        shape = validate(mu)
    return TilingParams(shape, d)


def max_faultfree_width(params: TilingParams) -> int:
    ell = params.ell
    return ((params.d - 1) // params.shape.last) * ell + ell + 1


def is_rigid(params: TilingParams) -> bool:
    mu = params.mu
    return mu[-1] == 1 and mu[-2] >= params.d


def shape_contains(mu: FerrersShape, nu: FerrersShape) -> bool:
    """True iff ``mu_i <= nu_i`` for every ``i >= 1`` (missing parts are 0)."""
    n = max(len(mu.parts), len(nu.parts))
    a = mu.parts + (0,) * (n - len(mu.parts))
    b = nu.parts + (0,) * (n - len(nu.parts))
    return all(x <= y for x, y in zip(a[1:], b[1:]))
