"""Conflict graphs of big-tile placements and their independence polynomials.

A vertex is a placement of one big tile, recorded by its anchor square.
Two placements are adjacent when their footprints share a cell, so the
independent sets are exactly the sets of non-overlapping big tiles and the
independence polynomial is the tiling polynomial.

When ``d`` exceeds the tile height the board picture no longer matches the
anchor words.  ``auxiliary=True`` instead joins every pair of placements
that violates an anchor inequality, which gives the same polynomial for all
``d``; for ``d <= mu_0`` the two edge sets coincide.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .errors import GraphTooLarge, NeedsAtLeastThreeColumns, TilingInterpretationInvalid
from .exactpoly import IntPoly
from .shapes import TilingParams

__all__ = [
    "Placement",
    "ConflictGraph",
    "DEFAULT_VERTEX_CAP",
    "footprint",
    "build_conflict_graph",
    "independence_polynomial",
    "find_claw",
    "predicted_claw",
]

DEFAULT_VERTEX_CAP = 40


@dataclass(frozen=True, order=True)
class Placement:
    column: int
    row: int

    def __str__(self) -> str:
        return f"({self.column},{self.row})"


def footprint(mu: tuple[int, ...], p: Placement) -> frozenset[tuple[int, int]]:
    """Cells ``(column, row)`` covered by a tile anchored at ``p``."""
    return frozenset(
        (p.column + k, p.row + y)
        for k, height in enumerate(mu)
        for y in range(height)
    )


@dataclass
class ConflictGraph:
    vertices: list[Placement]
    adjacency: list[int]  # bitmask of neighbours per vertex

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return sum(bin(a).count("1") for a in self.adjacency) // 2

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.adjacency[i] >> j & 1)

    def neighbors(self, i: int) -> list[int]:
        a = self.adjacency[i]
        return [j for j in range(len(self.vertices)) if a >> j & 1]

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(len(self.vertices)) for j in self.neighbors(i) if i < j]

    def to_json(self) -> dict:
        return {
            "vertices": [[v.column, v.row] for v in self.vertices],
            "edges": [list(e) for e in self.edges()],
        }


def _anchor_conflict(mu: tuple[int, ...], a: Placement, b: Placement) -> bool:
    if a.column > b.column:
        a, b = b, a
    k = b.column - a.column
    if k == 0:
        return True
    if k >= len(mu):
        return False
    return b.row < a.row + mu[k]


def build_conflict_graph(params: TilingParams, n: int, auxiliary: bool = False) -> ConflictGraph:
    """Placements on the ``n``-wide board with footprint-overlap edges.

    With ``auxiliary`` the edges come from the anchor inequalities instead,
    which is also valid when ``d > mu_0``.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if not auxiliary and not params.tiling_interpretation_valid:
        raise TilingInterpretationInvalid(
            f"d={params.d} exceeds the tile height {params.shape.height}; use auxiliary edges"
        )
    mu = params.mu
    vertices = [
        Placement(c, r)
        for c in range(1, n - params.ell + 1)
        for r in range(1, params.d + 1)
    ]
    adjacency = [0] * len(vertices)
    if auxiliary:
        conflict = lambda i, j: _anchor_conflict(mu, vertices[i], vertices[j])  # noqa: E731
    else:
        cells = [footprint(mu, v) for v in vertices]
        conflict = lambda i, j: not cells[i].isdisjoint(cells[j])  # noqa: E731
    for i, j in combinations(range(len(vertices)), 2):
        if conflict(i, j):
            adjacency[i] |= 1 << j
            adjacency[j] |= 1 << i
    return ConflictGraph(vertices, adjacency)


def _degeneracy_order(adjacency: list[int]) -> list[int]:
    remaining = set(range(len(adjacency)))
    alive = (1 << len(adjacency)) - 1
    order = []
    while remaining:
        v = min(remaining, key=lambda u: (bin(adjacency[u] & alive).count("1"), u))
        order.append(v)
        remaining.discard(v)
        alive &= ~(1 << v)
    return order


def independence_polynomial(g: ConflictGraph, cap: int = DEFAULT_VERTEX_CAP) -> IntPoly:
    """``sum_k i_k t^k`` over independent sets, by exact branching.

    Branches on ``I(G) = I(G - v) + t I(G - N[v])`` with memoisation on the
    remaining vertex set, taking ``v`` in degeneracy order.
    """
    nv = g.vertex_count
    if nv > cap:
        raise GraphTooLarge(f"{nv} vertices exceeds the cap of {cap}")
    order = _degeneracy_order(g.adjacency)
    adj = g.adjacency
    memo: dict[int, tuple[int, ...]] = {0: (1,)}

    def add(a, b):
        if len(a) < len(b):
            a, b = b, a
        return tuple(x + (b[i] if i < len(b) else 0) for i, x in enumerate(a))

    def rec(mask: int) -> tuple[int, ...]:
        hit = memo.get(mask)
        if hit is not None:
            return hit
        v = next(u for u in order if mask >> u & 1)
        without = rec(mask & ~(1 << v))
        with_v = rec(mask & ~(1 << v) & ~adj[v])
        out = add(without, (0,) + with_v)
        memo[mask] = out
        return out

    return IntPoly(rec((1 << nv) - 1))


def find_claw(g: ConflictGraph) -> Optional[tuple[Placement, Placement, Placement, Placement]]:
    """An induced ``K_{1,3}`` as ``(center, leaf, leaf, leaf)``, or ``None``."""
    for u in range(g.vertex_count):
        nbrs = g.neighbors(u)
        for a, b, c in combinations(nbrs, 3):
            if not (g.has_edge(a, b) or g.has_edge(a, c) or g.has_edge(b, c)):
                v = g.vertices
                return v[u], v[a], v[b], v[c]
    return None


def predicted_claw(params: TilingParams) -> bool:
    """Sufficient condition ``d >= mu_(l-1) + 1`` for a claw."""
    if params.ell < 2:
        raise NeedsAtLeastThreeColumns("the claw criterion needs at least three columns")
    return params.d >= params.mu[params.ell - 1] + 1
