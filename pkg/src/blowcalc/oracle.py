"""Bounded breadth-first search over blow-ups and blow-downs.

This is ground truth by brute force: a "yes" verdict is a proof (an explicit
chain of moves exists), while "no-within-bounds" only says that the bounded
closure of the seed does not contain the target.
"""

from __future__ import annotations

import enum
import itertools
from collections import deque
from dataclasses import dataclass
from typing import Callable, Hashable, Iterable, Iterator, Sequence, TypeVar

from . import kernels
from .graph import (
    WeightedGraph,
    blow_down,
    blow_up_edge,
    blow_up_free,
    blow_up_vertex,
    canonical_code,
    contractible_vertices,
)
from .sequences import PathType, Seq

T = TypeVar("T")


class Verdict(enum.Enum):
    YES = "yes"
    NO_WITHIN_BOUNDS = "no-within-bounds"
    BUDGET_EXHAUSTED = "budget-exhausted"


class BoundsError(ValueError):
    pass


@dataclass(frozen=True)
class SearchBounds:
    """Size cap (sequence length or vertex count), weight window and node budget."""

    max_size: int = 6
    w_min: int = -4
    w_max: int = 2
    budget: int = 200_000

    def __post_init__(self) -> None:
        if not self.w_min <= -1 <= self.w_max:
            raise BoundsError("the weight window must contain -1")
        if self.budget <= 0 or self.max_size < 0:
            raise BoundsError("budget must be positive and the size cap nonnegative")

    def admits_seq(self, xs: Sequence[int]) -> bool:
        return len(xs) <= self.max_size and all(self.w_min <= x <= self.w_max for x in xs)

    def admits_graph(self, g: WeightedGraph) -> bool:
        return len(g) <= self.max_size and all(self.w_min <= g.weight(v) <= self.w_max for v in g.vertices())


class Closure(frozenset):
    """A bounded closure; ``truncated`` is set when the node budget ran out."""

    truncated: bool

    def __new__(cls, items: Iterable, truncated: bool = False):
        obj = super().__new__(cls, items)
        obj.truncated = truncated
        return obj


def _bfs(
    seed_key: Hashable,
    seed: T,
    expand: Callable[[T], Iterable[tuple[Hashable, T]]],
    budget: int,
    stop_at: Hashable | None = None,
) -> tuple[dict[Hashable, T], bool, bool]:
    seen = {seed_key: seed}
    frontier = [(seed_key, seed)]
    while frontier:
        nxt = []
        for _, item in frontier:
            for k, val in expand(item):
                if k in seen:
                    continue
                seen[k] = val
                if k == stop_at:
                    return seen, False, True
                if len(seen) >= budget:
                    return seen, True, False
                nxt.append((k, val))
        nxt.sort(key=lambda kv: kv[0])
        frontier = nxt
    return seen, False, stop_at is not None and stop_at in seen


# ---------------------------------------------------------------------------
# sequences


def _seq_expander(b: SearchBounds, tau: PathType):
    left, right = not tau.left_capped, not tau.right_capped
    floor = tau.min_length

    def expand(x: Seq):
        for y in kernels.seq_neighbors(x, left, right):
            if len(y) >= floor and b.admits_seq(y):
                yield y, y

    return expand


def _check_seq(xs: Seq, b: SearchBounds, tau: PathType) -> None:
    if not b.admits_seq(xs) or len(xs) < tau.min_length:
        raise BoundsError(f"{xs} lies outside the search bounds")


def bfs_seq_class(xs: Sequence[int], b: SearchBounds, tau: PathType = PathType.MM) -> Closure:
    """Everything reachable from ``xs`` without leaving the bounds.

    With a capped ``tau`` the moves at capped ends are disabled.
    """
    x = tuple(xs)
    _check_seq(x, b, tau)
    seen, truncated, _ = _bfs(x, x, _seq_expander(b, tau), b.budget)
    return Closure(seen, truncated)


def oracle_seq_equivalent(
    xs: Sequence[int], ys: Sequence[int], b: SearchBounds, tau: PathType = PathType.MM
) -> Verdict:
    x, y = tuple(xs), tuple(ys)
    _check_seq(x, b, tau)
    if x == y:
        return Verdict.YES
    seen, truncated, found = _bfs(x, x, _seq_expander(b, tau), b.budget, stop_at=y)
    if found:
        return Verdict.YES
    return Verdict.BUDGET_EXHAUSTED if truncated else Verdict.NO_WITHIN_BOUNDS


def oracle_min_elements(xs: Sequence[int], b: SearchBounds) -> set[Seq]:
    return {y for y in bfs_seq_class(xs, b) if -1 not in y}


# ---------------------------------------------------------------------------
# forests


def forest_moves(g: WeightedGraph) -> Iterator[WeightedGraph]:
    """Every blow-up and blow-down of ``g``."""
    for v in sorted(contractible_vertices(g)):
        yield blow_down(g, v)
    for v in g.vertices():
        yield blow_up_vertex(g, v)[0]
    for u, v in g.edges():
        yield blow_up_edge(g, u, v)[0]
    yield blow_up_free(g)[0]


def _forest_expander(b: SearchBounds):
    def expand(g: WeightedGraph):
        for h in forest_moves(g):
            if b.admits_graph(h):
                yield canonical_code(h), h

    return expand


def bfs_forest_class(g: WeightedGraph, b: SearchBounds) -> dict[bytes, WeightedGraph]:
    """Bounded closure keyed by canonical code; ``truncated`` is not tracked here."""
    if not b.admits_graph(g):
        raise BoundsError("seed forest lies outside the search bounds")
    seen, _, _ = _bfs(canonical_code(g), g, _forest_expander(b), b.budget)
    return seen


def oracle_forests_equivalent(g: WeightedGraph, h: WeightedGraph, b: SearchBounds) -> Verdict:
    if not b.admits_graph(g):
        raise BoundsError("seed forest lies outside the search bounds")
    target = canonical_code(h)
    key = canonical_code(g)
    if key == target:
        return Verdict.YES
    seen, truncated, found = _bfs(key, g, _forest_expander(b), b.budget, stop_at=target)
    if found:
        return Verdict.YES
    return Verdict.BUDGET_EXHAUSTED if truncated else Verdict.NO_WITHIN_BOUNDS


# ---------------------------------------------------------------------------
# exhaustive universes for calibration


def all_sequences(max_len: int, w_min: int, w_max: int) -> Iterator[Seq]:
    for n in range(max_len + 1):
        yield from itertools.product(range(w_min, w_max + 1), repeat=n)


def all_forests(max_vertices: int, w_min: int, w_max: int) -> dict[bytes, WeightedGraph]:
    """Every weighted forest within the bounds, one representative per isomorphism class."""
    layer = {canonical_code(WeightedGraph()): WeightedGraph()}
    found = dict(layer)
    for _ in range(max_vertices):
        nxt: dict[bytes, WeightedGraph] = {}
        for g in layer.values():
            for w in range(w_min, w_max + 1):
                e = g.next_id
                ws = g.weights()
                ws[e] = w
                for anchor in [None, *g.vertices()]:
                    edges = g.edges() + ([] if anchor is None else [(anchor, e)])
                    h = WeightedGraph(ws, edges)
                    k = canonical_code(h)
                    if k not in nxt:
                        nxt[k] = h
        found.update(nxt)
        layer = nxt
    return found


def bounded_partition(
    universe: dict[bytes, WeightedGraph], b: SearchBounds
) -> list[dict[bytes, WeightedGraph]]:
    """Split ``universe`` into classes of the bounded move graph.

    The closure of any member is the whole connected component of the bounded
    move graph, so one search per component suffices.
    """
    assigned: set[bytes] = set()
    parts = []
    for key in sorted(universe):
        if key in assigned:
            continue
        comp = bfs_forest_class(universe[key], b)
        assigned.update(comp)
        parts.append(comp)
    return parts
