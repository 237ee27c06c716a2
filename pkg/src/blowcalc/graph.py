"""Weighted simple graphs and the blow-up / blow-down moves.

A :class:`WeightedGraph` is an immutable value: every operation returns a new
graph.  Vertex ids are plain integers allocated monotonically through
``next_id``; contracting a vertex never renumbers the survivors, so a log of
:class:`BlowRecord` values can be replayed against the graphs it was taken on.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

WEIGHT_LIMIT = 1 << 62
DEFAULT_AUT_CAP = 10**6


class GraphError(ValueError):
    """Raised on malformed graphs or operations applied at invalid sites."""


class NotAForestError(GraphError):
    pass


def _checked(w: int) -> int:
    if not -WEIGHT_LIMIT < w < WEIGHT_LIMIT:
        raise OverflowError(f"vertex weight {w} outside the supported range")
    return w


class WeightedGraph:
    """Finite simple undirected graph with an integer weight on each vertex."""

    __slots__ = ("_w", "_adj", "next_id", "_hash")

    def __init__(
        self,
        weights: Mapping[int, int] | None = None,
        edges: Iterable[tuple[int, int]] = (),
        next_id: int | None = None,
    ) -> None:
        w = {int(v): _checked(int(x)) for v, x in (weights or {}).items()}
        adj: dict[int, set[int]] = {v: set() for v in w}
        for a, b in edges:
            if a == b:
                raise GraphError(f"loop at vertex {a}")
            if a not in w or b not in w:
                raise GraphError(f"edge {a}-{b} has an endpoint that is not a vertex")
            adj[a].add(b)
            adj[b].add(a)
        floor = max(w, default=-1) + 1
        if next_id is not None and next_id < floor:
            raise GraphError("next_id must exceed every vertex id")
        self._w = w
        self._adj = {v: frozenset(s) for v, s in adj.items()}
        self.next_id = floor if next_id is None else next_id
        self._hash: int | None = None

    @classmethod
    def _raw(cls, w: dict[int, int], adj: dict[int, frozenset[int]], next_id: int) -> "WeightedGraph":
        g = cls.__new__(cls)
        g._w = w
        g._adj = adj
        g.next_id = next_id
        g._hash = None
        return g

    # read-only accessors
    def vertices(self) -> list[int]:
        return sorted(self._w)

    def weight(self, v: int) -> int:
        try:
            return self._w[v]
        except KeyError:
            raise GraphError(f"unknown vertex {v}") from None

    def weights(self) -> dict[int, int]:
        return dict(self._w)

    def neighbors(self, v: int) -> frozenset[int]:
        try:
            return self._adj[v]
        except KeyError:
            raise GraphError(f"unknown vertex {v}") from None

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def has_vertex(self, v: int) -> bool:
        return v in self._w

    def has_edge(self, u: int, v: int) -> bool:
        return u in self._adj and v in self._adj[u]

    def edges(self) -> list[tuple[int, int]]:
        return sorted((u, v) for u in self._adj for v in self._adj[u] if u < v)

    def __len__(self) -> int:
        return len(self._w)

    def __contains__(self, v: object) -> bool:
        return v in self._w

    def __iter__(self) -> Iterator[int]:
        return iter(self.vertices())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightedGraph):
            return NotImplemented
        return self._w == other._w and self._adj == other._adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((frozenset(self._w.items()), frozenset(self.edges())))
        return self._hash

    def __repr__(self) -> str:
        vs = ", ".join(f"{v}:{self._w[v]}" for v in self.vertices())
        es = ", ".join(f"{a}-{b}" for a, b in self.edges())
        return f"WeightedGraph({{{vs}}}, [{es}])"

    # mutation helpers used only while building a fresh value
    def _copy_parts(self) -> tuple[dict[int, int], dict[int, set[int]]]:
        return dict(self._w), {v: set(s) for v, s in self._adj.items()}

    @classmethod
    def _from_parts(cls, w: dict[int, int], adj: dict[int, set[int]], next_id: int) -> "WeightedGraph":
        for v in w:
            _checked(w[v])
        return cls._raw(w, {v: frozenset(s) for v, s in adj.items()}, next_id)


@dataclass(frozen=True)
class BlowRecord:
    """Describes one blow-up: where it happened and which vertex it created."""

    kind: str  # "vertex", "edge" or "free"
    site: tuple[int, ...]
    created: int


def chain(weights: Sequence[int], start: int = 0) -> WeightedGraph:
    """The linear chain ``[x1, ..., xq]`` with consecutive ids from ``start``."""
    ids = range(start, start + len(weights))
    return WeightedGraph(dict(zip(ids, weights)), zip(ids, ids[1:]))


def star(center: int, leaves: Sequence[int]) -> WeightedGraph:
    ws = {0: center}
    ws.update({i + 1: x for i, x in enumerate(leaves)})
    return WeightedGraph(ws, [(0, i + 1) for i in range(len(leaves))])


def disjoint_union(g: WeightedGraph, h: WeightedGraph) -> WeightedGraph:
    """Union of ``g`` with a copy of ``h`` whose ids are shifted past ``g``."""
    off = g.next_id
    w, adj = g._copy_parts()
    for v in h.vertices():
        w[v + off] = h.weight(v)
        adj[v + off] = {u + off for u in h.neighbors(v)}
    return WeightedGraph._from_parts(w, adj, g.next_id + h.next_id)


def blow_up_vertex(g: WeightedGraph, v: int) -> tuple[WeightedGraph, BlowRecord]:
    if v not in g:
        raise GraphError(f"unknown vertex {v}")
    w, adj = g._copy_parts()
    e = g.next_id
    w[v] -= 1
    w[e] = -1
    adj[e] = {v}
    adj[v].add(e)
    return WeightedGraph._from_parts(w, adj, e + 1), BlowRecord("vertex", (v,), e)


def blow_up_edge(g: WeightedGraph, u: int, v: int) -> tuple[WeightedGraph, BlowRecord]:
    if not g.has_edge(u, v):
        raise GraphError(f"{u}-{v} is not an edge")
    w, adj = g._copy_parts()
    e = g.next_id
    adj[u].discard(v)
    adj[v].discard(u)
    adj[u].add(e)
    adj[v].add(e)
    adj[e] = {u, v}
    w[u] -= 1
    w[v] -= 1
    w[e] = -1
    site = (u, v) if u < v else (v, u)
    return WeightedGraph._from_parts(w, adj, e + 1), BlowRecord("edge", site, e)


def blow_up_free(g: WeightedGraph) -> tuple[WeightedGraph, BlowRecord]:
    w, adj = g._copy_parts()
    e = g.next_id
    w[e] = -1
    adj[e] = set()
    return WeightedGraph._from_parts(w, adj, e + 1), BlowRecord("free", (), e)


def is_contractible(g: WeightedGraph, v: int) -> bool:
    if g.weight(v) != -1:
        return False
    nb = g.neighbors(v)
    if len(nb) > 2:
        return False
    if len(nb) == 2:
        a, b = nb
        return not g.has_edge(a, b)
    return True


def contractible_vertices(g: WeightedGraph) -> set[int]:
    return {v for v in g.vertices() if is_contractible(g, v)}


def blow_down(g: WeightedGraph, e: int) -> WeightedGraph:
    if e not in g or not is_contractible(g, e):
        raise GraphError(f"vertex {e} is not contractible")
    w, adj = g._copy_parts()
    nb = adj.pop(e)
    del w[e]
    for u in nb:
        adj[u].discard(e)
        w[u] += 1
    if len(nb) == 2:
        a, b = nb
        adj[a].add(b)
        adj[b].add(a)
    return WeightedGraph._from_parts(w, adj, g.next_id)


def is_strict(g: WeightedGraph, r: BlowRecord) -> bool:
    """Edge blow-ups and blow-ups at vertices of degree at most one are strict."""
    if r.kind == "edge":
        return True
    if r.kind == "vertex":
        return g.degree(r.site[0]) <= 1
    return False


def minimalize(g: WeightedGraph) -> WeightedGraph:
    """Blow down contractible vertices, smallest id first, until none remain."""
    while True:
        for v in g.vertices():
            if is_contractible(g, v):
                g = blow_down(g, v)
                break
        else:
            return g


def is_minimal(g: WeightedGraph) -> bool:
    return not any(is_contractible(g, v) for v in g.vertices())


def components(g: WeightedGraph) -> list[WeightedGraph]:
    """Connected components, ordered by their smallest vertex id."""
    seen: set[int] = set()
    out = []
    for root in g.vertices():
        if root in seen:
            continue
        comp = {root}
        stack = [root]
        while stack:
            x = stack.pop()
            for y in g.neighbors(x):
                if y not in comp:
                    comp.add(y)
                    stack.append(y)
        seen |= comp
        w = {v: g.weight(v) for v in comp}
        out.append(WeightedGraph(w, [(a, b) for a, b in g.edges() if a in comp], g.next_id))
    return out


def is_forest(g: WeightedGraph) -> bool:
    # a graph is a forest iff |E| = |V| - #components
    return len(g.edges()) == len(g) - len(components(g))


def require_forest(g: WeightedGraph) -> None:
    if not is_forest(g):
        raise NotAForestError("not a forest: the graph contains a cycle")


def induced(g: WeightedGraph, keep: Iterable[int]) -> WeightedGraph:
    ks = set(keep)
    return WeightedGraph(
        {v: g.weight(v) for v in ks},
        [(a, b) for a, b in g.edges() if a in ks and b in ks],
        g.next_id,
    )


def relabel(g: WeightedGraph, mapping: Mapping[int, int]) -> WeightedGraph:
    return WeightedGraph(
        {mapping[v]: g.weight(v) for v in g.vertices()},
        [(mapping[a], mapping[b]) for a, b in g.edges()],
    )


# ---------------------------------------------------------------------------
# canonical codes and automorphisms of weighted forests


def _tree_centers(g: WeightedGraph, comp: list[int]) -> list[int]:
    if len(comp) <= 2:
        return sorted(comp)
    deg = {v: g.degree(v) for v in comp}
    layer = [v for v in comp if deg[v] <= 1]
    remaining = len(comp)
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for u in g.neighbors(v):
                deg[u] -= 1
                if deg[u] == 1:
                    nxt.append(u)
        layer = nxt
    return sorted(layer)


def _rooted_codes(g: WeightedGraph, root: int, parent: int | None, codes: dict[tuple[int, int | None], str]) -> str:
    # iterative post-order so deep chains do not hit the recursion limit
    stack: list[tuple[int, int | None, bool]] = [(root, parent, False)]
    while stack:
        v, p, done = stack.pop()
        if done:
            kids = sorted(codes[(c, v)] for c in g.neighbors(v) if c != p)
            codes[(v, p)] = f"({g.weight(v)}{''.join(kids)})"
        else:
            stack.append((v, p, True))
            stack.extend((c, v, False) for c in g.neighbors(v) if c != p)
    return codes[(root, parent)]


@dataclass(frozen=True)
class _Rooting:
    code: str
    roots: tuple[int, ...]  # one center, or two centers when the halves are rooted separately


def _component_rooting(g: WeightedGraph, comp: list[int], codes: dict) -> _Rooting:
    centers = _tree_centers(g, comp)
    if len(centers) == 1:
        c = centers[0]
        return _Rooting(_rooted_codes(g, c, None, codes), (c,))
    a, b = centers
    ca = _rooted_codes(g, a, b, codes)
    cb = _rooted_codes(g, b, a, codes)
    if cb < ca:
        a, b, ca, cb = b, a, cb, ca
    return _Rooting(f"[{ca}{cb}]", (a, b))


def _vertex_sets(g: WeightedGraph) -> list[list[int]]:
    return [c.vertices() for c in components(g)]


def canonical_code(g: WeightedGraph) -> bytes:
    """Isomorphism-invariant code of a weighted forest.

    Each tree is encoded from its center (or its central edge) with children
    sorted; the component codes are then sorted and concatenated.
    """
    require_forest(g)
    codes: dict = {}
    parts = sorted(_component_rooting(g, comp, codes).code for comp in _vertex_sets(g))
    return "".join(parts).encode()


def _count_orderings(g: WeightedGraph, v: int, p: int | None, codes: dict) -> int:
    kids = [c for c in g.neighbors(v) if c != p]
    total = 1
    groups: dict[str, int] = {}
    for c in kids:
        groups[codes[(c, v)]] = groups.get(codes[(c, v)], 0) + 1
        total *= _count_orderings(g, c, v, codes)
    for k in groups.values():
        total *= math.factorial(k)
    return total


def _orderings_rooted(g: WeightedGraph, v: int, p: int | None, codes: dict) -> list[tuple[int, ...]]:
    """All preorders of the subtree at ``v`` that respect the canonical child order."""
    kids = sorted((c for c in g.neighbors(v) if c != p), key=lambda c: codes[(c, v)])
    if not kids:
        return [(v,)]
    sub = {c: _orderings_rooted(g, c, v, codes) for c in kids}
    blocks = [list(grp) for _, grp in itertools.groupby(kids, key=lambda c: codes[(c, v)])]
    block_choices = []
    for blk in blocks:
        opts = []
        for perm in itertools.permutations(blk):
            for combo in itertools.product(*(sub[c] for c in perm)):
                opts.append(tuple(itertools.chain.from_iterable(combo)))
        block_choices.append(opts)
    return [(v,) + tuple(itertools.chain.from_iterable(pick)) for pick in itertools.product(*block_choices)]


def automorphism_count(g: WeightedGraph) -> int:
    require_forest(g)
    codes: dict = {}
    total = 1
    by_code: dict[str, int] = {}
    for comp in _vertex_sets(g):
        r = _component_rooting(g, comp, codes)
        by_code[r.code] = by_code.get(r.code, 0) + 1
        if len(r.roots) == 1:
            total *= _count_orderings(g, r.roots[0], None, codes)
        else:
            a, b = r.roots
            total *= _count_orderings(g, a, b, codes) * _count_orderings(g, b, a, codes)
            if codes[(a, b)] == codes[(b, a)]:
                total *= 2
    for k in by_code.values():
        total *= math.factorial(k)
    return total


def canonical_orderings(g: WeightedGraph, cap: int = DEFAULT_AUT_CAP) -> list[tuple[int, ...]]:
    """Every vertex ordering that lists ``g`` in canonical position order.

    Position ``i`` in any two of these orderings holds structurally equivalent
    vertices, so pairing two orderings position by position gives an
    automorphism, and every automorphism arises this way.  The first ordering
    is the reference one.
    """
    count = automorphism_count(g)
    if count > cap:
        raise GraphError(f"automorphism group has {count} elements, above the cap {cap}")
    codes: dict = {}
    comps = []
    for comp in _vertex_sets(g):
        r = _component_rooting(g, comp, codes)
        if len(r.roots) == 1:
            opts = _orderings_rooted(g, r.roots[0], None, codes)
        else:
            a, b = r.roots
            opts = [x + y for x in _orderings_rooted(g, a, b, codes) for y in _orderings_rooted(g, b, a, codes)]
            if codes[(a, b)] == codes[(b, a)]:
                opts += [y + x for x in _orderings_rooted(g, a, b, codes) for y in _orderings_rooted(g, b, a, codes)]
        comps.append((r.code, opts))
    comps.sort(key=lambda t: t[0])
    blocks = [[opts for _, opts in grp] for _, grp in itertools.groupby(comps, key=lambda t: t[0])]
    block_choices = []
    for blk in blocks:
        choices = []
        for perm in itertools.permutations(range(len(blk))):
            for combo in itertools.product(*(blk[i] for i in perm)):
                choices.append(tuple(itertools.chain.from_iterable(combo)))
        block_choices.append(choices)
    return [tuple(itertools.chain.from_iterable(pick)) for pick in itertools.product(*block_choices)]


def automorphisms(g: WeightedGraph, cap: int = DEFAULT_AUT_CAP) -> list[dict[int, int]]:
    """All weight-preserving automorphisms; the identity comes first."""
    orders = canonical_orderings(g, cap)
    ref = orders[0]
    return [dict(zip(ref, o)) for o in orders]


def is_automorphism(g: WeightedGraph, f: Mapping[int, int]) -> bool:
    if sorted(f) != g.vertices() or sorted(f.values()) != g.vertices():
        return False
    if any(g.weight(v) != g.weight(f[v]) for v in g.vertices()):
        return False
    return all(g.has_edge(f[a], f[b]) for a, b in g.edges())
