"""Paths between non-degree-2 vertices, their weight words, and skeletons."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .graph import GraphError, WeightedGraph, canonical_code, require_forest
from .sequences import PathType, Seq, seq_equivalent

GPath = tuple[int, ...]


def _walk(g: WeightedGraph, start: int, first: int) -> GPath:
    path = [start, first]
    prev, cur = start, first
    while g.degree(cur) == 2:
        nxt = next(u for u in g.neighbors(cur) if u != prev)
        path.append(nxt)
        prev, cur = cur, nxt
    return tuple(path)


def paths(g: WeightedGraph) -> list[GPath]:
    """All maximal paths whose interior vertices have degree 2, in both orientations."""
    require_forest(g)
    out = []
    for v in g.vertices():
        d = g.degree(v)
        if d == 0:
            out.append((v,))
        elif d != 2:
            out.extend(_walk(g, v, u) for u in sorted(g.neighbors(v)))
    return sorted(out)


def _check_path(g: WeightedGraph, gamma: GPath) -> None:
    if not gamma:
        raise GraphError("empty path")
    if len(gamma) == 1:
        if g.degree(gamma[0]) != 0:
            raise GraphError(f"{gamma} is not a path of the graph")
        return
    if len(set(gamma)) != len(gamma) or any(not g.has_edge(a, b) for a, b in zip(gamma, gamma[1:])):
        raise GraphError(f"{gamma} is not a walk in the graph")
    if g.degree(gamma[0]) == 2 or g.degree(gamma[-1]) == 2 or any(g.degree(v) != 2 for v in gamma[1:-1]):
        raise GraphError(f"{gamma} is not a path of the graph")


def path_type(g: WeightedGraph, gamma: GPath) -> PathType:
    _check_path(g, gamma)
    return PathType.from_ends(g.degree(gamma[0]) > 2, g.degree(gamma[-1]) > 2)


def w_gamma(g: WeightedGraph, gamma: GPath) -> Seq:
    """Weights along the path at vertices of degree below 3."""
    _check_path(g, gamma)
    return tuple(g.weight(v) for v in gamma if g.degree(v) < 3)


def capped_word(g: WeightedGraph, gamma: GPath) -> Seq:
    """Weights of every vertex on the path, branch endpoints included."""
    _check_path(g, gamma)
    return tuple(g.weight(v) for v in gamma)


@dataclass(frozen=True)
class SkeletalMap:
    """A skeleton ``source`` with its map into ``target``.

    ``vmap`` sends each skeleton vertex to a vertex of degree other than 2 in
    the target; ``gpaths`` sends each oriented skeleton edge to the target
    path it stands for.
    """

    source: WeightedGraph
    target: WeightedGraph
    vmap: Mapping[int, int]
    gpaths: Mapping[tuple[int, int], GPath] = field(repr=False)

    def branch_vertices(self) -> list[int]:
        return [v for v in self.source.vertices() if self.source.degree(v) > 2]

    def path_of(self, s: int, t: int) -> GPath:
        return self.gpaths[(s, t)]


def skeleton_of(g: WeightedGraph) -> SkeletalMap:
    """Suppress degree-2 vertices and pair every isolated vertex with a new partner."""
    require_forest(g)
    weights: dict[int, int] = {}
    vmap: dict[int, int] = {}
    gpaths: dict[tuple[int, int], GPath] = {}
    edges = []
    fresh = g.next_id
    for v in g.vertices():
        if g.degree(v) != 2:
            weights[v] = 0
            vmap[v] = v
    for gamma in paths(g):
        if len(gamma) == 1:
            v = gamma[0]
            partner = fresh
            fresh += 1
            weights[partner] = 0
            vmap[partner] = v
            edges.append((v, partner))
            gpaths[(v, partner)] = gpaths[(partner, v)] = gamma
        else:
            s, t = gamma[0], gamma[-1]
            gpaths[(s, t)] = gamma
            if s < t:
                edges.append((s, t))
    source = WeightedGraph(weights, edges, max(fresh, g.next_id))
    return SkeletalMap(source, g, vmap, gpaths)


def is_pseudo_minimal(g: WeightedGraph) -> bool:
    """Every path whose word contracts to nothing joins two branch vertices."""
    for gamma in paths(g):
        if path_type(g, gamma) is not PathType.PP and seq_equivalent(w_gamma(g, gamma), ()):
            return False
    return True


def skeleton_code(g: WeightedGraph) -> bytes:
    return canonical_code(skeleton_of(g).source)
