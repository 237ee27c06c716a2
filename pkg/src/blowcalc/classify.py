"""Complete equivalence invariant for weighted forests.

A minimal forest ``G`` is described relative to its skeleton ``S``:

* the edge map sends each oriented skeleton edge to the weight word of the
  path of ``G`` it stands for;
* the zero-determinant graph joins two branch vertices of ``S`` when the path
  between them has determinant 0, and a branch vertex is *special* when one
  of its paths to a leaf has determinant 0;
* ``eta`` sums the branch weights over each non-special component of that
  graph.

Replacing every word by its canonical sequence shifts ``eta`` by a computable
correction; the resulting (canonical words, corrected ``eta``) pair, minimized
over the automorphisms of ``S``, is the fingerprint.  Two forests are
equivalent exactly when their fingerprints agree.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Mapping

from .enumeration import BOUNDED, COMPLETE, EnumBounds, Enumeration, minimal_in_class
from .graph import (
    DEFAULT_AUT_CAP,
    WeightedGraph,
    canonical_code,
    canonical_orderings,
    minimalize,
    require_forest,
)
from .sequences import (
    PathType,
    Seq,
    SequenceError,
    canonical_form,
    delta,
    reverse,
    seq_det,
    tau_equivalent,
)
from .skeleton import GPath, SkeletalMap, capped_word, is_pseudo_minimal, path_type, skeleton_of, w_gamma

Edge = tuple[int, int]


class ClassifyError(ValueError):
    pass


# ---------------------------------------------------------------------------
# edge maps


@dataclass(frozen=True)
class EdgeMapData:
    """Words on the stored orientations ``(s, t)`` with ``s < t``; reversals are implicit."""

    entries: Mapping[Edge, Seq]

    def __getitem__(self, edge: Edge) -> Seq:
        s, t = edge
        if (s, t) in self.entries:
            return self.entries[(s, t)]
        return reverse(self.entries[(t, s)])

    def stored(self) -> list[Edge]:
        return sorted(self.entries)

    def oriented(self) -> Iterator[Edge]:
        for s, t in self.stored():
            yield s, t
            yield t, s


def edge_map(sk: SkeletalMap) -> EdgeMapData:
    if not is_pseudo_minimal(sk.target):
        raise ClassifyError("edge maps are only defined on pseudo-minimal forests")
    return EdgeMapData({(s, t): w_gamma(sk.target, sk.path_of(s, t)) for s, t in sk.source.edges()})


def canonical_edge_map(w: EdgeMapData) -> EdgeMapData:
    return EdgeMapData({e: canonical_form(x).terms for e, x in w.entries.items()})


def edge_type(s_graph: WeightedGraph, s: int, t: int) -> PathType:
    return PathType.from_ends(s_graph.degree(s) > 2, s_graph.degree(t) > 2)


# ---------------------------------------------------------------------------
# the zero-determinant graph on branch vertices


@dataclass(frozen=True)
class SharpGraph:
    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]
    special: frozenset[int]
    components: tuple[tuple[int, ...], ...]  # sorted, ordered by least vertex

    def component_of(self, v: int) -> tuple[int, ...]:
        return next(c for c in self.components if v in c)

    def is_special(self, comp: tuple[int, ...]) -> bool:
        return any(v in self.special for v in comp)

    def free_components(self) -> list[tuple[int, ...]]:
        return [c for c in self.components if not self.is_special(c)]


def sharp_graph(s_graph: WeightedGraph, w: EdgeMapData) -> SharpGraph:
    branch = [v for v in s_graph.vertices() if s_graph.degree(v) > 2]
    bset = set(branch)
    edges = []
    special = set()
    for s, t in w.stored():
        if seq_det(w[(s, t)]) != 0:
            continue
        if s in bset and t in bset:
            edges.append((s, t))
        elif s in bset:
            special.add(s)
        elif t in bset:
            special.add(t)
    parent = {v: v for v in branch}

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for s, t in edges:
        parent[find(s)] = find(t)
    groups: dict[int, list[int]] = {}
    for v in branch:
        groups.setdefault(find(v), []).append(v)
    comps = tuple(sorted(tuple(sorted(c)) for c in groups.values()))
    return SharpGraph(tuple(branch), tuple(edges), frozenset(special), comps)


def branch_weight_vector(sk: SkeletalMap) -> dict[int, int]:
    return {v: sk.target.weight(sk.vmap[v]) for v in sk.branch_vertices()}


@dataclass(frozen=True)
class EtaVector:
    """Branch-weight sums over the non-special components (keyed by component)."""

    values: tuple[tuple[tuple[int, ...], int], ...]

    def as_dict(self) -> dict[tuple[int, ...], int]:
        return dict(self.values)


def eta_of(sk: SkeletalMap) -> EtaVector:
    w = edge_map(sk)
    sharp = sharp_graph(sk.source, w)
    bw = branch_weight_vector(sk)
    return EtaVector(tuple((c, sum(bw[v] for v in c)) for c in sharp.free_components()))


def delta_c(w: EdgeMapData, w_prime: EdgeMapData, comp: tuple[int, ...]) -> int:
    """Sum of endpoint corrections of paths leaving ``comp``, plus half of those inside it."""
    inside = set(comp)
    twice = 0
    for s, t in w.oriented():
        if s not in inside:
            continue
        d = delta(w[(s, t)], w_prime[(s, t)])
        twice += d if t in inside else 2 * d
    if twice % 2:
        raise AssertionError("component correction is not an integer")
    return twice // 2


def canonical_eta(sk: SkeletalMap) -> EtaVector:
    """``eta`` after moving every word to its canonical sequence."""
    w = edge_map(sk)
    wc = canonical_edge_map(w)
    sharp = sharp_graph(sk.source, w)
    bw = branch_weight_vector(sk)
    return EtaVector(
        tuple((c, sum(bw[v] for v in c) + delta_c(w, wc, c)) for c in sharp.free_components())
    )


# ---------------------------------------------------------------------------
# fingerprints


@dataclass(frozen=True, order=True)
class ClassFingerprint:
    """(skeleton code, canonical words by skeleton position, eta by component position)."""

    skeleton_code: bytes
    omega: tuple[tuple[int, int, Seq], ...]
    eta: tuple[tuple[int, int], ...]

    def serialize(self) -> bytes:
        words = "|".join(f"{i},{j}:{','.join(map(str, x))}" for i, j, x in self.omega)
        etas = "|".join(f"{p}:{v}" for p, v in self.eta)
        return b"FP1;" + self.skeleton_code + f";{words};{etas}".encode()

    def text(self) -> str:
        return "FP1:" + self.serialize().hex()


EMPTY_FINGERPRINT = ClassFingerprint(b"", (), ())


@lru_cache(maxsize=1 << 15)
def _canon_terms(x: Seq) -> Seq:
    return canonical_form(x).terms


def fingerprint(g: WeightedGraph, aut_cap: int = DEFAULT_AUT_CAP) -> ClassFingerprint:
    require_forest(g)
    m = minimalize(g)
    if len(m) == 0:
        return EMPTY_FINGERPRINT
    sk = skeleton_of(m)
    s_graph = sk.source
    w = edge_map(sk)
    eta = canonical_eta(sk).as_dict()
    words = {e: _canon_terms(w[e]) for e in w.oriented()}
    edges = w.stored()
    best = None
    for order in canonical_orderings(s_graph, aut_cap):
        pos = {v: i for i, v in enumerate(order)}
        omega = []
        for s, t in edges:
            i, j = pos[s], pos[t]
            omega.append((i, j, words[(s, t)]) if i < j else (j, i, words[(t, s)]))
        omega.sort()
        eta_key = sorted((min(pos[v] for v in c), val) for c, val in eta.items())
        key = (tuple(omega), tuple(eta_key))
        if best is None or key < best:
            best = key
    return ClassFingerprint(canonical_code(s_graph), best[0], best[1])


def forests_equivalent(g: WeightedGraph, h: WeightedGraph) -> bool:
    return fingerprint(g) == fingerprint(h)


# ---------------------------------------------------------------------------
# transplant and canonical forests


def transplant(g: WeightedGraph, gamma: GPath, word: Seq) -> WeightedGraph:
    """Replace the path ``gamma`` by one realizing ``word`` (branch endpoint weights included)."""
    tau = path_type(g, gamma)
    word = tuple(word)
    try:
        ok = tau_equivalent(tau, capped_word(g, gamma), word)
    except SequenceError as exc:
        raise ClassifyError(str(exc)) from None
    if not ok:
        raise ClassifyError(f"{word} is not {tau}-equivalent to the word of {gamma}")
    lo = 1 if tau.left_capped else 0
    hi_g = len(gamma) - (1 if tau.right_capped else 0)
    hi_w = len(word) - (1 if tau.right_capped else 0)
    removed = set(gamma[lo:hi_g])
    weights = {v: g.weight(v) for v in g.vertices() if v not in removed}
    edges = [e for e in g.edges() if e[0] not in removed and e[1] not in removed]
    if tau is PathType.PP and len(gamma) == 2:
        edges.remove(tuple(sorted(gamma)))
    if tau.left_capped:
        weights[gamma[0]] = word[0]
    if tau.right_capped:
        weights[gamma[-1]] = word[-1]
    prev = gamma[0] if tau.left_capped else None
    fresh = g.next_id
    for y in word[lo:hi_w]:
        weights[fresh] = y
        if prev is not None:
            edges.append((prev, fresh))
        prev = fresh
        fresh += 1
    if tau.right_capped and prev is not None:
        edges.append((prev, gamma[-1]))
    return WeightedGraph(weights, edges, fresh)


def _corrected_caps(tau: PathType, a: int | None, x: Seq, y: Seq, b: int | None) -> tuple[int | None, int | None]:
    """Cap weights for replacing the open word ``x`` by ``y`` (head takes the zero-determinant correction)."""
    if seq_det(x) != 0:
        alpha = a + delta(x, y) if tau.left_capped else None
        beta = b + delta(reverse(x), reverse(y)) if tau.right_capped else None
        return alpha, beta
    if tau is PathType.PP:
        return a + delta(x, y), b
    return a, b


def canonical_forest(g: WeightedGraph) -> WeightedGraph:
    require_forest(g)
    h = minimalize(g)
    if len(h) == 0:
        return h
    sk = skeleton_of(h)
    for s, t in sk.source.edges():
        gamma = sk.path_of(s, t)
        tau = path_type(h, gamma)
        if tau is PathType.MP:
            # the leaf end gets a fresh (larger) id, so the stored orientation starts at the branch
            gamma, tau = gamma[::-1], PathType.PM
        x = w_gamma(h, gamma)
        y = _canon_terms(x)
        a = h.weight(gamma[0]) if tau.left_capped else None
        b = h.weight(gamma[-1]) if tau.right_capped else None
        alpha, beta = _corrected_caps(tau, a, x, y, b)
        word = ((alpha,) if tau.left_capped else ()) + y + ((beta,) if tau.right_capped else ())
        h = transplant(h, gamma, word)
    return h


# ---------------------------------------------------------------------------
# minimal models


def _realize(
    s_graph: WeightedGraph,
    branch_weights: Mapping[int, int],
    words: Mapping[Edge, Seq],
    next_id: int,
) -> WeightedGraph:
    weights = dict(branch_weights)
    edges: list[Edge] = []
    fresh = next_id
    for (s, t), y in sorted(words.items()):
        tau = edge_type(s_graph, s, t)
        prev = s if tau.left_capped else None
        for val in y:
            weights[fresh] = val
            if prev is not None:
                edges.append((prev, fresh))
            prev = fresh
            fresh += 1
        if tau.right_capped:
            edges.append((prev, t))
    return WeightedGraph(weights, edges, fresh)


def _weight_choices(
    sharp: SharpGraph, base: Mapping[int, int], bounds: EnumBounds
) -> tuple[list[dict[int, int]], bool]:
    """All branch-weight vectors in the class of ``base`` within the bounds.

    Weights on a special component are unconstrained; on a non-special
    component only their sum is fixed, so all vertices but the first vary.
    """
    per_comp: list[list[dict[int, int]]] = []
    free = False
    xs = list(bounds.x_range)
    for comp in sharp.components:
        if sharp.is_special(comp):
            free = True
            per_comp.append([dict(zip(comp, vals)) for vals in itertools.product(xs, repeat=len(comp))])
        elif len(comp) > 1:
            free = True
            total = sum(base[v] for v in comp)
            opts = []
            for vals in itertools.product(xs, repeat=len(comp) - 1):
                d = dict(zip(comp[1:], vals))
                d[comp[0]] = total - sum(vals)
                opts.append(d)
            per_comp.append(opts)
        else:
            per_comp.append([{comp[0]: base[comp[0]]}])
    out = []
    for pick in itertools.product(*per_comp):
        merged: dict[int, int] = {}
        for d in pick:
            merged.update(d)
        out.append(merged)
    return out, free


def minimal_models(g: WeightedGraph, bounds: EnumBounds | None = None) -> Enumeration:
    """Minimal forests equivalent to ``g``, within the enumeration bounds."""
    bounds = bounds or EnumBounds()
    require_forest(g)
    m = minimalize(g)
    if len(m) == 0:
        return Enumeration((m,), COMPLETE)
    sk = skeleton_of(m)
    s_graph = sk.source
    w = edge_map(sk)
    sharp = sharp_graph(s_graph, w)
    base = branch_weight_vector(sk)
    edges = w.stored()
    factors = [minimal_in_class(w[e], bounds) for e in edges]
    bounded = any(f.completeness == BOUNDED for f in factors)
    models: dict[bytes, WeightedGraph] = {}
    for choice in itertools.product(*factors):
        words = dict(zip(edges, choice))
        weights = dict(base)
        for (s, t), y in words.items():
            tau = edge_type(s_graph, s, t)
            a, b = _corrected_caps(tau, 0, w[(s, t)], y, 0)
            if tau.left_capped:
                weights[s] += a
            if tau.right_capped:
                weights[t] += b
        choices, free = _weight_choices(sharp, weights, bounds)
        bounded = bounded or free
        for bw in choices:
            h = _realize(s_graph, bw, words, s_graph.next_id)
            models.setdefault(canonical_code(h), h)
    items = tuple(models[k] for k in sorted(models))
    return Enumeration(items, BOUNDED if bounded else COMPLETE)


def fingerprint_report(g: WeightedGraph) -> dict[str, str]:
    """Intermediate data of the decision procedure, for diagnostics."""
    m = minimalize(g)
    if len(m) == 0:
        return {"minimal_vertices": "0", "skeleton": "", "canonical_words": "", "eta": ""}
    sk = skeleton_of(m)
    w = edge_map(sk)
    wc = canonical_edge_map(w)
    eta = canonical_eta(sk)
    return {
        "minimal_vertices": str(len(m)),
        "skeleton": canonical_code(sk.source).decode(),
        "canonical_words": " ".join(f"{s}>{t}:[{','.join(map(str, wc[(s, t)]))}]" for s, t in wc.stored()),
        "eta": " ".join(f"{'/'.join(map(str, c))}={v}" for c, v in eta.values),
    }
