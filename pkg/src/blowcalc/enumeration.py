"""Minimal sequences of an equivalence class.

A class is prime when its canonical sequence has at most one leading zero;
prime classes have a single minimal element.  For the successor of a prime
class with minimal element ``M``, the minimal elements are the sequences
listed by :func:`m_oplus`.  Those families are infinite, so enumeration takes
an :class:`EnumBounds` and results are flagged "bounded-complete".
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Sequence

from .sequences import (
    Seq,
    SequenceError,
    admissible_from_pair,
    canonical_form,
    class_depth,
    contract,
    contracts_to,
    is_minimal_seq,
    reverse,
    seq_equivalent,
    seq_hodge,
)

COMPLETE = "complete"
BOUNDED = "bounded-complete"


class UnsupportedDepthError(ValueError):
    pass


@dataclass(frozen=True)
class EnumBounds:
    c_max: int = 6
    n_max: int = 3
    x_min: int = -5
    x_max: int = 4

    def __post_init__(self) -> None:
        if self.c_max < 1 or self.n_max < 0 or self.x_min > self.x_max:
            raise ValueError("need c_max >= 1, n_max >= 0 and x_min <= x_max")

    @property
    def x_range(self) -> range:
        return range(self.x_min, self.x_max + 1)


@dataclass(frozen=True)
class Enumeration:
    """A sorted, duplicate-free list of results with a completeness flag."""

    items: tuple
    completeness: str

    def __iter__(self) -> Iterator:
        return iter(self.items)

    def __len__(self) -> int:
        return len(self.items)

    def __contains__(self, x: object) -> bool:
        return x in self.items


# ---------------------------------------------------------------------------
# E-sets


@dataclass(frozen=True, order=True)
class ParamTriple:
    n: int
    p: int
    c: int

    @property
    def ncp(self) -> int:
        return self.n * self.c + self.p


@dataclass(frozen=True)
class EPair:
    x: Seq
    y: Seq
    kind: str  # "E", "aE", "Ea" or "aEb"
    alpha: int | None
    beta: int | None
    triple: ParamTriple


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def leading_from_pair(r0: int, r1: int) -> Seq:
    """The sequence ``(x1, N)`` with ``x1 != -1``, ``N`` admissible, det ``r0`` and det_1 ``r1``."""
    if r1 <= 0 or math.gcd(r0, r1) != 1 or _ceil_div(r0, r1) == 1:
        raise SequenceError(f"({r0}, {r1}) is not a valid determinant pair for a leading-term sequence")
    q = _ceil_div(r0, r1)
    return (-q, *admissible_from_pair(r1, q * r1 - r0))


def param_triples(bounds: EnumBounds) -> Iterator[ParamTriple]:
    for c in range(1, bounds.c_max + 1):
        for p in range(1, c + 1):
            if math.gcd(p, c) != 1:
                continue
            for n in range(bounds.n_max + 1):
                yield ParamTriple(n, p, c)


def _pair_for(kind: str, t: ParamTriple, alpha: int | None, beta: int | None) -> tuple[Seq, Seq] | None:
    n, p, c, m = t.n, t.p, t.c, t.ncp
    if kind in ("aE", "Ea", "aEb") and _ceil_div(c, m) == alpha + 1:
        return None
    if kind == "aEb" and n == beta:
        return None
    if kind == "E":
        return admissible_from_pair(m, (-c) % m), reverse(admissible_from_pair(c, c - p))
    if kind == "aE":
        return leading_from_pair(c - alpha * m, m), reverse(admissible_from_pair(c, c - p))
    if kind == "Ea":
        return admissible_from_pair(c, c - p), reverse(leading_from_pair(c - alpha * m, m))
    if kind == "aEb":
        return leading_from_pair(c - alpha * m, m), reverse(leading_from_pair((n - beta) * c + p, c))
    raise ValueError(f"unknown kind {kind!r}")


def verify_pair(kind: str, x: Seq, y: Seq, alpha: int | None = None, beta: int | None = None) -> bool:
    """Membership test by restricted contraction of ``(X, -1, Y)``."""
    z = (*x, -1, *y)
    if kind == "E":
        return contracts_to(z, ())
    if kind == "aE":
        return contracts_to(z, (alpha,), keep_left=True)
    if kind == "Ea":
        return contracts_to(z, (alpha,), keep_right=True)
    if kind == "aEb":
        return contracts_to(z, (alpha, beta), keep_left=True, keep_right=True)
    raise ValueError(f"unknown kind {kind!r}")


def e_pairs(kind: str, bounds: EnumBounds, alpha: int | None = None, beta: int | None = None) -> list[EPair]:
    """The pairs parametrized by triples with ``c <= c_max`` and ``n <= n_max``.

    ``kind`` is "E", "aE" (left parameter ``alpha``), "Ea" (right parameter
    ``alpha``) or "aEb" (both).  Each pair is checked by contraction before
    it is returned.
    """
    if kind in ("aE", "Ea", "aEb") and alpha is None:
        raise ValueError(f"kind {kind} needs alpha")
    if kind == "aEb" and beta is None:
        raise ValueError("kind aEb needs beta")
    out = []
    for t in param_triples(bounds):
        pair = _pair_for(kind, t, alpha, beta)
        if pair is None:
            continue
        x, y = pair
        if not verify_pair(kind, x, y, alpha, beta):
            raise AssertionError(f"{kind} pair {x}, {y} from {t} fails contraction")
        out.append(EPair(x, y, kind, alpha, beta, t))
    return out


# ---------------------------------------------------------------------------
# minimal elements of successor classes


def _nonneg_split(total: int, bounds: EnumBounds) -> Iterator[tuple[int, int]]:
    """Pairs (x, y) with x + y = total, x in range, neither equal to -1."""
    for x in bounds.x_range:
        y = total - x
        if x != -1 and y != -1:
            yield x, y


def _contracted(xs: Seq) -> Seq:
    out = contract(xs)
    if not is_minimal_seq(out):
        raise AssertionError(f"contraction of {xs} is not minimal")
    return out


def m_oplus(m: Sequence[int], bounds: EnumBounds) -> Enumeration:
    """Minimal elements of the successor of the class of the minimal sequence ``m``."""
    m = tuple(m)
    if not is_minimal_seq(m):
        raise SequenceError(f"{m} is not minimal")
    out: set[Seq] = set()
    if not m:
        out.add((1,))
        for x in bounds.x_range:
            if x != -1:
                out.add((0, x))
                out.add((x, 0))
        for e in e_pairs("E", bounds):
            for x, y in _nonneg_split(-1, bounds):
                out.add((*e.x, x, 0, y, *e.y))
    else:
        k = len(m)
        for x in bounds.x_range:
            if x != -1:
                out.add((0, x, *m))
                out.add((*m, x, 0))
        out.add(_contracted((0, -1, *m)))
        out.add(_contracted((*m, -1, 0)))
        for j in range(k):
            head, mj, rest = m[:j], m[j], m[j + 1 :]
            for x, y in _nonneg_split(mj, bounds):
                out.add((*head, x, 0, y, *rest))
            out.add(_contracted((*head, -1, 0, mj + 1, *rest)))
            out.add(_contracted((*head, mj + 1, 0, -1, *rest)))
        splits = list(_nonneg_split(-1, bounds))
        for e in e_pairs("Ea", bounds, alpha=m[0]):
            for x, y in splits:
                out.add((*e.x, x, 0, y, *e.y, *m[1:]))
        for i in range(k - 1):
            for e in e_pairs("aEb", bounds, alpha=m[i], beta=m[i + 1]):
                for x, y in splits:
                    out.add((*m[:i], *e.x, x, 0, y, *e.y, *m[i + 2 :]))
        for e in e_pairs("aE", bounds, alpha=m[-1]):
            for x, y in splits:
                out.add((*m[:-1], *e.x, x, 0, y, *e.y))
    return Enumeration(tuple(sorted(out, key=lambda s: (len(s), s))), BOUNDED)


def minimal_in_class(xs: Sequence[int], bounds: EnumBounds | None = None) -> Enumeration:
    """Minimal sequences equivalent to ``xs`` (prime classes and their successors)."""
    bounds = bounds or EnumBounds()
    c = canonical_form(xs)
    depth = class_depth(xs)
    if depth == 0:
        return Enumeration((c.terms,), COMPLETE)
    if depth > 1:
        chain = " -> ".join(str(list((0,) * r + c.tail)) for r in range(c.r % 2, c.r + 1, 2))
        raise UnsupportedDepthError(
            f"class of {list(xs)} is {depth} successor steps above its prime class ({chain}); "
            "only prime classes and their immediate successors are supported"
        )
    return m_oplus(c.terms[2:], bounds)


def is_geometric_chain(xs: Sequence[int]) -> bool:
    """Whether the chain has Hodge number at most 1 or is equivalent to [0,0,0]."""
    x = tuple(xs)
    return seq_hodge(x) <= 1 or seq_equivalent(x, (0, 0, 0))
