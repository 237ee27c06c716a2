"""The blow-up calculus on finite integer sequences and linear chains.

Sequences are plain ``tuple[int, ...]`` values.  A sequence ``X`` stands for
the chain ``[X]``; the determinant ``det_i(X)`` is the determinant of the
suffix chain starting after position ``i`` and obeys

    det_i(X) = -x_{i+1} * det_{i+1}(X) - det_{i+2}(X),   det_n = 1, det_{>n} = 0.

Equivalence classes are represented by their canonical sequence
``(0^r, A)`` with ``A`` admissible (all terms <= -2).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, NamedTuple, Sequence

from . import kernels
from .graph import chain
from .invariants import hodge_graph

Seq = tuple[int, ...]


class SequenceError(ValueError):
    pass


def as_seq(xs: Iterable[int]) -> Seq:
    return tuple(int(x) for x in xs)


def reverse(xs: Sequence[int]) -> Seq:
    return tuple(reversed(xs))


# ---------------------------------------------------------------------------
# determinants


def seq_det(xs: Sequence[int]) -> int:
    return kernels.det_pair(tuple(xs))[0]


def seq_det_i(xs: Sequence[int], i: int) -> int:
    if i < 0:
        raise SequenceError("index must be nonnegative")
    return kernels.det_index(tuple(xs), i)


def seq_det_star(xs: Sequence[int]) -> int:
    """Determinant of the interior (x_2, ..., x_{n-1})."""
    n = len(xs)
    if n > 2:
        return seq_det(tuple(xs[1:-1]))
    return 1 if n == 2 else 0


class SubPair(NamedTuple):
    x: int  # det_1(X)
    y: int  # det_1(X reversed)
    d: int  # det(X)


def sub(xs: Sequence[int]) -> SubPair:
    t = tuple(xs)
    d, x = kernels.det_pair(t)
    _, y = kernels.det_pair(t[::-1])
    return SubPair(x, y, d)


def sub_bar(xs: Sequence[int]) -> tuple[int, int]:
    """``sub`` reduced modulo |det|; raw values when the determinant is zero."""
    s = sub(xs)
    if s.d == 0:
        return s.x, s.y
    m = abs(s.d)
    return s.x % m, s.y % m


@lru_cache(maxsize=1 << 16)
def seq_hodge(xs: Seq) -> int:
    return hodge_graph(chain(xs))


@lru_cache(maxsize=1 << 16)
def class_invariants(xs: Seq) -> tuple[int, int, tuple[int, int]]:
    """(hodge, det, reduced sub pair): a complete invariant of the class."""
    return seq_hodge(xs), seq_det(xs), sub_bar(xs)


# ---------------------------------------------------------------------------
# blow-ups


def seq_blow_ups(xs: Sequence[int]) -> list[Seq]:
    """Left, interior and right blow-ups, in that order; ``()`` blows up to ``(-1,)``."""
    x = list(xs)
    n = len(x)
    if n == 0:
        return [(-1,)]
    out = [(-1, x[0] - 1, *x[1:])]
    for i in range(n - 1):
        out.append((*x[:i], x[i] - 1, -1, x[i + 1] - 1, *x[i + 2 :]))
    out.append((*x[:-1], x[-1] - 1, -1))
    return out


def seq_blow_down(xs: Sequence[int], position: int) -> Seq:
    """Remove the -1 term at ``position`` (0-based), adding 1 to its neighbours."""
    x = list(xs)
    n = len(x)
    if not 0 <= position < n or x[position] != -1:
        raise SequenceError(f"no -1 term at position {position}")
    if n == 1:
        return ()
    if position == 0:
        return (x[1] + 1, *x[2:])
    if position == n - 1:
        return (*x[:-2], x[-2] + 1)
    return (*x[: position - 1], x[position - 1] + 1, x[position + 1] + 1, *x[position + 2 :])


def is_minimal_seq(xs: Sequence[int]) -> bool:
    return -1 not in xs


def contract(xs: Sequence[int]) -> Seq:
    """Blow down the leftmost -1 term until none remains."""
    x = tuple(xs)
    while -1 in x:
        x = seq_blow_down(x, x.index(-1))
    return x


def contracts_to(xs: Sequence[int], target: Sequence[int], keep_left: bool = False, keep_right: bool = False) -> bool:
    """Whether some sequence of blow-downs turns ``xs`` into ``target``.

    ``keep_left``/``keep_right`` forbid blowing down the first/last term of the
    current sequence.  The search is exhaustive over all contraction orders.
    """
    goal = tuple(target)
    seen: set[Seq] = set()
    stack = [tuple(xs)]
    while stack:
        x = stack.pop()
        if x == goal:
            return True
        if x in seen or len(x) <= len(goal):
            continue
        seen.add(x)
        n = len(x)
        for i, t in enumerate(x):
            if t != -1:
                continue
            if (i == 0 and keep_left) or (i == n - 1 and keep_right):
                continue
            stack.append(seq_blow_down(x, i))
    return False


# ---------------------------------------------------------------------------
# canonical sequences


@dataclass(frozen=True, order=True)
class CanonicalSeq:
    """The canonical sequence ``(0^r, A)``."""

    r: int
    tail: Seq = ()

    def __post_init__(self) -> None:
        if self.r < 0 or any(t > -2 for t in self.tail):
            raise SequenceError("tail must be admissible and r nonnegative")
        if self.tail and self.r % 2:
            raise SequenceError("r must be even when the tail is nonempty")

    @property
    def terms(self) -> Seq:
        return (0,) * self.r + self.tail

    def __iter__(self):
        return iter(self.terms)

    def __len__(self) -> int:
        return self.r + len(self.tail)


def admissible_from_pair(r0: int, r1: int) -> Seq:
    """The admissible sequence with determinant ``r0`` and det_1 equal to ``r1``."""
    if not (r0 >= 1 and 0 <= r1 < r0 and math.gcd(r0, r1) == 1):
        raise SequenceError(f"need 0 <= r1 < r0 with gcd 1, got ({r0}, {r1})")
    out = []
    while r0 != 1:
        q = -(-r0 // r1)
        out.append(-q)
        r0, r1 = r1, q * r1 - r0
    return tuple(out)


@lru_cache(maxsize=1 << 16)
def _canonical(xs: Seq) -> CanonicalSeq:
    n = seq_hodge(xs)
    det, det1 = kernels.det_pair(xs)
    d = abs(det)
    if d == 0:
        return CanonicalSeq(2 * n - 1)
    s = ((-1) ** n * det1) % d
    out = CanonicalSeq(2 * n, admissible_from_pair(d, s if d > 1 else 0))
    # the second coordinate of the reduced pair is not used to build the
    # result, so it is checked here along with the determinant
    if seq_det(out.terms) != det or sub_bar(out.terms) != sub_bar(xs):
        raise AssertionError(f"canonical form of {xs} fails the invariant check")
    return out


def canonical_form(xs: Sequence[int]) -> CanonicalSeq:
    return _canonical(tuple(xs))


def seq_equivalent(xs: Sequence[int], ys: Sequence[int]) -> bool:
    return class_invariants(tuple(xs)) == class_invariants(tuple(ys))


def transpose(c: CanonicalSeq) -> CanonicalSeq:
    return CanonicalSeq(c.r, reverse(c.tail))


def chain_equivalent(xs: Sequence[int], ys: Sequence[int]) -> bool:
    return seq_equivalent(xs, ys) or seq_equivalent(xs, reverse(ys))


def delta(xs: Sequence[int], ys: Sequence[int]) -> int:
    """Endpoint weight correction between two equivalent sequences."""
    x, y = tuple(xs), tuple(ys)
    if not seq_equivalent(x, y):
        raise SequenceError(f"{x} and {y} are not equivalent")
    d, dx = kernels.det_pair(x)
    if d != 0:
        _, dy = kernels.det_pair(y)
        q, rem = divmod(dx - dy, d)
        if rem:
            raise AssertionError(f"inexact division computing delta({x}, {y})")
        return q
    n = seq_hodge(x)
    return (-1) ** (n - 1) * (seq_det_star(x) - seq_det_star(y))


# ---------------------------------------------------------------------------
# path types and endpoint-restricted equivalence


class PathType(enum.Enum):
    """Which ends of a path belong to branch vertices ('+') or are free ('-')."""

    MM = "(-,-)"
    PM = "(+,-)"
    MP = "(-,+)"
    PP = "(+,+)"

    @property
    def left_capped(self) -> bool:
        return self in (PathType.PM, PathType.PP)

    @property
    def right_capped(self) -> bool:
        return self in (PathType.MP, PathType.PP)

    @property
    def min_length(self) -> int:
        return self.left_capped + self.right_capped

    @classmethod
    def from_ends(cls, left_branch: bool, right_branch: bool) -> "PathType":
        return {
            (False, False): cls.MM,
            (True, False): cls.PM,
            (False, True): cls.MP,
            (True, True): cls.PP,
        }[(left_branch, right_branch)]

    def reversed(self) -> "PathType":
        return PathType.from_ends(self.right_capped, self.left_capped)

    def __str__(self) -> str:
        return self.value


def _split_caps(tau: PathType, word: Seq) -> tuple[int | None, Seq, int | None]:
    if len(word) < tau.min_length or (tau is not PathType.MM and not word):
        raise SequenceError(f"{word} is too short for type {tau}")
    a = word[0] if tau.left_capped else None
    b = word[-1] if tau.right_capped else None
    core = word[1 if tau.left_capped else 0 : len(word) - (1 if tau.right_capped else 0)]
    return a, core, b


def tau_equivalent(tau: PathType, a_word: Sequence[int], b_word: Sequence[int]) -> bool:
    """Equivalence under blow-ups that never touch a capped end."""
    a, x, b = _split_caps(tau, tuple(a_word))
    alpha, y, beta = _split_caps(tau, tuple(b_word))
    if not seq_equivalent(x, y):
        return False
    if tau is PathType.MM:
        return True
    d = seq_det(x)
    if d == 0:
        if tau is PathType.PP:
            return alpha + beta == a + b + delta(x, y)
        return True
    if tau.left_capped and alpha != a + delta(x, y):
        return False
    if tau.right_capped and beta != b + delta(reverse(x), reverse(y)):
        return False
    return True


# ---------------------------------------------------------------------------
# prime classes and the successor map


def class_is_prime(xs: Sequence[int]) -> bool:
    return canonical_form(xs).r <= 1


def class_successor(xs: Sequence[int]) -> CanonicalSeq:
    c = canonical_form(xs)
    return CanonicalSeq(c.r + 2, c.tail)


def class_predecessor(xs: Sequence[int]) -> CanonicalSeq | None:
    c = canonical_form(xs)
    if c.r < 2:
        return None
    return CanonicalSeq(c.r - 2, c.tail)


def class_depth(xs: Sequence[int]) -> int:
    """Number of predecessor steps from the class down to its prime class."""
    return canonical_form(xs).r // 2
