"""Exact invariants of the intersection form: determinant and Hodge number."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import kernels
from .graph import WeightedGraph


@dataclass(frozen=True)
class IntersectionMatrix:
    """Weights on the diagonal, 1 for adjacent pairs; rows follow ``basis``."""

    basis: tuple[int, ...]
    rows: tuple[tuple[int, ...], ...]

    @property
    def order(self) -> int:
        return len(self.basis)


def intersection_matrix(g: WeightedGraph) -> IntersectionMatrix:
    basis = tuple(g.vertices())
    pos = {v: i for i, v in enumerate(basis)}
    rows = [[0] * len(basis) for _ in basis]
    for v in basis:
        rows[pos[v]][pos[v]] = g.weight(v)
    for a, b in g.edges():
        rows[pos[a]][pos[b]] = rows[pos[b]][pos[a]] = 1
    return IntersectionMatrix(basis, tuple(tuple(r) for r in rows))


def det_graph(g: WeightedGraph) -> int:
    """det(-M), with the empty graph having determinant 1."""
    m = intersection_matrix(g)
    return kernels.bareiss_det([[-x for x in r] for r in m.rows])


def congruence_diagonal(rows: list[list[int]] | tuple[tuple[int, ...], ...]) -> list[Fraction]:
    """Diagonal of a symmetric matrix after exact congruence diagonalization.

    A zero pivot is first swapped with a later nonzero diagonal entry.  When
    every remaining diagonal entry is zero but the row is not, the symmetric
    move row_i += row_j, col_i += col_j produces the pivot 2*A[i][j].
    """
    a = [[Fraction(x) for x in r] for r in rows]
    remaining = list(range(len(a)))
    diag: list[Fraction] = []
    while remaining:
        i = remaining[0]
        if a[i][i] == 0:
            j = next((j for j in remaining[1:] if a[j][j] != 0), None)
            if j is not None:
                i = j
            else:
                j = next((j for j in remaining[1:] if a[i][j] != 0), None)
                if j is None:
                    diag.append(Fraction(0))
                    remaining.remove(i)
                    continue
                for k in remaining:
                    a[i][k] += a[j][k]
                for k in remaining:
                    a[k][i] += a[k][j]
        p = a[i][i]
        remaining.remove(i)
        col = {r: a[r][i] for r in remaining}
        for r in remaining:
            f = col[r] / p
            if f:
                ar = a[r]
                for c in remaining:
                    ar[c] -= f * a[i][c]
        diag.append(p)
    return diag


def signature(g: WeightedGraph) -> tuple[int, int, int]:
    """(n_plus, n_zero, n_minus) of the intersection form."""
    d = congruence_diagonal(intersection_matrix(g).rows)
    return sum(x > 0 for x in d), sum(x == 0 for x in d), sum(x < 0 for x in d)


def hodge_graph(g: WeightedGraph) -> int:
    pos, zero, _ = signature(g)
    return pos + zero
