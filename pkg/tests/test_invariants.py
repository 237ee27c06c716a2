import numpy as np
import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from blowcalc.graph import WeightedGraph, blow_up_edge, blow_up_free, blow_up_vertex, chain, disjoint_union
from blowcalc.invariants import congruence_diagonal, det_graph, hodge_graph, intersection_matrix, signature
from blowcalc.sequences import seq_det

from conftest import forests, seqs


def test_matrix_examples():
    m = intersection_matrix(chain([-2, -2]))
    assert [list(r) for r in m.rows] == [[-2, 1], [1, -2]]
    assert intersection_matrix(WeightedGraph()).order == 0


@pytest.mark.parametrize("ws,d", [([], 1), ([-2, -2], 3), ([0, 0, 0], 0), ([-2], 2), ([1], -1)])
def test_det_examples(ws, d):
    assert det_graph(chain(ws)) == d


@pytest.mark.parametrize("ws,h", [([-2], 0), ([1], 1), ([0, 0, 0], 2), ([], 0), ([0], 1)])
def test_hodge_examples(ws, h):
    assert hodge_graph(chain(ws)) == h


def test_congruence_needs_off_diagonal_pivot():
    # zero diagonal everywhere: pivot must come from an off-diagonal entry
    d = congruence_diagonal([[0, 1], [1, 0]])
    assert sum(1 for x in d if x > 0) == 1 and sum(1 for x in d if x < 0) == 1


def _sympy_det(g):
    rows = intersection_matrix(g).rows
    if not rows:
        return 1
    return int(sympy.Matrix([[-x for x in r] for r in rows]).det())


def _numpy_signature(g):
    rows = intersection_matrix(g).rows
    if not rows:
        return 0, 0, 0
    ev = np.linalg.eigvalsh(np.array(rows, dtype=float))
    return int((ev > 1e-9).sum()), int((np.abs(ev) <= 1e-9).sum()), int((ev < -1e-9).sum())


@given(forests(max_vertices=8))
def test_det_matches_sympy(g):
    assert det_graph(g) == _sympy_det(g)


@given(seqs(max_size=9))
def test_det_matches_recursion(xs):
    assert det_graph(chain(xs)) == seq_det(xs)


@given(forests(max_vertices=8))
def test_signature_matches_eigenvalues(g):
    assert signature(g) == _numpy_signature(g)


@given(forests(max_vertices=7))
def test_hodge_is_positive_plus_null(g):
    pos, null, _ = signature(g)
    assert hodge_graph(g) == pos + null


@given(forests(max_vertices=6), forests(max_vertices=6))
def test_disjoint_union_laws(g, h):
    u = disjoint_union(g, h)
    assert det_graph(u) == det_graph(g) * det_graph(h)
    assert hodge_graph(u) == hodge_graph(g) + hodge_graph(h)


@given(seqs(max_size=5), st.integers(0, 3))
def test_zero_padding_laws(a, i):
    padded = (0,) * (2 * i) + a
    assert det_graph(chain(padded)) == (-1) ** i * det_graph(chain(a))
    assert hodge_graph(chain(padded)) == i + hodge_graph(chain(a))


@given(forests(max_vertices=7))
def test_hodge_zero_iff_positive_definite(g):
    rows = intersection_matrix(g).rows
    n = len(rows)
    minors = [sympy.Matrix([[-x for x in r[:k]] for r in rows[:k]]).det() for k in range(1, n + 1)]
    assert (hodge_graph(g) == 0) == all(m > 0 for m in minors)


@given(forests(max_vertices=7), st.data())
def test_invariant_under_blow_ups(g, data):
    kinds = ["free"] + (["vertex"] if len(g) else []) + (["edge"] if g.edges() else [])
    kind = data.draw(st.sampled_from(kinds))
    if kind == "free":
        h, _ = blow_up_free(g)
    elif kind == "vertex":
        h, _ = blow_up_vertex(g, data.draw(st.sampled_from(g.vertices())))
    else:
        h, _ = blow_up_edge(g, *data.draw(st.sampled_from(g.edges())))
    assert det_graph(h) == det_graph(g)
    assert hodge_graph(h) == hodge_graph(g)
