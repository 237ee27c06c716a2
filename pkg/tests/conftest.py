import os
import random

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from blowcalc.graph import WeightedGraph

settings.register_profile(
    "default",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.register_profile("thorough", max_examples=500, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def seqs(min_size=0, max_size=6, lo=-5, hi=3):
    return st.lists(st.integers(lo, hi), min_size=min_size, max_size=max_size).map(tuple)


@st.composite
def forests(draw, max_vertices=7, lo=-5, hi=3):
    n = draw(st.integers(0, max_vertices))
    weights = {v: draw(st.integers(lo, hi)) for v in range(n)}
    edges = []
    for v in range(1, n):
        parent = draw(st.integers(-1, v - 1))
        if parent >= 0:
            edges.append((parent, v))
    return WeightedGraph(weights, edges)


def random_forest(rng: random.Random, max_vertices=8, lo=-5, hi=3) -> WeightedGraph:
    n = rng.randint(1, max_vertices)
    weights = {v: rng.randint(lo, hi) for v in range(n)}
    edges = []
    for v in range(1, n):
        parent = rng.randint(-1, v - 1)
        if parent >= 0:
            edges.append((parent, v))
    return WeightedGraph(weights, edges)


# acceptance bookkeeping: one line per criterion in the terminal summary

_ACCEPTANCE: dict[int, tuple[bool, str]] = {}


@pytest.fixture
def record():
    def _record(number: int, ok: bool, detail: str = "") -> None:
        _ACCEPTANCE[number] = (ok, detail)
        print(f"criterion {number}: {'PASS' if ok else 'FAIL'} {detail}".rstrip())

    return _record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_ACCEPTANCE):
        ok, detail = _ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}".rstrip())
