"""Text formats: bracketed chains and the line-based graph format.

Chains are written ``[x1,x2,...]``; on input ``x^k`` stands for ``k`` copies
of ``x``.  Graphs are lines ``v <id> <weight>`` and ``e <id> <id>``, with
``#`` starting a comment.
"""

from __future__ import annotations

import re
import sys
from pathlib import Path
from typing import Sequence

from .graph import GraphError, WeightedGraph, chain
from .sequences import Seq


class ParseError(ValueError):
    def __init__(self, msg: str, line: int = 1, col: int = 1) -> None:
        super().__init__(f"line {line}, column {col}: {msg}")
        self.line = line
        self.col = col


_ITEM = re.compile(r"\s*(-?\d+)\s*(?:\^\s*(\d+)\s*)?$")


def parse_chain(text: str) -> Seq:
    raw = text.strip()
    line = text[: len(text) - len(text.lstrip())].count("\n") + 1
    if not (raw.startswith("[") and raw.endswith("]")):
        raise ParseError("a chain must be written as [x1,x2,...]", line, 1)
    body = raw[1:-1]
    if not body.strip():
        return ()
    out: list[int] = []
    col = 2
    for item in body.split(","):
        m = _ITEM.match(item)
        if not m:
            raise ParseError(f"expected an integer or x^k, got {item.strip()!r}", line, col)
        reps = int(m.group(2)) if m.group(2) is not None else 1
        out.extend([int(m.group(1))] * reps)
        col += len(item) + 1
    return tuple(out)


def parse_graph(text: str) -> WeightedGraph:
    weights: dict[int, int] = {}
    edges: list[tuple[int, int]] = []
    edge_lines: list[int] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        content = line.split("#", 1)[0]
        fields = content.split()
        if not fields:
            continue
        col = line.find(fields[0]) + 1
        tag = fields[0]
        if tag not in ("v", "e") or len(fields) != 3:
            raise ParseError("expected 'v <id> <weight>' or 'e <id> <id>'", lineno, col)
        try:
            a, b = int(fields[1]), int(fields[2])
        except ValueError:
            raise ParseError(f"non-integer field in {content.strip()!r}", lineno, col) from None
        if tag == "v":
            if a in weights:
                raise ParseError(f"duplicate vertex id {a}", lineno, col)
            weights[a] = b
        else:
            edges.append((a, b))
            edge_lines.append(lineno)
    for (a, b), lineno in zip(edges, edge_lines):
        for end in (a, b):
            if end not in weights:
                raise ParseError(f"edge endpoint {end} is not a declared vertex", lineno, 1)
        if a == b:
            raise ParseError(f"loop at vertex {a}", lineno, 1)
    try:
        return WeightedGraph(weights, edges)
    except GraphError as exc:
        raise ParseError(str(exc)) from None


def parse_input(text: str) -> Seq | WeightedGraph:
    """A chain when the text starts with ``[``, a graph otherwise."""
    if text.lstrip().startswith("["):
        return parse_chain(text)
    return parse_graph(text)


def as_graph(value: Seq | WeightedGraph) -> WeightedGraph:
    return value if isinstance(value, WeightedGraph) else chain(value)


def format_seq(xs: Sequence[int]) -> str:
    return "[" + ",".join(str(x) for x in xs) + "]"


def format_graph(g: WeightedGraph) -> str:
    lines = [f"v {v} {g.weight(v)}" for v in g.vertices()]
    lines += [f"e {a} {b}" for a, b in g.edges()]
    return "\n".join(lines)


def read_source(arg: str) -> str:
    """Literal chain text, ``-`` for standard input, or a file path."""
    if arg.lstrip().startswith("["):
        return arg
    if arg == "-":
        return sys.stdin.read()
    try:
        return Path(arg).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {arg}: {exc.strerror}") from None
