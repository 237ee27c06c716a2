"""Command-line front end.

Reports are ``key: value`` lines; anything meant for humans follows a ``---``
line.  Exit status is 0 for yes/equivalent, 1 for no, 2 for errors.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .classify import (
    canonical_forest,
    fingerprint,
    fingerprint_report,
    minimal_models,
)
from .enumeration import EnumBounds, is_geometric_chain, minimal_in_class
from .graph import GraphError, WeightedGraph, canonical_code, is_forest, is_minimal
from .invariants import det_graph, hodge_graph
from .oracle import SearchBounds, Verdict, oracle_forests_equivalent, oracle_seq_equivalent
from .sequences import (
    canonical_form,
    chain_equivalent,
    class_depth,
    class_is_prime,
    seq_det,
    seq_equivalent,
    seq_hodge,
    sub,
    sub_bar,
    transpose,
)
from .skeleton import skeleton_of
from .textio import ParseError, as_graph, format_graph, format_seq, parse_input, read_source

YES, NO, ERROR = 0, 1, 2


class Report:
    def __init__(self) -> None:
        self.lines: list[str] = []
        self.notes: list[str] = []

    def kv(self, key: str, value: object) -> None:
        self.lines.append(f"{key}: {value}")

    def raw(self, text: str) -> None:
        self.lines.extend(text.splitlines())

    def note(self, text: str) -> None:
        self.notes.append(text)

    def render(self) -> str:
        out = list(self.lines)
        if self.notes:
            out.append("---")
            out.extend(self.notes)
        return "\n".join(out) + "\n"


def _load(arg: str):
    return parse_input(read_source(arg))


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


def cmd_invariants(args, rep: Report) -> int:
    value = _load(args.input)
    g = as_graph(value)
    rep.kv("kind", "chain" if isinstance(value, tuple) else "graph")
    rep.kv("vertices", len(g))
    rep.kv("det", det_graph(g))
    rep.kv("hodge", hodge_graph(g))
    rep.kv("forest", _yn(is_forest(g)))
    rep.kv("minimal", _yn(is_minimal(g)))
    if isinstance(value, tuple):
        s = sub(value)
        rep.kv("sub", f"{s.x} {s.y}")
        rep.kv("sub_bar", " ".join(map(str, sub_bar(value))))
        rep.kv("canonical", format_seq(canonical_form(value).terms))
        rep.kv("prime", _yn(class_is_prime(value)))
    return YES


def cmd_canonical(args, rep: Report) -> int:
    value = _load(args.input)
    if isinstance(value, tuple):
        c = canonical_form(value)
        rep.kv("canonical", format_seq(c.terms))
        rep.kv("transpose", format_seq(transpose(c).terms))
        rep.kv("zeros", c.r)
        rep.kv("tail", format_seq(c.tail))
        return YES
    h = canonical_forest(value)
    rep.kv("vertices", len(h))
    rep.raw(format_graph(h))
    return YES


def cmd_equiv(args, rep: Report) -> int:
    a, b = _load(args.first), _load(args.second)
    ga, gb = as_graph(a), as_graph(b)
    if isinstance(a, tuple) and isinstance(b, tuple):
        rep.kv("sequence_equivalent", _yn(seq_equivalent(a, b)))
        rep.kv("chain_equivalent", _yn(chain_equivalent(a, b)))
    for tag, g in (("a", ga), ("b", gb)):
        for key, val in fingerprint_report(g).items():
            rep.kv(f"{tag}.{key}", val)
    fa, fb = fingerprint(ga), fingerprint(gb)
    same = fa == fb
    rep.kv("a.fingerprint", fa.text())
    rep.kv("b.fingerprint", fb.text())
    rep.kv("equivalent", _yn(same))
    return YES if same else NO


def _bounds(args) -> EnumBounds:
    return EnumBounds(c_max=args.c_max, n_max=args.n_max, x_min=args.x_min, x_max=args.x_max)


def cmd_minimal(args, rep: Report) -> int:
    value = _load(args.input)
    b = _bounds(args)
    if isinstance(value, tuple):
        res = minimal_in_class(value, b)
        rep.kv("class_depth", class_depth(value))
        rep.kv("count", len(res))
        rep.kv("completeness", res.completeness)
        for x in res:
            rep.kv("item", format_seq(x))
        return YES
    res = minimal_models(value, b)
    rep.kv("count", len(res))
    rep.kv("completeness", res.completeness)
    for i, g in enumerate(res):
        rep.kv("model", i)
        rep.raw(format_graph(g))
    return YES


def cmd_skeleton(args, rep: Report) -> int:
    g = as_graph(_load(args.input))
    sk = skeleton_of(g)
    rep.kv("code", canonical_code(sk.source).decode())
    rep.raw(format_graph(sk.source))
    for v in sk.source.vertices():
        rep.raw(f"m {v} {sk.vmap[v]}")
    return YES


def cmd_geometric(args, rep: Report) -> int:
    value = _load(args.input)
    if not isinstance(value, tuple):
        raise ParseError("geometric expects a chain [x1,...]")
    ok = is_geometric_chain(value)
    rep.kv("hodge", seq_hodge(value))
    rep.kv("det", seq_det(value))
    rep.kv("geometric", _yn(ok))
    return YES if ok else NO


def cmd_oracle_equiv(args, rep: Report) -> int:
    a, b = _load(args.first), _load(args.second)
    if isinstance(a, tuple) and isinstance(b, tuple):
        bounds = SearchBounds(args.max_len, args.w_min, args.w_max, args.budget)
        verdict = oracle_seq_equivalent(a, b, bounds)
        rep.kv("mode", "sequence")
    else:
        bounds = SearchBounds(args.max_vertices, args.w_min, args.w_max, args.budget)
        verdict = oracle_forests_equivalent(as_graph(a), as_graph(b), bounds)
        rep.kv("mode", "forest")
    rep.kv("verdict", verdict.value)
    if verdict is Verdict.NO_WITHIN_BOUNDS:
        rep.note("The bounded search did not connect the inputs; this is not a proof of inequivalence.")
    elif verdict is Verdict.BUDGET_EXHAUSTED:
        rep.note("The node budget ran out before the search finished.")
    return YES if verdict is Verdict.YES else NO


def cmd_fingerprint(args, rep: Report) -> int:
    g = as_graph(_load(args.input))
    rep.kv("fingerprint", fingerprint(g).text())
    return YES


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="blowcalc", description="Blow-up calculus on weighted forests and chains.")
    sub_p = p.add_subparsers(dest="command", required=True)

    def one(name: str, fn, help_: str) -> argparse.ArgumentParser:
        sp = sub_p.add_parser(name, help=help_)
        sp.add_argument("input", help="chain literal like [0^2,-2], a graph file, or - for stdin")
        sp.set_defaults(fn=fn)
        return sp

    def two(name: str, fn, help_: str) -> argparse.ArgumentParser:
        sp = sub_p.add_parser(name, help=help_)
        sp.add_argument("first")
        sp.add_argument("second")
        sp.set_defaults(fn=fn)
        return sp

    one("invariants", cmd_invariants, "determinant, Hodge number and related data")
    one("canonical", cmd_canonical, "canonical sequence or canonical forest")
    two("equiv", cmd_equiv, "decide equivalence of two forests or chains")
    mp = one("minimal", cmd_minimal, "enumerate minimal models")
    mp.add_argument("--c-max", type=int, default=6)
    mp.add_argument("--n-max", type=int, default=3)
    mp.add_argument("--x-min", type=int, default=-5)
    mp.add_argument("--x-max", type=int, default=4)
    one("skeleton", cmd_skeleton, "skeleton and its vertex map")
    one("geometric", cmd_geometric, "whether a chain is geometric")
    op = two("oracle-equiv", cmd_oracle_equiv, "bounded brute-force equivalence search")
    op.add_argument("--max-len", type=int, default=6)
    op.add_argument("--max-vertices", type=int, default=6)
    op.add_argument("--w-min", type=int, default=-4)
    op.add_argument("--w-max", type=int, default=2)
    op.add_argument("--budget", type=int, default=200_000)
    one("fingerprint", cmd_fingerprint, "printable complete invariant")
    return p


def run(argv: Sequence[str]) -> tuple[int, str, str]:
    """Execute a command; returns (exit code, stdout text, stderr text)."""
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return (ERROR if exc.code else YES), "", ""
    rep = Report()
    try:
        code = args.fn(args, rep)
    except (ParseError, GraphError, ValueError, OverflowError) as exc:
        return ERROR, "", f"error: {exc}\n"
    return code, rep.render(), ""


def main(argv: Sequence[str] | None = None) -> int:
    code, out, err = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
