"""Command-line interface.

Exit codes: 0 yes, 1 no, 2 invalid input, 3 a size bound was exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Callable

from .base_cases import DEFAULT_PRIME_BOUND
from .errors import BoundExceeded, CircleRepError, InvalidPartial, TooLarge
from .extend import extend
from .graph import Graph
from .io import parse_graph, parse_ordering, parse_sim, parse_word_text, sim_to_json
from .oracle import DEFAULT_ORACLE_BOUND, oracle_extend, random_circle_graph
from .rng import XorShift64Star
from .simrep import DEFAULT_FPT_BOUND, extract_ordering, reduce_total_ordering, solve_sim
from .svg import render_svg
from .words import EMPTY, CircularWord, canonical_word, circular_equal, induced_subword, realizes

YES, NO, INVALID, BOUND = 0, 1, 2, 3


class CheckFailed(CircleRepError):
    pass


class InvalidInput(CircleRepError):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InvalidInput(f"cannot read {path}: {exc.strerror}") from exc


def _words(w: CircularWord) -> str:
    return " ".join(canonical_word(w).tokens)


def _check(g: Graph, partial: CircularWord, w: CircularWord) -> None:
    if not realizes(w, g):
        raise CheckFailed(f"{w} does not represent the graph")
    if not circular_equal(induced_subword(w, partial.symbols), partial):
        raise CheckFailed(f"{w} does not extend the partial word")


class Report:
    """Collects output so text and JSON renderings stay in step."""

    def __init__(self, fmt: str):
        self.fmt = fmt
        self.fields: dict[str, Any] = {}
        self.lines: list[str] = []

    def add(self, key: str, value: Any, line: str | None = None) -> None:
        self.fields[key] = value
        if line is not None:
            self.lines.append(line)

    def emit(self, out) -> None:
        if self.fmt == "json":
            out.write(json.dumps(self.fields, indent=2, sort_keys=True) + "\n")
        else:
            for line in self.lines:
                out.write(line + "\n")


def _extend_report(args, g: Graph, partial: CircularWord, rep: Report) -> int:
    w = extend(g, partial, max_prime_size=args.max_prime_size)
    if w is None:
        rep.add("result", "no", "no")
        return NO
    if args.check:
        _check(g, partial, w)
    rep.add("result", "yes")
    rep.add("word", list(canonical_word(w).tokens), _words(w))
    return YES


def cmd_recognize(args, rep: Report) -> int:
    return _extend_report(args, parse_graph(_read(args.graph)), EMPTY, rep)


def cmd_extend(args, rep: Report) -> int:
    g = parse_graph(_read(args.graph))
    partial = parse_word_text(_read(args.word))
    return _extend_report(args, g, partial, rep)


def cmd_simrep(args, rep: Report) -> int:
    inst = parse_sim(_read(args.instance))
    sol = solve_sim(inst, fpt_bound=args.fpt_bound, max_prime_size=args.max_prime_size)
    if sol is None:
        rep.add("result", "no", "no")
        return NO
    if args.check:
        for g, w in zip(inst.graphs, sol.reps):
            _check(g, sol.shared, w)
    rep.add("result", "yes")
    rep.add("shared", list(sol.shared.tokens), "shared: " + " ".join(sol.shared.tokens))
    rep.add(
        "representations",
        {n: list(canonical_word(w).tokens) for n, w in zip(inst.names, sol.reps)},
    )
    for n, w in zip(inst.names, sol.reps):
        rep.lines.append(f"{n}: {_words(w)}")
    if inst.anchor is not None:
        elements = [v for v in inst.shared if v != inst.anchor]
        order = extract_ordering(sol.shared, elements, inst.anchor)
        rep.add("ordering", list(order), "ordering: " + " ".join(order))
    return YES


def cmd_reduce_ordering(args, rep: Report) -> int:
    inst = parse_ordering(_read(args.instance))
    sim = reduce_total_ordering(inst)
    # the instance itself is the output, whatever --format says
    rep.fmt = "raw"
    rep.lines.append(sim_to_json(sim).rstrip("\n"))
    return YES


def _oracle_pair(g: Graph, partial: CircularWord, args) -> tuple[bool, bool]:
    mine = extend(g, partial, max_prime_size=args.max_prime_size)
    truth = oracle_extend(g, partial, args.oracle_bound)
    if mine is not None:
        _check(g, partial, mine)
    return mine is not None, truth is not None


def cmd_oracle_check(args, rep: Report) -> int:
    if args.graph is not None:
        g = parse_graph(_read(args.graph))
        partial = parse_word_text(_read(args.word)) if args.word else EMPTY
        a, b = _oracle_pair(g, partial, args)
        rep.add("engine", "yes" if a else "no", f"engine: {'yes' if a else 'no'}")
        rep.add("oracle", "yes" if b else "no", f"oracle: {'yes' if b else 'no'}")
        rep.add("agree", a == b, f"agree: {'yes' if a == b else 'no'}")
        return YES if a == b else NO
    rng = XorShift64Star(args.seed)
    agree = disagree = 0
    for _ in range(args.count):
        n = rng.between(3, min(7, args.oracle_bound))
        g, w = random_circle_graph(n, rng.next())
        keep = [v for v in g.vertices if rng.below(2)]
        partial = induced_subword(w, keep)
        a, b = _oracle_pair(g, partial, args)
        if a == b:
            agree += 1
        else:
            disagree += 1
            rep.lines.append(f"disagree on {g.edges()} with {' '.join(partial.tokens)}")
    rep.add("agree", agree, f"agree: {agree}")
    rep.add("disagree", disagree, f"disagree: {disagree}")
    return YES if disagree == 0 else NO


def cmd_render_svg(args, rep: Report) -> int:
    w = parse_word_text(_read(args.word))
    doc = render_svg(w)
    if args.output:
        try:
            with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(doc)
        except OSError as exc:
            raise InvalidInput(f"cannot write {args.output}: {exc.strerror}") from exc
        rep.add("output", args.output, f"wrote {args.output}")
    else:
        rep.fmt = "raw"
        rep.lines.append(doc.rstrip("\n"))
    return YES


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-prime-size", type=int, default=DEFAULT_PRIME_BOUND, metavar="N",
                        help="largest prime piece solved by enumeration (default %(default)s)")
    common.add_argument("--fpt-bound", type=int, default=DEFAULT_FPT_BOUND, metavar="N",
                        help="largest shared set for simrep (default %(default)s)")
    common.add_argument("--seed", type=int, default=0, metavar="N", help="seed for random instances")
    common.add_argument("--check", action="store_true", help="re-verify every word before reporting it")
    common.add_argument("--format", choices=("text", "json"), default="text")

    p = argparse.ArgumentParser(prog="circlerep", description="Circle graph representations.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("recognize", parents=[common], help="find any representation")
    s.add_argument("graph")
    s.set_defaults(run=cmd_recognize)

    s = sub.add_parser("extend", parents=[common], help="extend a partial representation")
    s.add_argument("graph")
    s.add_argument("word")
    s.set_defaults(run=cmd_extend)

    s = sub.add_parser("simrep", parents=[common], help="solve a simultaneous representation instance")
    s.add_argument("instance", help="JSON file, or - for stdin")
    s.set_defaults(run=cmd_simrep)

    s = sub.add_parser("reduce-ordering", parents=[common], help="turn a total ordering instance into a simrep instance")
    s.add_argument("instance", help="JSON file, or - for stdin")
    s.set_defaults(run=cmd_reduce_ordering)

    s = sub.add_parser("oracle-check", parents=[common], help="compare extend with brute force")
    s.add_argument("graph", nargs="?")
    s.add_argument("word", nargs="?")
    s.add_argument("--count", type=int, default=100, help="random pairs when no graph is given")
    s.add_argument("--oracle-bound", type=int, default=DEFAULT_ORACLE_BOUND)
    s.set_defaults(run=cmd_oracle_check)

    s = sub.add_parser("render-svg", parents=[common], help="draw a word as a chord diagram")
    s.add_argument("word")
    s.add_argument("-o", "--output")
    s.set_defaults(run=cmd_render_svg)
    return p


def main(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return INVALID if exc.code else YES
    rep = Report(args.format)
    run: Callable[[Any, Report], int] = args.run
    try:
        code = run(args, rep)
    except (BoundExceeded, TooLarge) as exc:
        err.write(f"bound exceeded: {exc}\n")
        return BOUND
    except InvalidPartial as exc:
        pair = f" (pair {exc.pair[0]} {exc.pair[1]})" if exc.pair else ""
        err.write(f"invalid partial word: {exc}{pair}\n")
        return INVALID
    except CheckFailed as exc:
        err.write(f"check failed: {exc}\n")
        return NO
    except CircleRepError as exc:
        err.write(f"invalid input: {exc}\n")
        return INVALID
    rep.emit(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
