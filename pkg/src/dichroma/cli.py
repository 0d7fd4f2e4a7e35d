"""Command-line entry point: ``dichroma colour|verify|digirth|gen|render``."""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from .colour import ApexInput, Trace, colour_digirth4, colour_with_apex
from .errors import InternalError, ParseError, PreconditionViolated
from .formats import RunReport, format_colouring, format_digraph, parse_colouring, parse_digraph
from .graph_core import compute_embedding, digirth, verify_colouring
from .oracle import ANY_PLANAR, TRIANGULATION, InstanceSpec, random_instance
from .render import render_svg

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_PRECONDITION = 2
EXIT_INTERNAL = 3


def _read_text(path: str) -> str:
    try:
        return Path(path).read_text(encoding="ascii")
    except (OSError, UnicodeDecodeError) as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None


def _load(path: str):
    return parse_digraph(_read_text(path))


def _write(path: str, text: str) -> None:
    Path(path).write_text(text, encoding="ascii", newline="\n")


def cmd_colour(args) -> int:
    d, embedding = _load(args.input)
    trace = Trace()
    start = time.perf_counter()
    if args.v0 is None:
        colouring = colour_digirth4(d, embedding, trace)
    else:
        colouring = colour_with_apex(ApexInput(d, args.v0), embedding, trace)
    elapsed = time.perf_counter() - start
    check = verify_colouring(d, colouring)
    text = format_colouring(colouring)
    if args.out:
        _write(args.out, text)
    else:
        sys.stdout.write(text)
    if args.report:
        info = trace.as_dict()
        info["seed"] = args.seed
        report = RunReport(d.n, d.m, digirth(d), colouring, bool(check), elapsed, info, args.v0)
        _write(args.report, report.to_text())
    if args.svg:
        _write(args.svg, render_svg(d, embedding or compute_embedding(d), colouring))
    if not check:
        raise InternalError("produced colouring failed verification", witness=check.witness)
    return EXIT_OK


def cmd_verify(args) -> int:
    d, _ = _load(args.input)
    colouring = parse_colouring(_read_text(args.colouring))
    check = verify_colouring(d, colouring)
    if check:
        print("valid")
        return EXIT_OK
    print(" ".join(map(str, check.witness)))
    return EXIT_INVALID


def cmd_digirth(args) -> int:
    d, _ = _load(args.input)
    g = digirth(d)
    print("infinite" if g == float("inf") else g)
    return EXIT_OK


def cmd_gen(args) -> int:
    shape = TRIANGULATION if args.shape == "triangulation" else ANY_PLANAR
    d, e = random_instance(InstanceSpec(seed=args.seed, n=args.n, digirth_min=args.digirth_min, shape=shape))
    text = format_digraph(d, e)
    if args.out:
        _write(args.out, text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_render(args) -> int:
    d, embedding = _load(args.input)
    colouring = parse_colouring(_read_text(args.colouring)) if args.colouring else None
    _write(args.out, render_svg(d, embedding or compute_embedding(d), colouring))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dichroma", description="Acyclic 2-colourings of planar digraphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("colour", help="2-colour a planar digraph of digirth >= 4 (or with an apex v0)")
    p.add_argument("--input", required=True)
    p.add_argument("--v0", type=int, help="vertex met by every directed triangle")
    p.add_argument("--seed", type=int, default=0, help="recorded in the report; the pipeline is deterministic")
    p.add_argument("--out", help="colouring file (default: standard output)")
    p.add_argument("--svg")
    p.add_argument("--report")
    p.set_defaults(func=cmd_colour)

    p = sub.add_parser("verify", help="check that a colouring has no monochromatic directed cycle")
    p.add_argument("--input", required=True)
    p.add_argument("--colouring", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("digirth", help="length of the shortest directed cycle")
    p.add_argument("--input", required=True)
    p.set_defaults(func=cmd_digirth)

    p = sub.add_parser("gen", help="seeded random planar instance")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--digirth-min", type=int, default=4, choices=(3, 4, 5))
    p.add_argument("--shape", choices=("triangulation", "any"), default="triangulation")
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("render", help="SVG drawing of a (coloured) plane digraph")
    p.add_argument("--input", required=True)
    p.add_argument("--colouring")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_render)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except PreconditionViolated as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except InternalError as exc:
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        for key, value in sorted(exc.diagnostics.items()):
            print(f"  {key}: {value}", file=sys.stderr)
        return EXIT_INTERNAL
    except ValueError as exc:
        # invalid instance parameters, e.g. gen with n < 3
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
