"""Command line entry point.

Exit codes: 0 success (JSON on stdout), 1 mathematical degeneracy (JSON error
document on stdout), 2 usage error (message on stderr).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .diophantine import search_report
from .errors import DegenerateConfiguration, DomainError, InvalidScenario, StewartAlhazenError
from .exact_core import parse_rational
from .figure import render_svg
from .mirror import MirrorScenario, Point, embedding_report, solve_mirror, solve_report
from .numerics import Tolerance
from .stewart import analyze

_VALUE_FLAGS = {"-r", "--a", "--b", "--center", "--radius", "--tol", "--bound", "-o", "--output", "--scenario"}


def _rational(text: str):
    try:
        return parse_rational(text, allow_decimal=True)
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _nonzero_rational(text: str):
    value = _rational(text)
    if value == 0:
        raise argparse.ArgumentTypeError("r must be a nonzero rational")
    return value


def _positive_rational(text: str):
    value = _rational(text)
    if value <= 0:
        raise argparse.ArgumentTypeError("radius must be a positive rational")
    return value


def _point(text: str) -> Point:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected x,y but got {text!r}")
    return Point(_rational(parts[0]), _rational(parts[1]))


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError("bound must be a positive integer")
    return value


def _positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not value > 0:
        raise argparse.ArgumentTypeError("tolerance must be positive")
    return value


def _add_scenario_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--a", type=_point, help="source point A as x,y")
    p.add_argument("--b", type=_point, help="target point B as x,y")
    p.add_argument("--center", type=_point, default=Point(0, 0), help="circle center (default 0,0)")
    p.add_argument("--radius", type=_positive_rational, default=1, help="circle radius (default 1)")
    p.add_argument("--scenario", type=Path, help="scenario JSON file instead of --a/--b")
    p.add_argument("--tol", type=_positive_float, default=None, help="residual tolerance for root polishing")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="stewart-alhazen", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stewart-analyze", help="analyze X^4 - rX - 1")
    p.add_argument("-r", type=_nonzero_rational, required=True, help="nonzero rational parameter r")

    p = sub.add_parser("mirror-solve", help="solve the circular mirror problem")
    _add_scenario_args(p)

    p = sub.add_parser("mirror-embed", help="mirror scenario realizing X^4 - rX - 1")
    p.add_argument("-r", type=_nonzero_rational, required=True, help="nonzero rational parameter r")

    p = sub.add_parser("dioph-search", help="search x^4 + 4y^4 = z^2 up to a bound")
    p.add_argument("--bound", type=_positive_int, required=True)

    p = sub.add_parser("plot", help="write an SVG figure of a solved scenario")
    _add_scenario_args(p)
    p.add_argument("-o", "--output", type=Path, required=True, help="output .svg path")
    return parser


def _normalize_argv(argv: list[str]) -> list[str]:
    # let values such as "-8/3" follow a flag without being taken for options
    out: list[str] = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_FLAGS and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            nxt = argv[i + 1]
            out.append(tok + nxt if not tok.startswith("--") else f"{tok}={nxt}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def _scenario(args, parser) -> MirrorScenario:
    if args.scenario is not None:
        return MirrorScenario.from_json(json.loads(args.scenario.read_text()))
    missing = [flag for flag, value in (("--a", args.a), ("--b", args.b)) if value is None]
    if missing:
        parser.error(f"the following arguments are required: {', '.join(missing)} (or --scenario)")
    return MirrorScenario(A=args.a, B=args.b, center=args.center, radius=args.radius)


def _tolerance(args) -> Tolerance:
    return Tolerance() if args.tol is None else Tolerance(residual=args.tol)


def run(argv: list[str] | None = None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    argv = _normalize_argv(list(sys.argv[1:] if argv is None else argv))
    try:
        args = parser.parse_args(argv)
        if args.command in ("mirror-solve", "plot"):
            scenario = _scenario(args, parser)
    except SystemExit as exc:
        return int(exc.code or 0)
    except InvalidScenario as exc:
        print(f"stewart-alhazen: error: {exc}", file=sys.stderr)
        return 2
    except DegenerateConfiguration as exc:
        _emit({"error": type(exc).__name__, "message": str(exc)}, stdout)
        return 1

    try:
        if args.command == "stewart-analyze":
            doc = analyze(args.r)
        elif args.command == "mirror-solve":
            doc = solve_report(scenario, _tolerance(args))
        elif args.command == "mirror-embed":
            doc = embedding_report(args.r)
        elif args.command == "dioph-search":
            doc = search_report(args.bound)
        else:
            solutions = solve_mirror(scenario, _tolerance(args))
            args.output.write_text(render_svg(scenario, solutions))
            doc = {"path": str(args.output), "solutions": len(solutions)}
    except StewartAlhazenError as exc:
        _emit({"error": type(exc).__name__, "message": str(exc)}, stdout)
        return 1
    _emit(doc, stdout)
    return 0


def _emit(doc: dict, stdout) -> None:
    json.dump(doc, stdout, indent=2)
    stdout.write("\n")


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
