"""Command-line front end.

Exit codes: 0 success (solvable, independent, ...), 1 a well-posed negative
verdict, 2 a library error on valid input, 64 usage or input-file errors,
70 an unexpected internal failure.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from . import dependence, oracle, residual, solver
from .errors import DimensionMismatch, ParseError, TropicError, UnknownSemifield
from .io import (Report, format_box, format_index_set, format_vector, parse_problem_text,
                 read_matrix, read_vector)
from .semifield import MAX_PLUS_Q, get_semifield

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_ERROR = 2
EXIT_USAGE = 64
EXIT_INTERNAL = 70

COMMANDS = ("residual", "distance", "solve", "pseudo", "general", "independent",
            "reduce", "consistify", "oracle")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("problem", nargs="?", help="problem file holding semifield, A and d")
    common.add_argument("-A", dest="matrix", metavar="FILE", help="matrix file")
    common.add_argument("-d", dest="vector", metavar="FILE", help="right-hand side file")
    common.add_argument("--semifield", help="semifield kind (default: from file, else max-plus-rational)")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--tol", type=float, help="equality tolerance for float kinds")

    parser = _Parser(prog="tropic", description="Tropical linear algebra over idempotent semifields.")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True
    helps = {
        "residual": "distance from d to the span of the columns of A",
        "distance": "distance, minimizer and nearest point in the span",
        "solve": "decide solvability of A x = d",
        "pseudo": "pseudo-solution closest to d",
        "general": "all solutions as a family of boxes",
        "independent": "linear independence of the columns of A",
        "reduce": "equivalent linearly independent subsystem of columns",
        "consistify": "consistent form of A with respect to d",
        "oracle": "cross-check closed forms against brute force",
    }
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common], help=helps[name])
        if name == "general":
            p.add_argument("--max-cols", type=int, default=solver.DEFAULT_MAX_COLS)
            p.add_argument("--partial", action="store_true",
                           help="return an incomplete family instead of failing above the cap")
        if name == "oracle":
            p.add_argument("--seed", type=int, default=0)
            p.add_argument("--rows", type=int, default=3)
            p.add_argument("--cols", type=int, default=3)
            p.add_argument("--density", type=float, default=0.75)
    return parser


def _semifield(args, file_sf=None):
    kind = args.semifield or (file_sf.kind if file_sf is not None else MAX_PLUS_Q.kind)
    try:
        return get_semifield(kind, args.tol)
    except UnknownSemifield:
        raise
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def load_inputs(args, need_vector=True):
    """Resolve ``(A, d, sf)`` from the positional problem file and/or -A/-d."""
    A = d = None
    file_sf = None
    text = None
    if args.problem:
        with open(args.problem) as fh:
            text = fh.read()
        _, _, file_sf = parse_problem_text(text)
    sf = _semifield(args, file_sf)
    if text is not None:
        A, d, _ = parse_problem_text(text, sf)
    if args.matrix:
        A = read_matrix(args.matrix, sf)
    if args.vector:
        d = read_vector(args.vector, sf)
    if A is None:
        raise UsageError("no matrix given (use a problem file or -A)")
    if need_vector and d is None:
        raise UsageError("no right-hand side given (use a problem file or -d)")
    if d is not None and len(A.rows) != len(d):
        raise DimensionMismatch(f"A has {len(A.rows)} rows but d has {len(d)} components")
    return A, d, sf


def _flag(b: bool) -> str:
    return "true" if b else "false"


def _header(command, sf) -> Report:
    return Report([("command", command), ("semifield", str(sf))])


def _residual_lines(report, delta):
    report.add("residual", delta.format())
    report.add("residual_is_one", _flag(delta.is_one()))


def cmd_consistify(A, d, sf, args):
    r = residual.consistify(A, d)
    rep = _header("consistify", sf)
    rep.add("a_hat", str(r.a_hat))
    rep.add("zero_rows", format_index_set(r.zero_rows))
    rep.add("forced_zero_columns", format_index_set(r.forced_zero_columns))
    return EXIT_OK, rep


def cmd_residual(A, d, sf, args):
    span = residual.distance_to_span(A, d)
    rep = _header("residual", sf)
    _residual_lines(rep, span.delta)
    return EXIT_OK, rep


def cmd_distance(A, d, sf, args):
    span = residual.distance_to_span(A, d)
    rep = _header("distance", sf)
    _residual_lines(rep, span.delta)
    rep.add("minimizer", format_vector(span.minimizer))
    rep.add("nearest_point", format_vector(span.nearest_point))
    return EXIT_OK, rep


def cmd_solve(A, d, sf, args):
    sol = solver.solve(A, d)
    rep = _header("solve", sf)
    rep.add("verdict", sol.verdict.value)
    _residual_lines(rep, sol.residual)
    rep.add("principal", format_vector(sol.principal))
    rep.add("pseudo", format_vector(sol.pseudo))
    rep.add("free_indices", format_index_set(sol.free_indices))
    return (EXIT_OK if sol.solvable else EXIT_NEGATIVE), rep


def cmd_pseudo(A, d, sf, args):
    span = residual.distance_to_span(A, d)
    rep = _header("pseudo", sf)
    _residual_lines(rep, span.delta)
    rep.add("pseudo", format_vector(span.minimizer))
    rep.add("image", format_vector(span.nearest_point))
    return (EXIT_OK if span.delta.is_finite else EXIT_NEGATIVE), rep


def cmd_general(A, d, sf, args):
    gen = solver.general_solution(A, d, max_cols=args.max_cols, partial=args.partial)
    rep = _header("general", sf)
    rep.add("solvable", _flag(bool(gen.family)))
    rep.add("complete", _flag(gen.complete))
    rep.add("count", str(len(gen.family)))
    rep.add("family", [format_box(b, sf) for b in gen.family])
    return (EXIT_OK if gen.family else EXIT_NEGATIVE), rep


def cmd_independent(A, d, sf, args):
    indep = dependence.is_independent(A)
    rep = _header("independent", sf)
    delta = dependence.delta_independence(A).format() if A.ncols > 1 else "undefined"
    rep.add("delta", delta)
    rep.add("independent", _flag(indep))
    return (EXIT_OK if indep else EXIT_NEGATIVE), rep


def cmd_reduce(A, d, sf, args):
    trace = dependence.reduce_to_independent(A)
    rep = _header("reduce", sf)
    rep.add("kept", format_index_set(trace.kept))
    rep.add("removed", format_index_set(trace.removed))
    steps = []
    for i, delta in enumerate(trace.step_residuals):
        action = "removed" if i in trace.removed else "kept"
        steps.append(f"{i + 1} {'none' if delta is None else delta.format()} {action}")
    rep.add("steps", steps)
    return EXIT_OK, rep


def cmd_oracle(A, d, sf, args):
    rep = _header("oracle", sf)
    rep.add("A", str(A))
    rep.add("d", str(d))
    span = residual.distance_to_span(A, d)
    grid = oracle.grid_min_distance(A, d)
    delta_ok = grid.distance == span.delta and not grid.grid_distance < span.delta
    rep.add("residual", span.delta.format())
    rep.add("grid_distance", grid.grid_distance.format())
    rep.add("grid_point", format_vector(grid.grid_point))
    rep.add("candidate_distance", grid.candidate_distance.format())
    rep.add("residual_agrees", _flag(delta_ok))
    ok = delta_ok
    if A.ncols <= oracle.MAX_ENUMERATION_COLS:
        brute = oracle.enumerate_minimal_generators(A, d)
        closed = solver.general_solution(A, d).index_sets
        rep.add("minimal_generators", " ".join(format_index_set(s) for s in brute) or "none")
        rep.add("generators_agree", _flag(brute == closed))
        ok = ok and brute == closed
    return (EXIT_OK if ok else EXIT_NEGATIVE), rep


HANDLERS = {
    "consistify": cmd_consistify, "residual": cmd_residual, "distance": cmd_distance,
    "solve": cmd_solve, "pseudo": cmd_pseudo, "general": cmd_general,
    "independent": cmd_independent, "reduce": cmd_reduce, "oracle": cmd_oracle,
}


@dataclass
class Outcome:
    code: int
    report: Report | None = None
    error: str | None = None
    fmt: str = "text"

    def render(self) -> str:
        if self.report is None:
            return ""
        return self.report.to_json() if self.fmt == "json" else self.report.to_text()


def run(argv) -> Outcome:
    """Execute one command without touching stdout."""
    fmt = "text"
    try:
        args = build_parser().parse_args(argv)
        fmt = args.format
        if args.command == "oracle" and not (args.problem or args.matrix):
            sf = _semifield(args)
            A, d = oracle.random_instance(args.seed, args.rows, args.cols, args.density, sf=sf)
        else:
            A, d, sf = load_inputs(args, need_vector=args.command not in ("independent", "reduce"))
        code, rep = HANDLERS[args.command](A, d, sf, args)
        return Outcome(code, rep, fmt=fmt)
    except UsageError as exc:
        return Outcome(EXIT_USAGE, error=f"usage error: {exc}")
    except (ParseError, UnknownSemifield, DimensionMismatch, OSError) as exc:
        return Outcome(EXIT_USAGE, error=f"input error: {exc}")
    except TropicError as exc:
        return Outcome(EXIT_ERROR, error=f"error: {type(exc).__name__}: {exc}")
    except Exception as exc:  # noqa: BLE001
        return Outcome(EXIT_INTERNAL, error=f"internal error: {type(exc).__name__}: {exc}")


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    out = run(argv)
    sys.stdout.write(out.render())
    if out.error:
        print(out.error, file=sys.stderr)
    return out.code


if __name__ == "__main__":
    sys.exit(main())
