"""Command-line front door: evaluate, trace, compare, benchmark, selftest.

Exit codes: 0 for a value, 1 for a stuck term, 2 for unparsable input,
3 when compare finds a disagreement.
"""

from __future__ import annotations

import argparse
import sys

from .syntax import (
    Lit,
    NormalResult,
    ParseError,
    Term,
    Val,
    format_term,
    parse,
    term_of_potential_redex,
)
from .direct import trace_d
from .context_machine import format_context, rf_decompositions
from .machine import ContinueMode, EvalMode, FinalVal, MachineState, iter_machine_states
from .harness import NORMALIZERS, chain_metrics, run_selftest, tower_results

# Literals are conceptually unbounded naturals, but the CLI keeps inputs at
# desk scale: anything above 32 bits is rejected up front.
MAX_LITERAL = 2**32 - 1

EXIT_VALUE = 0
EXIT_STUCK = 1
EXIT_PARSE = 2
EXIT_DISAGREE = 3

_EPILOG = """\
exit codes:
  0  evaluation produced a value
  1  evaluation got stuck (the error message is printed on stdout)
  2  the expression could not be parsed (or a literal exceeds 2^32 - 1)
  3  compare found disagreeing results
"""


def _result_line(r: NormalResult) -> str:
    if isinstance(r, Val):
        return f"= {r.v.n}"
    return r.msg


def _result_exit(r: NormalResult) -> int:
    return EXIT_VALUE if isinstance(r, Val) else EXIT_STUCK


def _oversized_literal(t: Term) -> int | None:
    stack = [t]
    while stack:
        s = stack.pop()
        if isinstance(s, Lit):
            if s.n > MAX_LITERAL:
                return s.n
        else:
            stack.append(s.left)
            stack.append(s.right)
    return None


def _read_term(expr: str) -> Term:
    """Parse the expression argument, reading stdin when it is ``-``."""
    if expr == "-":
        expr = sys.stdin.read()
    t = parse(expr)
    oversized = _oversized_literal(t)
    if oversized is not None:
        raise ParseError(f"literal {oversized} exceeds {MAX_LITERAL}", 0)
    return t


def cmd_eval(expr: str, semantics: str) -> int:
    r = NORMALIZERS[semantics](_read_term(expr))
    print(_result_line(r))
    return _result_exit(r)


def _format_state(s: MachineState) -> str:
    if isinstance(s, EvalMode):
        return f"eval {format_term(s.t)} @ {format_context(s.context)}"
    if isinstance(s, ContinueMode):
        return f"continue {s.v.n} @ {format_context(s.context)}"
    if isinstance(s, FinalVal):
        return f"final {s.v.n}"
    return f"final {s.msg}"


def cmd_trace(expr: str, mode: str) -> int:
    t = _read_term(expr)
    if mode == "rb":
        reducts, result = trace_d(t)
        for reduct in reducts:
            print(format_term(reduct))
    elif mode == "rf":
        for d in rf_decompositions(t):
            print(f"{format_term(term_of_potential_redex(d.pr))} @ {format_context(d.context)}")
        result = NORMALIZERS["kc-rf"](t)
    else:
        for s in iter_machine_states(t):
            print(_format_state(s))
        result = NORMALIZERS["machine"](t)
    print(_result_line(result))
    return _result_exit(result)


def cmd_compare(expr: str) -> int:
    t = _read_term(expr)
    results = tower_results(t)
    for name, r in results:
        print(f"{name:<8} {_result_line(r)}")
    first = results[0][1]
    if all(r == first for _, r in results):
        print("AGREE")
        return EXIT_VALUE
    print("DISAGREE")
    return EXIT_DISAGREE


def cmd_bench(sizes: list[int]) -> int:
    columns = ("k", "rb_visits", "rf_visits", "rb_recompose", "rf_recompose", "machine_steps")
    rows = [chain_metrics(k) for k in sizes]
    widths = [max(len(c), *(len(str(r[c])) for r in rows)) for c in columns]
    print("  ".join(c.ljust(w) for c, w in zip(columns, widths)))
    for r in rows:
        print("  ".join(str(r[c]).rjust(w) for c, w in zip(columns, widths)))
    return EXIT_VALUE


def cmd_selftest() -> int:
    checks = run_selftest()
    width = max(len(name) for name, _ in checks)
    failed = False
    for name, outcome in checks:
        status = "PASS" if outcome.ok else "FAIL"
        print(f"{name:<{width}}  {status}  ({outcome.checked} checked)")
        for f in outcome.failures:
            print(f"    {f}")
        failed = failed or not outcome.ok
    return 1 if failed else 0


def _sizes(text: str) -> list[int]:
    try:
        sizes = [int(part) for part in text.split(",") if part]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a list of sizes: {text!r}")
    if not sizes or any(k < 1 for k in sizes):
        raise argparse.ArgumentTypeError("sizes must be positive integers")
    return sizes


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="semtower",
        description="Evaluate arithmetic over naturals with nine equivalent semantics.",
        epilog=_EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate an expression")
    p.add_argument("expr", help="expression, or - to read stdin")
    p.add_argument(
        "--semantics",
        choices=list(NORMALIZERS),
        default="direct",
        help="which rung of the tower to run (default: direct)",
    )

    p = sub.add_parser("trace", help="show the steps of a run")
    p.add_argument("expr", help="expression, or - to read stdin")
    p.add_argument(
        "--mode",
        choices=("rb", "rf", "machine"),
        default="rb",
        help="rb: one reduct per line; rf: one decomposition per line; "
        "machine: one state per line (default: rb)",
    )

    p = sub.add_parser("compare", help="run all nine semantics and diff the results")
    p.add_argument("expr", help="expression, or - to read stdin")

    p = sub.add_parser("bench", help="deforestation counters on addition chains")
    p.add_argument("--shape", choices=("chain",), default="chain")
    p.add_argument("--sizes", type=_sizes, default=[16, 32, 64], help="comma-separated chain sizes")

    sub.add_parser("selftest", help="run the oracle suites and print a pass/fail table")

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "eval":
            return cmd_eval(args.expr, args.semantics)
        if args.command == "trace":
            return cmd_trace(args.expr, args.mode)
        if args.command == "compare":
            return cmd_compare(args.expr)
        if args.command == "bench":
            return cmd_bench(args.sizes)
        return cmd_selftest()
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_PARSE


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
