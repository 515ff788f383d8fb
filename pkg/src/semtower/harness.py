"""Enumeration, random generation, and the cross-semantics oracle suites.

Exhaustive bounds are deliberately small (every constructor combination
to depth three in seconds); a seeded random layer extends coverage to
deeper terms. Subtraction is enumerated as eagerly as addition, so stuck
terms (0 - 1 already at one operator) exercise every error path.

The heavyweight suites over context enumerations can shard across
processes; results are order-independent.
"""

from __future__ import annotations

import itertools
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterator

from .syntax import (
    Lit,
    NormalResult,
    Operator,
    Opr,
    Term,
    Value,
    format_term,
    op_count,
    parse,
)
from .direct import normalize_d
from .cps import normalize2, normalize3
from .decompose_kk import normalize_kk_rb, normalize_kk_rf
from .context_machine import (
    Context,
    ControlFrame,
    LeftOf,
    PROBE_TERMS,
    RightOf,
    VisitCounter,
    format_context,
    normalize_kc_rb,
    normalize_kc_rf,
    recompose_io,
    recompose_oi,
    refocus_property,
)
from .machine import big_step_eval, machine_run


@dataclass(frozen=True, slots=True)
class EnumSpec:
    """Bounds for exhaustive enumeration of terms and contexts."""

    max_ops: int
    max_lit: int
    max_frames: int = 0


@dataclass(frozen=True, slots=True)
class RandSpec:
    """Reproducible random generation: same seed, same sequence."""

    seed: int
    count: int
    max_ops: int
    max_lit: int


def enumerate_terms(spec: EnumSpec) -> Iterator[Term]:
    """Every term with at most max_ops operators and literals <= max_lit.

    Complete and duplicate-free, ordered by operator count, then by left
    subterm (in enumeration order), then ADD before SUB, then right
    subterm.
    """
    groups: list[list[Term]] = [[Lit(n) for n in range(spec.max_lit + 1)]]
    for c in range(1, spec.max_ops + 1):
        group: list[Term] = []
        for left_ops in range(c):
            for left in groups[left_ops]:
                for op in Operator:
                    for right in groups[c - 1 - left_ops]:
                        group.append(Opr(left, op, right))
        groups.append(group)
    for group in groups:
        yield from group


def enumerate_frames(spec: EnumSpec) -> list[ControlFrame]:
    """The frame pool for context enumeration.

    LeftOf frames carry subterms with at most one operator (literals
    <= max_lit); RightOf frames carry values <= max_lit.
    """
    frames: list[ControlFrame] = []
    for op in Operator:
        for t in enumerate_terms(EnumSpec(max_ops=1, max_lit=spec.max_lit)):
            frames.append(LeftOf(op, t))
    for n in range(spec.max_lit + 1):
        for op in Operator:
            frames.append(RightOf(Value(n), op))
    return frames


def enumerate_contexts(spec: EnumSpec) -> Iterator[Context]:
    """Every frame tuple of length <= max_frames over the frame pool."""
    frames = enumerate_frames(spec)
    for length in range(spec.max_frames + 1):
        yield from itertools.product(frames, repeat=length)


def random_terms(spec: RandSpec) -> list[Term]:
    """Size-bounded random terms by split-budget generation.

    With operator budget b > 0 a literal is emitted with probability 1/2;
    otherwise the node is an operation and the remaining b - 1 operators
    are split binomially between the operands.
    """
    rng = random.Random(spec.seed)

    def gen(budget: int) -> Term:
        if budget == 0 or rng.random() < 0.5:
            return Lit(rng.randint(0, spec.max_lit))
        left_budget = sum(rng.getrandbits(1) for _ in range(budget - 1))
        op = Operator.ADD if rng.getrandbits(1) == 0 else Operator.SUB
        return Opr(gen(left_budget), op, gen(budget - 1 - left_budget))

    return [gen(spec.max_ops) for _ in range(spec.count)]


def chain(k: int) -> Term:
    """Left-nested addition chain ((...(1 + 1) + 1)...) + 1 with k operators.

    The benchmark shape: reduction-based normalization re-walks the spine
    after every step, the reduction-free one does not.
    """
    if k < 1:
        raise ValueError("chain needs at least one operator")
    t: Term = Lit(1)
    for _ in range(k):
        t = Opr(t, Operator.ADD, Lit(1))
    return t


def _run_machine(t: Term) -> NormalResult:
    return machine_run(t).result


# The nine rungs, in presentation order.
NORMALIZERS: dict[str, Callable[[Term], NormalResult]] = {
    "direct": normalize_d,
    "cps3": normalize3,
    "cps2": normalize2,
    "kk-rb": normalize_kk_rb,
    "kk-rf": normalize_kk_rf,
    "kc-rb": normalize_kc_rb,
    "kc-rf": normalize_kc_rf,
    "machine": _run_machine,
    "bigstep": big_step_eval,
}


def tower_results(t: Term) -> list[tuple[str, NormalResult]]:
    """Run every normalizer on ``t``."""
    return [(name, fn(t)) for name, fn in NORMALIZERS.items()]


def tower_agrees(t: Term) -> bool:
    results = tower_results(t)
    first = results[0][1]
    return all(r == first for _, r in results[1:])


@dataclass(slots=True)
class SuiteResult:
    """Outcome of one oracle suite: how much was checked, what failed."""

    checked: int
    failures: list[str]

    @property
    def ok(self) -> bool:
        return not self.failures


_MAX_REPORTED = 5


def tower_suite(terms: list[Term]) -> SuiteResult:
    """All nine normalizers agree on every given term."""
    failures: list[str] = []
    for t in terms:
        if not tower_agrees(t):
            if len(failures) < _MAX_REPORTED:
                rows = ", ".join(f"{n}={r}" for n, r in tower_results(t))
                failures.append(f"{format_term(t)}: {rows}")
            else:
                failures.append("...")
                break
    return SuiteResult(len(terms), failures)


def _refocus_shard(args: tuple[EnumSpec, EnumSpec, int, int]) -> tuple[int, list[str]]:
    context_spec, term_spec, shard, nshards = args
    terms = list(enumerate_terms(term_spec))
    checked = 0
    failures: list[str] = []
    for i, context in enumerate(enumerate_contexts(context_spec)):
        if i % nshards != shard:
            continue
        for t in terms:
            if not refocus_property(context, t) and len(failures) < _MAX_REPORTED:
                failures.append(f"context={format_context(context)} term={format_term(t)}")
            checked += 1
    return checked, failures


def refocus_suite(
    context_spec: EnumSpec, term_spec: EnumSpec, processes: int | None = None
) -> SuiteResult:
    """refocus_property over the full cross product of contexts and terms."""
    nshards = processes if processes is not None else (os.cpu_count() or 1)
    shards = [(context_spec, term_spec, i, nshards) for i in range(nshards)]
    if nshards == 1:
        outcomes = [_refocus_shard(shards[0])]
    else:
        with ProcessPoolExecutor(max_workers=nshards) as pool:
            outcomes = list(pool.map(_refocus_shard, shards))
    return SuiteResult(
        sum(c for c, _ in outcomes),
        [f for _, fs in outcomes for f in fs],
    )


def _reversal_shard(args: tuple[EnumSpec, int, int]) -> tuple[int, list[str]]:
    context_spec, shard, nshards = args
    checked = 0
    failures: list[str] = []
    for i, context in enumerate(enumerate_contexts(context_spec)):
        if i % nshards != shard:
            continue
        reverse = context[::-1]
        for p in PROBE_TERMS:
            if recompose_oi(context, p) != recompose_io(reverse, p):
                if len(failures) < _MAX_REPORTED:
                    failures.append(
                        f"context={format_context(context)} probe={format_term(p)}"
                    )
            checked += 1
    return checked, failures


def reversal_suite(context_spec: EnumSpec, processes: int | None = None) -> SuiteResult:
    """recompose_oi equals recompose_io after reversal, over probe terms."""
    nshards = processes if processes is not None else (os.cpu_count() or 1)
    shards = [(context_spec, i, nshards) for i in range(nshards)]
    if nshards == 1:
        outcomes = [_reversal_shard(shards[0])]
    else:
        with ProcessPoolExecutor(max_workers=nshards) as pool:
            outcomes = list(pool.map(_reversal_shard, shards))
    return SuiteResult(
        sum(c for c, _ in outcomes),
        [f for _, fs in outcomes for f in fs],
    )


def chain_metrics(k: int) -> dict[str, int]:
    """Instrumentation for chain(k): visits, pluggings, machine steps."""
    t = chain(k)
    rb = VisitCounter()
    normalize_kc_rb(t, rb)
    rf = VisitCounter()
    normalize_kc_rf(t, rf)
    return {
        "k": k,
        "rb_visits": rb.decompose_visits,
        "rf_visits": rf.decompose_visits,
        "rb_recompose": rb.recompose_steps,
        "rf_recompose": rf.recompose_steps,
        "machine_steps": machine_run(t).steps,
    }


# ---------------------------------------------------------------------------
# selftest: the oracle suite behind the CLI command of the same name.

SELFTEST_TERMS = EnumSpec(max_ops=3, max_lit=3)
SELFTEST_RANDOM = RandSpec(seed=42, count=1000, max_ops=8, max_lit=50)
# Context suites use reduced bounds here so a selftest stays interactive;
# the acceptance test suite runs the full ones.
SELFTEST_CONTEXTS = EnumSpec(max_ops=0, max_lit=2, max_frames=2)
SELFTEST_REFOCUS_TERMS = EnumSpec(max_ops=2, max_lit=2)


def run_selftest() -> list[tuple[str, SuiteResult]]:
    """Run every oracle suite at the selftest bounds, in a fixed order."""
    from .syntax import term_of_potential_redex
    from .direct import Nxt, reduce_d, trace_d
    from .context_machine import Dec, decompose_kc, probe_corr
    from .decompose_kk import Dec as DecKK, decompose_kk

    exhaustive = list(enumerate_terms(SELFTEST_TERMS))
    randoms = random_terms(SELFTEST_RANDOM)
    checks: list[tuple[str, SuiteResult]] = []

    failures = [
        format_term(t) for t in exhaustive if parse(format_term(t)) != t
    ][:_MAX_REPORTED]
    checks.append(("round-trip parse/print", SuiteResult(len(exhaustive), failures)))

    failures = []
    for t in exhaustive:
        r = reduce_d(t)
        if isinstance(r, Nxt) and op_count(r.t) != op_count(t) - 1:
            failures.append(format_term(t))
    checks.append(("one step removes one operator", SuiteResult(len(exhaustive), failures[:_MAX_REPORTED])))

    checks.append(("tower agreement (exhaustive)", tower_suite(exhaustive)))
    checks.append(("tower agreement (random)", tower_suite(randoms)))

    failures = []
    for t in exhaustive:
        dk = decompose_kk(t)
        dc = decompose_kc(t)
        if isinstance(dc, Dec):
            redex = term_of_potential_redex(dc.pr)
            if (
                not isinstance(dk, DecKK)
                or recompose_io(dc.context, redex) != t
                or dk.kr(redex) != t
            ):
                failures.append(format_term(t))
    checks.append(("there and back", SuiteResult(len(exhaustive), failures[:_MAX_REPORTED])))

    failures = []
    reducible = 0
    for t in exhaustive:
        if isinstance(t, Opr):
            reducible += 1
            if not probe_corr(t):
                failures.append(format_term(t))
    checks.append(("continuation/context correspondence", SuiteResult(reducible, failures[:_MAX_REPORTED])))

    checks.append(("io/oi reversal (bounded)", reversal_suite(SELFTEST_CONTEXTS)))
    checks.append(
        ("refocusing (bounded)", refocus_suite(SELFTEST_CONTEXTS, SELFTEST_REFOCUS_TERMS))
    )

    failures = []
    for t in exhaustive + randoms:
        steps = machine_run(t).steps
        if steps > 4 * op_count(t) + 3:
            failures.append(f"{format_term(t)}: {steps} steps")
        trace_d(t)  # would raise FuelExhausted on a broken step count
    checks.append(
        ("fuel and step budgets", SuiteResult(len(exhaustive) + len(randoms), failures[:_MAX_REPORTED]))
    )

    failures = []
    metrics = [chain_metrics(k) for k in (16, 32, 64)]
    for m in metrics:
        if m["rf_recompose"] != 0:
            failures.append(f"k={m['k']}: rf recomposed {m['rf_recompose']} times")
    if metrics[-1]["rb_visits"] < 8 * metrics[-1]["rf_visits"]:
        failures.append("rb/rf visit ratio at k=64 below 8")
    checks.append(("deforestation counters", SuiteResult(len(metrics), failures)))

    return checks
