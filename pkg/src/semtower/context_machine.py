"""First-order decomposition: control frames instead of continuations.

The recomposing continuation of decompose_term_kk is only ever built by
two abstractions, so it flattens into a list of control frames -- a
context. Contexts are stored inside-out (innermost frame first, the
order decomposition accumulates them); reading the same tuple backwards
gives the outside-in view, and the two recomposition functions are
related by exactly that reversal.

With everything first order, results of decomposition can be compared
structurally, which is what makes refocus_property a directly testable
statement rather than a claim about function equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Union

from .syntax import (
    Error,
    Lit,
    NormalResult,
    Operator,
    Opr,
    PotentialRedex,
    Term,
    Val,
    Value,
    Wrong,
    contract,
    format_operand,
    op_count,
    term_of_value,
)
from .direct import FuelExhausted, Nxt, Stuck, ValueOrTermOrStuck
from .decompose_kk import decompose_kk


@dataclass(frozen=True, slots=True)
class LeftOf:
    """Frame with the hole at the left operand; the right is still a term."""

    op: Operator
    right: Term


@dataclass(frozen=True, slots=True)
class RightOf:
    """Frame with the hole at the right operand; the left is already a value."""

    left: Value
    op: Operator


ControlFrame = Union[LeftOf, RightOf]
# Inside-out: context[0] is the innermost frame. The outside-in reading of
# the same hole is the reversed tuple.
Context = tuple[ControlFrame, ...]


@dataclass(slots=True)
class VisitCounter:
    """Per-run instrumentation: term-node visits and frame pluggings."""

    decompose_visits: int = 0
    recompose_steps: int = 0


@dataclass(frozen=True, slots=True)
class Dec:
    """A potential redex together with its inside-out context."""

    pr: PotentialRedex
    context: Context


DecompositionKC = Union[Val, Dec]


def _plug(frame: ControlFrame, t: Term) -> Term:
    if isinstance(frame, LeftOf):
        return Opr(t, frame.op, frame.right)
    return Opr(term_of_value(frame.left), frame.op, t)


def recompose_io(context: Context, t: Term, counter: VisitCounter | None = None) -> Term:
    """Plug ``t`` into an inside-out context: fold frames from the head out."""
    for frame in context:
        t = _plug(frame, t)
        if counter is not None:
            counter.recompose_steps += 1
    return t


def recompose_oi(context: Context, t: Term) -> Term:
    """Plug ``t`` into an outside-in context: the head frame goes on last."""
    if not context:
        return t
    return _plug(context[0], recompose_oi(context[1:], t))


def decompose_term_kc(
    t: Term, context: Context, counter: VisitCounter | None = None
) -> DecompositionKC:
    """Find the leftmost-innermost potential redex of ``t`` inside ``context``.

    An iterative two-mode loop. Term mode walks down left spines, pushing
    a LeftOf frame per operation. Reaching a literal switches to context
    mode, which delivers the value to the innermost frame: a LeftOf frame
    flips to RightOf and sends the loop into its right subterm, a RightOf
    frame completes a potential redex, and an empty context means the
    whole term was a value.
    """
    while True:
        while isinstance(t, Opr):
            if counter is not None:
                counter.decompose_visits += 1
            context = (LeftOf(t.op, t.right),) + context
            t = t.left
        if counter is not None:
            counter.decompose_visits += 1
        v = Value(t.n)
        if not context:
            return Val(v)
        frame = context[0]
        context = context[1:]
        if isinstance(frame, RightOf):
            return Dec(PotentialRedex(frame.op, frame.left, v), context)
        context = (RightOf(v, frame.op),) + context
        t = frame.right


def decompose_kc(t: Term, counter: VisitCounter | None = None) -> DecompositionKC:
    """decompose_term_kc in the empty context."""
    return decompose_term_kc(t, (), counter)


def reduce_kc(t: Term) -> ValueOrTermOrStuck:
    """One-step reduction: decompose, contract, recompose."""
    d = decompose_kc(t)
    if isinstance(d, Val):
        return d
    c = contract(d.pr)
    if isinstance(c, Error):
        return Stuck(c.msg)
    return Nxt(recompose_io(d.context, c.t))


def iterate_kc_rb(
    d: DecompositionKC, fuel: int, counter: VisitCounter | None = None
) -> NormalResult:
    """Reduction-based loop: build each reduct and decompose it from the root."""
    while True:
        if isinstance(d, Val):
            return d
        c = contract(d.pr)
        if isinstance(c, Error):
            return Wrong(c.msg)
        if fuel == 0:
            raise FuelExhausted("iterate_kc_rb ran out of fuel")
        fuel -= 1
        d = decompose_kc(recompose_io(d.context, c.t, counter), counter)


def iterate_kc_rf(
    d: DecompositionKC, fuel: int, counter: VisitCounter | None = None
) -> NormalResult:
    """Reduction-free loop: decompose the contractum in its context, in place.

    Recomposition never runs here; the reducts are never materialized.
    """
    while True:
        if isinstance(d, Val):
            return d
        c = contract(d.pr)
        if isinstance(c, Error):
            return Wrong(c.msg)
        if fuel == 0:
            raise FuelExhausted("iterate_kc_rf ran out of fuel")
        fuel -= 1
        d = decompose_term_kc(c.t, d.context, counter)


def normalize_kc_rb(t: Term, counter: VisitCounter | None = None) -> NormalResult:
    return iterate_kc_rb(decompose_kc(t, counter), op_count(t) + 1, counter)


def normalize_kc_rf(t: Term, counter: VisitCounter | None = None) -> NormalResult:
    return iterate_kc_rf(decompose_kc(t, counter), op_count(t) + 1, counter)


def rf_decompositions(t: Term) -> Iterator[Dec]:
    """Yield every decomposition visited by the reduction-free loop, in order.

    Ends after the decomposition whose redex is not contractible, or once
    decomposition delivers a value.
    """
    d = decompose_kc(t)
    while isinstance(d, Dec):
        yield d
        c = contract(d.pr)
        if isinstance(c, Error):
            return
        d = decompose_term_kc(c.t, d.context)


def refocus_property(context: Context, t: Term) -> bool:
    """Does decomposing the recomposed term equal resuming decomposition?

    The two sides are computed independently: the left recomposes
    ``context`` around ``t`` and decomposes the result from scratch; the
    right hands ``t`` and ``context`` straight to the decomposition
    worker. Both are first order, so the comparison is structural.
    """
    return decompose_kc(recompose_io(context, t)) == decompose_term_kc(t, context)


# Fixed probe set for extensional checks over recomposing continuations:
# every term with at most one operator and literals 0..2.
_PROBE_LITS = tuple(Lit(n) for n in range(3))
PROBE_TERMS: tuple[Term, ...] = _PROBE_LITS + tuple(
    Opr(a, op, b) for a in _PROBE_LITS for op in Operator for b in _PROBE_LITS
)


def probe_corr(t: Term) -> bool:
    """Check that the two decompositions of ``t`` correspond.

    The higher-order decomposition yields a recomposing continuation, the
    first-order one a context; they should find the same redex, and the
    continuation should agree with recomposition over the fixed probe set
    (PROBE_TERMS). ``t`` must be reducible.
    """
    dk = decompose_kk(t)
    dc = decompose_kc(t)
    if isinstance(dk, Val) or isinstance(dc, Val):
        raise ValueError("probe_corr requires a reducible term")
    if dk.pr != dc.pr:
        return False
    return all(dk.kr(p) == recompose_io(dc.context, p) for p in PROBE_TERMS)


def format_context(context: Context) -> str:
    """Render an inside-out context with ``[]`` marking the hole.

    The hole token is treated as an atomic operand, so one frame prints
    as ``[] - (2 - 20)`` or ``1 - []`` and composition parenthesizes:
    ``(1 - []) - (2 - 20)``.
    """
    rendered = "[]"
    compound = False
    for frame in context:
        hole = f"({rendered})" if compound else rendered
        if isinstance(frame, LeftOf):
            rendered = f"{hole} {frame.op.symbol} {format_operand(frame.right)}"
        else:
            rendered = f"{frame.left.n} {frame.op.symbol} {hole}"
        compound = True
    return rendered
