"""One-step reduction in continuation-passing style, twice.

reduce3_c threads a single undelimited continuation: its answer type is
whatever the caller picks, and errors are propagated by applying
continuations to the Stuck outcome all the way out.

reduce2_c delimits the continuation (the answer type is fixed to
ValueOrTermOrStuck) and introduces one discontinuity: when contraction
fails, the continuation is not applied at all and the error is returned
directly.
"""

from __future__ import annotations

from typing import Any, Callable, Union

from .syntax import (
    Contractum,
    Lit,
    NormalResult,
    Opr,
    PotentialRedex,
    Term,
    Val,
    Value,
    Wrong,
    contract,
    op_count,
    term_of_value,
)
from .direct import FuelExhausted, Nxt, Stuck, ValueOrTermOrStuck

ValueOrTerm = Union[Val, Nxt]

# Undelimited: the answer type is caller-chosen.
Observer = Callable[[ValueOrTermOrStuck], Any]
# Delimited: the answer type is pinned to ValueOrTermOrStuck.
DelimitedK = Callable[[ValueOrTerm], ValueOrTermOrStuck]


class ApplyCounter:
    """Counts continuation applications during a single reducer run."""

    __slots__ = ("applications",)

    def __init__(self) -> None:
        self.applications = 0


def reduce3_c(t: Term, k: Observer, counter: ApplyCounter | None = None) -> Any:
    """One-step reduction with an undelimited continuation.

    The top-level observer ``k`` is applied exactly once. When a term is
    stuck, the Stuck outcome travels through every pending continuation.
    """

    def apply(kont: Observer, outcome: ValueOrTermOrStuck) -> Any:
        if counter is not None:
            counter.applications += 1
        return kont(outcome)

    def go(t: Term, k: Observer) -> Any:
        if isinstance(t, Lit):
            return apply(k, Val(Value(t.n)))
        op, t2 = t.op, t.right

        def after_left(r1: ValueOrTermOrStuck) -> Any:
            if isinstance(r1, Stuck):
                return apply(k, r1)
            if isinstance(r1, Nxt):
                return apply(k, Nxt(Opr(r1.t, op, t2)))
            v1 = r1.v

            def after_right(r2: ValueOrTermOrStuck) -> Any:
                if isinstance(r2, Stuck):
                    return apply(k, r2)
                if isinstance(r2, Nxt):
                    return apply(k, Nxt(Opr(term_of_value(v1), op, r2.t)))
                c = contract(PotentialRedex(op, v1, r2.v))
                if isinstance(c, Contractum):
                    return apply(k, Nxt(c.t))
                return apply(k, Stuck(c.msg))

            return go(t2, after_right)

        return go(t.left, after_left)

    return go(t, k)


def reduce3(t: Term) -> ValueOrTermOrStuck:
    """reduce3_c at the identity observer."""
    return reduce3_c(t, lambda r: r)


def reduce2_c(
    t: Term, k: DelimitedK, counter: ApplyCounter | None = None
) -> ValueOrTermOrStuck:
    """One-step reduction with a delimited continuation and one discontinuity.

    Continuations only ever receive Val or Nxt. A failed contraction
    returns its error message directly, skipping every pending
    continuation.
    """

    def apply(kont: DelimitedK, outcome: ValueOrTerm) -> ValueOrTermOrStuck:
        if counter is not None:
            counter.applications += 1
        return kont(outcome)

    def go(t: Term, k: DelimitedK) -> ValueOrTermOrStuck:
        if isinstance(t, Lit):
            return apply(k, Val(Value(t.n)))
        op, t2 = t.op, t.right

        def after_left(r1: ValueOrTerm) -> ValueOrTermOrStuck:
            if isinstance(r1, Nxt):
                return apply(k, Nxt(Opr(r1.t, op, t2)))
            v1 = r1.v

            def after_right(r2: ValueOrTerm) -> ValueOrTermOrStuck:
                if isinstance(r2, Nxt):
                    return apply(k, Nxt(Opr(term_of_value(v1), op, r2.t)))
                c = contract(PotentialRedex(op, v1, r2.v))
                if isinstance(c, Contractum):
                    return apply(k, Nxt(c.t))
                return Stuck(c.msg)  # the discontinuity

            return go(t2, after_right)

        return go(t.left, after_left)

    return go(t, k)


def reduce2(t: Term) -> ValueOrTermOrStuck:
    """reduce2_c at the injection of ValueOrTerm into ValueOrTermOrStuck.

    The summands are shared classes, so the injection is the identity.
    """
    return reduce2_c(t, lambda r: r)


def _normalize_by(step, t: Term) -> NormalResult:
    fuel = op_count(t) + 1
    while True:
        if fuel == 0:
            raise FuelExhausted("cps normalizer ran out of fuel")
        fuel -= 1
        r = step(t)
        if isinstance(r, Val):
            return r
        if isinstance(r, Stuck):
            return Wrong(r.msg)
        t = r.t


def normalize3(t: Term) -> NormalResult:
    """Iterated reduce3 with the same fuel policy as normalize_d."""
    return _normalize_by(reduce3, t)


def normalize2(t: Term) -> NormalResult:
    """Iterated reduce2 with the same fuel policy as normalize_d."""
    return _normalize_by(reduce2, t)
