"""Direct-style one-step reduction and the fueled normalizer.

The strategy is leftmost innermost: depth first, left to right. This is
the reference semantics; every other evaluator in the package is tested
against it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

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


@dataclass(frozen=True, slots=True)
class Nxt:
    """One step succeeded; ``t`` is the next term in the reduction sequence."""

    t: Term


@dataclass(frozen=True, slots=True)
class Stuck:
    """The leftmost-innermost potential redex is not contractible."""

    msg: str


ValueOrTermOrStuck = Union[Val, Nxt, Stuck]


class FuelExhausted(RuntimeError):
    """Step budget ran out: a step-counting invariant is broken."""


def reduce_d(t: Term) -> ValueOrTermOrStuck:
    """Reduce the leftmost-innermost potential redex of ``t``, if any.

    A literal is a value. For an operation, the left operand is tried
    first: a Stuck outcome propagates, a successful step rebuilds the
    operation around the new subterm, and a value shifts attention to the
    right operand. Only when both operands are values is the operation
    itself contracted.
    """
    if isinstance(t, Lit):
        return Val(Value(t.n))
    r1 = reduce_d(t.left)
    if isinstance(r1, Stuck):
        return r1
    if isinstance(r1, Nxt):
        return Nxt(Opr(r1.t, t.op, t.right))
    v1 = r1.v
    r2 = reduce_d(t.right)
    if isinstance(r2, Stuck):
        return r2
    if isinstance(r2, Nxt):
        return Nxt(Opr(term_of_value(v1), t.op, r2.t))
    c = contract(PotentialRedex(t.op, v1, r2.v))
    if isinstance(c, Contractum):
        return Nxt(c.t)
    return Stuck(c.msg)


def normalize_d(t: Term, fuel: int | None = None) -> NormalResult:
    """Iterate reduce_d to a final result.

    Each successful step removes one operator, so op_count(t) + 1 calls
    always suffice; that is the default fuel and running out of it raises
    FuelExhausted rather than returning a result.
    """
    if fuel is None:
        fuel = op_count(t) + 1
    while True:
        if fuel == 0:
            raise FuelExhausted("normalize_d ran out of fuel")
        fuel -= 1
        r = reduce_d(t)
        if isinstance(r, Val):
            return r
        if isinstance(r, Stuck):
            return Wrong(r.msg)
        t = r.t


def trace_d(t: Term) -> tuple[list[Term], NormalResult]:
    """The reduction sequence of ``t``: the list of reducts and the result.

    The starting term is not a reduct, and neither is a value reached
    without any step, so ``trace_d(Lit(n))`` is ``([], Val(Value(n)))``.
    """
    reducts: list[Term] = []
    fuel = op_count(t) + 1
    while True:
        if fuel == 0:
            raise FuelExhausted("trace_d ran out of fuel")
        fuel -= 1
        r = reduce_d(t)
        if isinstance(r, Val):
            return reducts, r
        if isinstance(r, Stuck):
            return reducts, Wrong(r.msg)
        t = r.t
        reducts.append(t)
