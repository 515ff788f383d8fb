"""Decomposition with two delimited continuations.

The single continuation of reduce2_c does two jobs: it either continues
searching for a redex or it rebuilds the surrounding term. Here the two
jobs are split into a decomposing continuation (applied to values) and a
recomposing continuation (applied to terms), which makes one-step
reduction a two-phase affair: decompose, then contract, then recompose.

It also exposes the choice that matters: after contracting, the
reduction-based loop recomposes the whole reduct and decomposes it from
scratch, while the reduction-free loop resumes decomposition at the
contractum with the continuations already in hand, never building the
reduct at all.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Union

from .syntax import (
    Error,
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

DecomposingK = Callable[[Value], "ValueOrDecompositionKK"]
RecomposingK = Callable[[Term], Term]


@dataclass(frozen=True, slots=True)
class Dec:
    """A potential redex with the continuations in effect where it was found.

    ``kr`` plugs a replacement for the redex back into the original term;
    ``kd`` resumes decomposition as if the redex site already held a value.
    """

    pr: PotentialRedex
    kd: DecomposingK
    kr: RecomposingK


ValueOrDecompositionKK = Union[Val, Dec]


def decompose_term_kk(
    t: Term, kd: DecomposingK, kr: RecomposingK
) -> ValueOrDecompositionKK:
    """Search ``t`` for its leftmost-innermost potential redex.

    Descending into an operand extends ``kr`` with the corresponding
    frame ("hole op t2", then "v1 op hole") so that whenever a redex is
    delivered, its recomposing continuation rebuilds the whole input.
    """
    if isinstance(t, Lit):
        return kd(Value(t.n))
    t1, op, t2 = t.left, t.op, t.right
    return decompose_term_kk(
        t1,
        lambda v1: decompose_term_kk(
            t2,
            lambda v2: Dec(PotentialRedex(op, v1, v2), kd, kr),
            lambda x: kr(Opr(term_of_value(v1), op, x)),
        ),
        lambda x: kr(Opr(x, op, t2)),
    )


def decompose_kk(t: Term) -> ValueOrDecompositionKK:
    """decompose_term_kk with the trivial continuations."""
    return decompose_term_kk(t, Val, lambda x: x)


def reduce_kk(t: Term) -> ValueOrTermOrStuck:
    """One-step reduction as decompose/contract/recompose."""
    d = decompose_kk(t)
    if isinstance(d, Val):
        return d
    c = contract(d.pr)
    if isinstance(c, Error):
        return Stuck(c.msg)
    return Nxt(d.kr(c.t))


def iterate_kk_rb(d: ValueOrDecompositionKK, fuel: int) -> NormalResult:
    """Reduction-based loop: recompose each reduct, then decompose it anew.

    One fuel unit is consumed per contraction.
    """
    while True:
        if isinstance(d, Val):
            return d
        c = contract(d.pr)
        if isinstance(c, Error):
            return Wrong(c.msg)
        if fuel == 0:
            raise FuelExhausted("iterate_kk_rb ran out of fuel")
        fuel -= 1
        d = decompose_kk(d.kr(c.t))


def iterate_kk_rf(d: ValueOrDecompositionKK, fuel: int) -> NormalResult:
    """Reduction-free loop: resume decomposition at the contractum.

    No reduct is ever built; the continuations captured in the
    decomposition carry the search onward in place.
    """
    while True:
        if isinstance(d, Val):
            return d
        c = contract(d.pr)
        if isinstance(c, Error):
            return Wrong(c.msg)
        if fuel == 0:
            raise FuelExhausted("iterate_kk_rf ran out of fuel")
        fuel -= 1
        d = decompose_term_kk(c.t, d.kd, d.kr)


def normalize_kk_rb(t: Term) -> NormalResult:
    return iterate_kk_rb(decompose_kk(t), op_count(t) + 1)


def normalize_kk_rf(t: Term) -> NormalResult:
    return iterate_kk_rf(decompose_kk(t), op_count(t) + 1)
