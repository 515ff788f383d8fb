"""The eval/continue abstract machine, and the big-step evaluator it mirrors.

The machine is the reduction-free loop fused with the two-mode
decomposition worker, with contraction inlined into the continue
transitions. Eval mode walks the term pushing frames; continue mode
consumes frames, performing one operation per RightOf frame. No
intermediate reduct and no separate decompose/contract phases remain:
every transition is a single table lookup away.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Union

from .syntax import (
    Lit,
    NormalResult,
    Operator,
    Term,
    Val,
    Value,
    Wrong,
    op_count,
    underflow_message,
)
from .direct import FuelExhausted
from .context_machine import Context, LeftOf, RightOf


@dataclass(frozen=True, slots=True)
class EvalMode:
    """Walking down a term, accumulating its context."""

    t: Term
    context: Context


@dataclass(frozen=True, slots=True)
class ContinueMode:
    """Delivering a value to the innermost frame of the context."""

    context: Context
    v: Value


@dataclass(frozen=True, slots=True)
class FinalVal:
    v: Value


@dataclass(frozen=True, slots=True)
class FinalWrong:
    msg: str


MachineState = Union[EvalMode, ContinueMode, FinalVal, FinalWrong]


def machine_step(s: MachineState) -> MachineState:
    """The transition function. Total on non-final states, a fault otherwise."""
    if isinstance(s, EvalMode):
        t = s.t
        if isinstance(t, Lit):
            return ContinueMode(s.context, Value(t.n))
        return EvalMode(t.left, (LeftOf(t.op, t.right),) + s.context)
    if isinstance(s, ContinueMode):
        if not s.context:
            return FinalVal(s.v)
        frame = s.context[0]
        rest = s.context[1:]
        if isinstance(frame, LeftOf):
            return EvalMode(frame.right, (RightOf(s.v, frame.op),) + rest)
        n1, n2 = frame.left.n, s.v.n
        if frame.op is Operator.ADD:
            return ContinueMode(rest, Value(n1 + n2))
        if n1 >= n2:
            return ContinueMode(rest, Value(n1 - n2))
        return FinalWrong(underflow_message(n2 - n1))
    raise ValueError("machine_step applied to a final state")


def iter_machine_states(t: Term) -> Iterator[MachineState]:
    """All states of the run on ``t``, initial and final included.

    The step budget 4*op_count(t) + 3 is a checked over-approximation;
    exceeding it means the machine lost determinism or termination.
    """
    budget = 4 * op_count(t) + 3
    s: MachineState = EvalMode(t, ())
    yield s
    steps = 0
    while not isinstance(s, (FinalVal, FinalWrong)):
        if steps >= budget:
            raise FuelExhausted("machine step budget exceeded")
        s = machine_step(s)
        steps += 1
        yield s


@dataclass(frozen=True, slots=True)
class MachineRun:
    result: NormalResult
    steps: int


def machine_run(t: Term) -> MachineRun:
    """Drive the machine from EvalMode(t, empty) to a final state."""
    steps = -1
    for s in iter_machine_states(t):
        steps += 1
    if isinstance(s, FinalVal):
        return MachineRun(Val(s.v), steps)
    return MachineRun(Wrong(s.msg), steps)


def big_step_eval(t: Term) -> NormalResult:
    """The compositional evaluator: recurse on subterms, short-circuit errors."""
    if isinstance(t, Lit):
        return Val(Value(t.n))
    r1 = big_step_eval(t.left)
    if isinstance(r1, Wrong):
        return r1
    r2 = big_step_eval(t.right)
    if isinstance(r2, Wrong):
        return r2
    n1, n2 = r1.v.n, r2.v.n
    if t.op is Operator.ADD:
        return Val(Value(n1 + n2))
    if n1 >= n2:
        return Val(Value(n1 - n2))
    return Wrong(underflow_message(n2 - n1))
