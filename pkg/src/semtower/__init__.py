"""A tower of equivalent evaluators for arithmetic over naturals.

The same language -- literals, addition, subtraction that can underflow --
is run through nine inter-checked semantics: a direct-style small-step
reducer, two continuation-passing variants, decomposition with explicit
continuations, its first-order context form with reduction-based and
reduction-free loops, a fused eval/continue machine, and a big-step
evaluator.
"""

from .syntax import (
    Error,
    Lit,
    NormalResult,
    Operator,
    Opr,
    ParseError,
    PotentialRedex,
    Term,
    Val,
    Value,
    Wrong,
    contract,
    format_term,
    op_count,
    parse,
)
from .direct import Nxt, Stuck, normalize_d, reduce_d, trace_d
from .cps import normalize2, normalize3, reduce2, reduce3
from .decompose_kk import decompose_kk, normalize_kk_rb, normalize_kk_rf, reduce_kk
from .context_machine import (
    Context,
    LeftOf,
    RightOf,
    VisitCounter,
    decompose_kc,
    format_context,
    normalize_kc_rb,
    normalize_kc_rf,
    recompose_io,
    recompose_oi,
    reduce_kc,
    refocus_property,
)
from .machine import big_step_eval, machine_run, machine_step
from .harness import EnumSpec, RandSpec, chain, enumerate_contexts, enumerate_terms, random_terms

__all__ = [
    "Context",
    "EnumSpec",
    "Error",
    "LeftOf",
    "Lit",
    "NormalResult",
    "Nxt",
    "Operator",
    "Opr",
    "ParseError",
    "PotentialRedex",
    "RandSpec",
    "RightOf",
    "Stuck",
    "Term",
    "Val",
    "Value",
    "VisitCounter",
    "Wrong",
    "big_step_eval",
    "chain",
    "contract",
    "decompose_kc",
    "decompose_kk",
    "enumerate_contexts",
    "enumerate_terms",
    "format_context",
    "format_term",
    "machine_run",
    "machine_step",
    "normalize2",
    "normalize3",
    "normalize_d",
    "normalize_kc_rb",
    "normalize_kc_rf",
    "normalize_kk_rb",
    "normalize_kk_rf",
    "op_count",
    "parse",
    "random_terms",
    "recompose_io",
    "recompose_oi",
    "reduce2",
    "reduce3",
    "reduce_d",
    "reduce_kc",
    "reduce_kk",
    "refocus_property",
    "trace_d",
]
