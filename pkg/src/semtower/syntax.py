"""Object language: arithmetic expressions over naturals with + and -.

Terms are either literals or binary operations. Subtraction on naturals
can underflow; contracting such a redex yields an error message instead
of a term, and that message is the single error surface of the whole
package (wire format: ``numerical underflow: -<k>``).

Everything here is immutable and compared structurally.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Union


class Operator(Enum):
    """The two operators, ordered ADD < SUB for deterministic enumeration."""

    ADD = "+"
    SUB = "-"

    @property
    def symbol(self) -> str:
        return self.value


@dataclass(frozen=True, slots=True)
class Lit:
    """A natural-number literal."""

    n: int


@dataclass(frozen=True, slots=True)
class Opr:
    """A binary operation on two subterms."""

    left: "Term"
    op: Operator
    right: "Term"


Term = Union[Lit, Opr]


@dataclass(frozen=True, slots=True)
class Value:
    """A fully reduced term: a natural number."""

    n: int


@dataclass(frozen=True, slots=True)
class PotentialRedex:
    """An operator applied to two values; may or may not be contractible."""

    op: Operator
    v1: Value
    v2: Value


@dataclass(frozen=True, slots=True)
class Contractum:
    """Successful contraction: the replacement term (always a literal here)."""

    t: Term


@dataclass(frozen=True, slots=True)
class Error:
    """Failed contraction: the error message. A result, not a fault."""

    msg: str


ContractumOrError = Union[Contractum, Error]


@dataclass(frozen=True, slots=True)
class Val:
    """Final observable: a value."""

    v: Value


@dataclass(frozen=True, slots=True)
class Wrong:
    """Final observable: evaluation got stuck with an error message."""

    msg: str


NormalResult = Union[Val, Wrong]


def underflow_message(deficit: int) -> str:
    """Wire format for an underflow by ``deficit`` (subtrahend - minuend)."""
    return f"numerical underflow: -{deficit}"


def contract(pr: PotentialRedex) -> ContractumOrError:
    """Perform one operation. Total: underflow yields Error, never a fault."""
    n1, n2 = pr.v1.n, pr.v2.n
    if pr.op is Operator.ADD:
        return Contractum(Lit(n1 + n2))
    if n1 >= n2:
        return Contractum(Lit(n1 - n2))
    return Error(underflow_message(n2 - n1))


def term_of_value(v: Value) -> Term:
    return Lit(v.n)


def term_of_potential_redex(pr: PotentialRedex) -> Term:
    return Opr(Lit(pr.v1.n), pr.op, Lit(pr.v2.n))


def op_count(t: Term) -> int:
    """Number of operators in a term; one reduction step removes exactly one."""
    if isinstance(t, Lit):
        return 0
    return 1 + op_count(t.left) + op_count(t.right)


class ParseError(ValueError):
    """Raised on malformed input; ``offset`` is the 0-based byte offset."""

    def __init__(self, msg: str, offset: int):
        super().__init__(f"{msg} at offset {offset}")
        self.reason = msg
        self.offset = offset


def parse(src: str) -> Term:
    """Parse concrete syntax into a term.

    Grammar: ``expr := operand (('+'|'-') operand)*`` (left-associative),
    ``operand := natural | '(' expr ')'``. Whitespace is insignificant;
    naturals are unsigned decimal.
    """
    pos = 0
    end = len(src)
    digits = "0123456789"

    def byte_offset(i: int) -> int:
        return len(src[:i].encode("utf-8"))

    def skip_ws() -> None:
        nonlocal pos
        while pos < end and src[pos] in " \t\r\n":
            pos += 1

    def operand() -> Term:
        nonlocal pos
        skip_ws()
        if pos >= end:
            raise ParseError("unexpected end of input", byte_offset(pos))
        c = src[pos]
        if c in digits:
            start = pos
            while pos < end and src[pos] in digits:
                pos += 1
            return Lit(int(src[start:pos]))
        if c == "(":
            pos += 1
            t = expr()
            skip_ws()
            if pos >= end:
                raise ParseError("unbalanced parenthesis", byte_offset(pos))
            if src[pos] != ")":
                raise ParseError("unexpected character", byte_offset(pos))
            pos += 1
            return t
        raise ParseError("unexpected character", byte_offset(pos))

    def expr() -> Term:
        nonlocal pos
        t = operand()
        while True:
            skip_ws()
            if pos < end and src[pos] in "+-":
                op = Operator.ADD if src[pos] == "+" else Operator.SUB
                pos += 1
                t = Opr(t, op, operand())
            else:
                return t

    t = expr()
    skip_ws()
    if pos != end:
        raise ParseError("unexpected character", byte_offset(pos))
    return t


def format_operand(t: Term) -> str:
    """Render a term as an operand: literals bare, operations parenthesized."""
    if isinstance(t, Lit):
        return str(t.n)
    return f"({format_term(t)})"


def format_term(t: Term) -> str:
    """Render a term; round-trips through parse."""
    if isinstance(t, Lit):
        return str(t.n)
    return f"{format_operand(t.left)} {t.op.symbol} {format_operand(t.right)}"
