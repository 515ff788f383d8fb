import pytest

from semtower.syntax import Lit, Operator, Val, Value, Wrong, format_term, op_count, parse
from semtower.direct import FuelExhausted, Nxt, Stuck, normalize_d, reduce_d, trace_d
from semtower.harness import EnumSpec, chain, enumerate_terms

TERMS = list(enumerate_terms(EnumSpec(max_ops=3, max_lit=3)))


def find_leftmost_redex(t):
    """Independent oracle: the leftmost-innermost potential redex, if any."""
    if isinstance(t, Lit):
        return None
    found = find_leftmost_redex(t.left)
    if found is not None:
        return found
    found = find_leftmost_redex(t.right)
    if found is not None:
        return found
    if isinstance(t.left, Lit) and isinstance(t.right, Lit):
        return (t.op, t.left.n, t.right.n)
    return None


class TestReduceD:
    def test_first_step_of_sum(self):
        t = parse("(1 + 10) + (2 + 20)")
        assert reduce_d(t) == Nxt(parse("11 + (2 + 20)"))

    def test_stuck_subtraction(self):
        assert reduce_d(parse("(1 - 10) - (2 - 20)")) == Stuck("numerical underflow: -9")

    def test_literal_is_a_value(self):
        assert reduce_d(Lit(42)) == Val(Value(42))

    def test_one_step_removes_one_operator(self):
        for t in TERMS:
            r = reduce_d(t)
            if isinstance(r, Nxt):
                assert op_count(r.t) == op_count(t) - 1, format_term(t)

    def test_deterministic_and_order_independent(self):
        first = [reduce_d(t) for t in TERMS]
        again = [reduce_d(t) for t in reversed(TERMS)]
        assert first == list(reversed(again))


class TestNormalizeD:
    def test_sum(self):
        assert normalize_d(parse("(1 + 10) + (2 + 20)")) == Val(Value(33))

    def test_underflow(self):
        t = parse("(1 - (5 + 5)) - (2 - 20)")
        assert normalize_d(t) == Wrong("numerical underflow: -9")

    def test_literal(self):
        assert normalize_d(Lit(0)) == Val(Value(0))

    def test_extra_fuel_never_changes_the_result(self):
        for t in TERMS:
            assert normalize_d(t) == normalize_d(t, fuel=op_count(t) + 10)

    def test_default_fuel_is_tight(self):
        # A chain consumes every step, so one unit less must fault.
        t = chain(5)
        with pytest.raises(FuelExhausted):
            normalize_d(t, fuel=op_count(t))

    def test_stuck_characterization(self):
        # Wrong iff the last term of the trace has an underflowing leftmost redex.
        for t in TERMS:
            reducts, result = trace_d(t)
            last = reducts[-1] if reducts else t
            redex = find_leftmost_redex(last)
            underflows = redex is not None and redex[0] is Operator.SUB and redex[1] < redex[2]
            assert isinstance(result, Wrong) == underflows, format_term(t)


class TestTraceD:
    def test_sum_sequence(self):
        reducts, result = trace_d(parse("(1 + 10) + (2 + 20)"))
        assert [format_term(r) for r in reducts] == ["11 + (2 + 20)", "11 + 22", "33"]
        assert result == Val(Value(33))

    def test_underflow_sequence(self):
        reducts, result = trace_d(parse("(1 - (5 + 5)) - (2 - 20)"))
        assert [format_term(r) for r in reducts] == ["(1 - 10) - (2 - 20)"]
        assert result == Wrong("numerical underflow: -9")

    def test_value_is_not_a_reduct(self):
        assert trace_d(Lit(5)) == ([], Val(Value(5)))

    def test_trace_length_matches_operator_count_when_unstuck(self):
        for t in TERMS:
            reducts, result = trace_d(t)
            if isinstance(result, Val):
                assert len(reducts) == op_count(t)
            assert normalize_d(t) == result
