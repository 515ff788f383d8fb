from semtower.syntax import Lit, Val, Value, format_term, parse
from semtower.direct import Nxt, Stuck, reduce_d
from semtower.cps import (
    ApplyCounter,
    normalize2,
    normalize3,
    reduce2,
    reduce2_c,
    reduce3,
    reduce3_c,
)
from semtower.direct import normalize_d
from semtower.harness import EnumSpec, RandSpec, enumerate_terms, random_terms

TERMS = list(enumerate_terms(EnumSpec(max_ops=3, max_lit=3)))
RANDOM_TERMS = random_terms(RandSpec(seed=42, count=1000, max_ops=8, max_lit=50))


class TestReduce3:
    def test_literal(self):
        assert reduce3(Lit(42)) == Val(Value(42))

    def test_stuck_term(self):
        assert reduce3(parse("(1 - 10) - (2 - 20)")) == Stuck("numerical underflow: -9")

    def test_agrees_with_direct_style(self):
        for t in TERMS + RANDOM_TERMS:
            assert reduce3(t) == reduce_d(t), format_term(t)

    def test_observer_applied_exactly_once(self):
        for t in TERMS:
            calls = []
            reduce3_c(t, lambda r: calls.append(r))
            assert len(calls) == 1

    def test_answer_type_is_caller_chosen(self):
        # The same reducer happily produces summand names or booleans.
        t = parse("1 + 2")
        assert reduce3_c(t, lambda r: type(r).__name__) == "Nxt"
        assert reduce3_c(Lit(9), lambda r: isinstance(r, Val)) is True


class TestReduce2:
    def test_literal(self):
        assert reduce2(Lit(7)) == Val(Value(7))

    def test_first_step_of_sum(self):
        t = parse("(1 + 10) + (2 + 20)")
        assert reduce2(t) == Nxt(parse("11 + (2 + 20)"))

    def test_agrees_with_direct_style(self):
        for t in TERMS + RANDOM_TERMS:
            assert reduce2(t) == reduce_d(t), format_term(t)

    def test_error_skips_pending_continuations(self):
        # On stuck terms the delimited reducer applies strictly fewer
        # continuations: the error message short-circuits past them.
        stuck = [t for t in TERMS if isinstance(reduce_d(t), Stuck)]
        assert stuck
        for t in stuck:
            c3 = ApplyCounter()
            reduce3_c(t, lambda r: r, c3)
            c2 = ApplyCounter()
            reduce2_c(t, lambda r: r, c2)
            assert c2.applications < c3.applications, format_term(t)


class TestCpsNormalizers:
    def test_agree_with_normalize_d(self):
        for t in TERMS:
            expected = normalize_d(t)
            assert normalize3(t) == expected, format_term(t)
            assert normalize2(t) == expected, format_term(t)
