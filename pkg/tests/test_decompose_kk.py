import pytest

from semtower.syntax import (
    Lit,
    Operator,
    Opr,
    PotentialRedex,
    Val,
    Value,
    Wrong,
    format_term,
    op_count,
    parse,
    term_of_potential_redex,
)
from semtower.direct import FuelExhausted, Nxt, normalize_d, reduce_d
from semtower.decompose_kk import (
    Dec,
    decompose_kk,
    decompose_term_kk,
    iterate_kk_rb,
    iterate_kk_rf,
    normalize_kk_rb,
    normalize_kk_rf,
    reduce_kk,
)
from semtower.harness import EnumSpec, chain, enumerate_terms

ADD, SUB = Operator.ADD, Operator.SUB
TERMS = list(enumerate_terms(EnumSpec(max_ops=3, max_lit=3)))


def contracted_redex(t, reduct):
    """Oracle: recover the redex reduce_d contracted by diffing t against the reduct."""
    if isinstance(t, Opr) and isinstance(reduct, Lit):
        assert isinstance(t.left, Lit) and isinstance(t.right, Lit)
        return PotentialRedex(t.op, Value(t.left.n), Value(t.right.n))
    assert isinstance(t, Opr) and isinstance(reduct, Opr) and t.op is reduct.op
    if t.left != reduct.left:
        assert t.right == reduct.right
        return contracted_redex(t.left, reduct.left)
    return contracted_redex(t.right, reduct.right)


class TestDecomposeKK:
    def test_literal_is_a_value(self):
        assert decompose_kk(Lit(7)) == Val(Value(7))
        assert decompose_kk(Lit(0)) == Val(Value(0))

    def test_top_level_redex_has_identity_recomposer(self):
        d = decompose_kk(parse("1 - 10"))
        assert isinstance(d, Dec)
        assert d.pr == PotentialRedex(SUB, Value(1), Value(10))
        assert d.kr(Lit(99)) == Lit(99)

    def test_simple_sum(self):
        d = decompose_kk(parse("11 + 22"))
        assert isinstance(d, Dec)
        assert d.pr == PotentialRedex(ADD, Value(11), Value(22))

    def test_recomposer_builds_the_first_reduct(self):
        d = decompose_kk(parse("(1 + 10) + (2 + 20)"))
        assert isinstance(d, Dec)
        assert d.pr == PotentialRedex(ADD, Value(1), Value(10))
        assert d.kr(Lit(11)) == parse("11 + (2 + 20)")

    def test_there_and_back(self):
        # The recomposing continuation is a left inverse of decomposition.
        for t in TERMS:
            d = decompose_kk(t)
            if isinstance(d, Dec):
                assert d.kr(term_of_potential_redex(d.pr)) == t, format_term(t)

    def test_finds_the_redex_that_reduce_d_contracts(self):
        for t in TERMS:
            r = reduce_d(t)
            if isinstance(r, Nxt):
                d = decompose_kk(t)
                assert isinstance(d, Dec)
                assert d.pr == contracted_redex(t, r.t), format_term(t)

    def test_initial_continuations(self):
        # decompose_term_kk with the trivial continuations is decompose_kk.
        t = parse("1 + 2")
        d1 = decompose_term_kk(t, Val, lambda x: x)
        d2 = decompose_kk(t)
        assert d1.pr == d2.pr


class TestReduceKK:
    def test_literal(self):
        assert reduce_kk(Lit(3)) == Val(Value(3))

    def test_first_step_of_sum(self):
        t = parse("(1 + 10) + (2 + 20)")
        assert reduce_kk(t) == Nxt(parse("11 + (2 + 20)"))

    def test_agrees_with_direct_style(self):
        for t in TERMS:
            assert reduce_kk(t) == reduce_d(t), format_term(t)


class TestIterateKK:
    def test_value_short_circuit(self):
        assert iterate_kk_rb(decompose_kk(Lit(9)), 1) == Val(Value(9))
        assert iterate_kk_rf(decompose_kk(Lit(9)), 1) == Val(Value(9))

    def test_sum(self):
        d = decompose_kk(parse("(1 + 10) + (2 + 20)"))
        assert iterate_kk_rb(d, 4) == Val(Value(33))

    def test_underflow(self):
        d = decompose_kk(parse("(1 - (5 + 5)) - (2 - 20)"))
        assert iterate_kk_rb(d, 5) == Wrong("numerical underflow: -9")

    def test_rb_equals_rf(self):
        for t in TERMS:
            fuel = op_count(t) + 1
            assert iterate_kk_rb(decompose_kk(t), fuel) == iterate_kk_rf(
                decompose_kk(t), fuel
            ), format_term(t)

    def test_fuel_fault(self):
        with pytest.raises(FuelExhausted):
            iterate_kk_rb(decompose_kk(chain(3)), 0)
        with pytest.raises(FuelExhausted):
            iterate_kk_rf(decompose_kk(chain(3)), 0)


class TestNormalizeKK:
    def test_literal(self):
        assert normalize_kk_rb(Lit(1)) == Val(Value(1))

    def test_underflow(self):
        t = parse("(1 - (5 + 5)) - (2 - 20)")
        assert normalize_kk_rf(t) == Wrong("numerical underflow: -9")

    def test_agree_with_normalize_d(self):
        for t in TERMS:
            expected = normalize_d(t)
            assert normalize_kk_rb(t) == expected, format_term(t)
            assert normalize_kk_rf(t) == expected, format_term(t)
