#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
随机零检验、gcd 预言机与特化见证
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from algebra.elimination import resultant
from algebra.polynomial import MultiPoly
from algebra.symbols import SymbolTable
from algebra.text_format import parse_poly
from infrastructure.exceptions import ExhaustedTrials
from services.numeric_oracle import (
    SamplePlan,
    TowerStage,
    evaluate_tower,
    gcd_oracle,
    residual_plan,
    specialization_witness,
    univariate_gcd,
    witness_plan,
    zero_test,
)

TABLE = SymbolTable(["x", "y", "a"])
SEED = 20240611


def text(value: str) -> MultiPoly:
    return parse_poly(value, TABLE)


def from_coefficients(coefficients) -> MultiPoly:
    return MultiPoly.from_univariate([MultiPoly.constant(TABLE, c) for c in coefficients], "x", TABLE)


integer_polys = st.lists(st.integers(min_value=-6, max_value=6), min_size=2, max_size=4).filter(
    lambda cs: cs[-1] != 0)


# ============ 采样计划 ============

class TestSamplePlan:

    def test_defaults(self):
        assert residual_plan(SEED).to_dict() == {"seed": SEED, "bound": 20, "trials": 16}
        assert witness_plan(SEED).to_dict() == {"seed": SEED, "bound": 50, "trials": 64}

    @pytest.mark.parametrize("bound, trials", [(1, 16), (20, 0)])
    def test_invalid(self, bound, trials):
        with pytest.raises(ValueError):
            SamplePlan(SEED, bound, trials)

    def test_with_forbidden_keeps_settings(self):
        plan = SamplePlan(SEED, 30, 5).with_forbidden([text("x")])
        assert (plan.seed, plan.bound, plan.trials) == (SEED, 30, 5)
        assert plan.forbidden == (text("x"),)


# ============ 零检验 ============

class TestZeroTest:

    def test_zero_polynomial(self):
        result = zero_test(text("x - x"), residual_plan(SEED))
        assert not result.proved_nonzero
        assert result.trials == 0
        assert "PlausiblyZero" in result.describe()

    def test_constant(self):
        result = zero_test(text("5"), residual_plan(SEED))
        assert result.proved_nonzero
        assert result.value == 5

    def test_witness_is_exact(self):
        poly = text("x^2 + 1 - y*a")
        result = zero_test(poly, residual_plan(SEED))
        assert result.proved_nonzero
        assert set(result.witness) == {"x", "y", "a"}
        assert poly.evaluate(result.witness) == result.value != 0
        assert "ProvedNonzero" in result.describe()

    def test_reproducible(self):
        poly = text("x*y - a")
        first = zero_test(poly, residual_plan(SEED))
        second = zero_test(poly, residual_plan(SEED))
        assert first.witness == second.witness
        assert first.trials == second.trials

    def test_forbidden_points_are_skipped(self):
        plan = residual_plan(SEED, trials=8).with_forbidden([MultiPoly.zero(TABLE)])
        result = zero_test(text("x + 1"), plan)
        assert not result.proved_nonzero
        assert result.trials == 8

    def test_sample_range(self):
        plan = SamplePlan(SEED, bound=3, trials=4)
        result = zero_test(text("x^2 + y^2 + 1"), plan)
        assert all(abs(v.numerator) <= 3 and 1 <= v.denominator <= 3 for v in result.witness.values())


# ============ gcd 预言机 ============

class TestGcdOracle:

    def test_shared_factor(self):
        f = [-6, 1, 1]          # (x − 2)(x + 3)
        g = [-2, -3, 2]         # (x − 2)(2x + 1)
        assert gcd_oracle(f, g)
        assert univariate_gcd(f, g) == [-2, 1]

    def test_coprime(self):
        assert not gcd_oracle([-1, 0, 1], [-4, 0, 1])
        assert univariate_gcd([0], [0]) == []

    @settings(max_examples=150, deadline=None)
    @given(integer_polys, integer_polys)
    def test_agrees_with_resultant(self, f, g):
        vanishes = resultant(from_coefficients(f), from_coefficients(g), "x").is_zero()
        assert gcd_oracle(f, g) == vanishes

    @settings(max_examples=80, deadline=None)
    @given(integer_polys, integer_polys, st.integers(min_value=-5, max_value=5))
    def test_constructed_common_root(self, f, g, root):
        linear = text(f"x - {root}") if root >= 0 else text(f"x + {-root}")
        ff = from_coefficients(f) * linear
        gg = from_coefficients(g) * linear
        assert resultant(ff, gg, "x").is_zero()
        to_list = lambda p: [c.constant_value() for c in p.as_univariate("x")]
        assert gcd_oracle(to_list(ff), to_list(gg))


# ============ 特化见证 ============

def _toy_tower():
    return [TowerStage("r1", text("x^2 - a"), text("x*y - 1"), "x")]


class TestSpecializationWitness:

    def test_toy_tower(self):
        witness = specialization_witness(_toy_tower(), "y", witness_plan(SEED))
        assert set(witness.assignment) == {"a"}
        expected = resultant(text("x^2 - a"), text("x*y - 1"), "x")
        assert witness.final_poly == expected.partial_evaluate(witness.assignment)
        assert witness.value == expected.evaluate({**witness.assignment, "y": witness.survivor_value})
        assert witness.value != 0
        assert "y=" in witness.describe()

    def test_reproducible(self):
        first = specialization_witness(_toy_tower(), "y", witness_plan(SEED))
        second = specialization_witness(_toy_tower(), "y", witness_plan(SEED))
        assert first.assignment == second.assignment
        assert first.survivor_value == second.survivor_value

    def test_negative_control(self):
        f = text("x^2 - a*y")
        with pytest.raises(ExhaustedTrials):
            specialization_witness([TowerStage("same", f, f, "x")], "y", witness_plan(SEED, trials=8))

    def test_chained_stages(self):
        tower = [
            TowerStage("first", text("x^2 - a"), text("x - y"), "x"),
            TowerStage("second", "first", text("a - 4"), "a"),
        ]
        final = evaluate_tower(tower, {})
        assert final == text("y^2 - 4").scale(-1) or final == text("y^2 - 4")
        witness = specialization_witness(tower, "y", witness_plan(SEED))
        assert witness.assignment == {}

    def test_vanishing_leading_coefficient(self):
        tower = [TowerStage("lead", text("a*x^2 + 1"), text("x - y"), "x")]
        assert evaluate_tower(tower, {"a": Fraction(0)}) is None
        assert evaluate_tower(tower, {"a": Fraction(2)}) == text("2*y^2 + 1")

    def test_empty_tower(self):
        with pytest.raises(ExhaustedTrials):
            specialization_witness([], "y", witness_plan(SEED))
