#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
模素数算术、jet 行列式与最终结式塔
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from algebra import modular
from algebra.elimination import determinant, resultant
from algebra.polynomial import MultiPoly
from algebra.symbols import SymbolTable
from geometry.scenario import CaseTag, ScenarioProfile, build_constraints
from infrastructure.exceptions import LeadingCoefficientVanished, ProfileError
from services.modular_tower import case1a_final, case1b_final

TABLE = SymbolTable(["x"])

coefficient_lists = st.lists(st.integers(min_value=-9, max_value=9), min_size=1, max_size=5)


def exact(coefficients) -> MultiPoly:
    return MultiPoly.from_univariate([MultiPoly.constant(TABLE, c) for c in coefficients], "x", TABLE)


class TestScalars:

    def test_reduce_fraction(self):
        value = modular.reduce(Fraction(1, 2))
        assert value * 2 % modular.PRIME == 1
        assert modular.reduce(-1) == modular.PRIME - 1

    def test_inverse_of_zero(self):
        with pytest.raises(ZeroDivisionError):
            modular.inverse(modular.PRIME)


class TestUnivariate:

    @settings(max_examples=150, deadline=None)
    @given(coefficient_lists, coefficient_lists)
    def test_res_actual_matches_exact(self, f, g):
        ef, eg = exact(f), exact(g)
        if ef.is_zero() or eg.is_zero() or (ef.is_constant() and eg.is_constant()):
            return
        assert modular.res_actual(f, g) == modular.reduce(resultant(ef, eg, "x").constant_value())

    def test_res_formal_with_degenerate_lead(self):
        # f 形式次数 2，实际次数 1
        f, g = [1, 1], [-2, 0, 1]
        assert modular.res_formal(f, g, 2, 2) == modular.res_actual(f, g)
        assert modular.res_formal(f, g, 1, 2) == modular.res_actual(f, g)
        assert modular.res_formal(f, f, 2, 2) == 0
        with pytest.raises(ValueError):
            modular.res_formal([1, 1, 1], g, 1, 2)

    @settings(max_examples=100, deadline=None)
    @given(st.lists(st.integers(min_value=0, max_value=10**6), min_size=1, max_size=6))
    def test_interpolate_recovers_coefficients(self, coefficients):
        xs = list(range(3, 3 + len(coefficients)))
        ys = [modular.evaluate(coefficients, x) for x in xs]
        assert modular.interpolate(xs, ys) == modular.trim(coefficients)

    def test_gcd_and_division(self):
        f = [-6, 1, 1]
        g = [-2, -3, 2]
        assert modular.gcd(f, g) == [modular.PRIME - 2, 1]
        quotient, rest = modular.divmod_poly(f, [-2, 1])
        assert quotient == [3, 1] and rest == []
        assert modular.valuation([0, 0, 5]) == 2


class TestJets:

    def test_inverse(self):
        a = [3, 1, 4]
        assert modular.jet_mul(a, modular.jet_inverse(a)) == [1, 0, 0]

    def test_det_matches_constant_terms(self):
        rows = [[2, 1, 0], [1, 3, 1], [0, 1, 4]]
        matrix = [[modular.jet_constant(v, 2) for v in row] for row in rows]
        exact_rows = [[MultiPoly.constant(TABLE, v) for v in row] for row in rows]
        expected = modular.reduce(determinant(exact_rows).constant_value())
        assert modular.det_jet(matrix) == [expected, 0]

    def test_det_first_order_term(self):
        # det [[1+ε, 0], [0, 2]] = 2 + 2ε
        matrix = [[[1, 1], [0, 0]], [[0, 0], [2, 0]]]
        assert modular.det_jet(matrix) == [2, 2]

    def test_det_without_unit_pivot(self):
        matrix = [[[0, 1], [1, 0]], [[0, 1], [1, 0]]]
        with pytest.raises(LeadingCoefficientVanished):
            modular.det_jet(matrix)

    def test_sylvester_jet_shape(self):
        a = [modular.jet_constant(v, 1) for v in (-2, 0, 1)]
        b = [modular.jet_constant(v, 1) for v in (1, 1)]
        matrix = modular.sylvester_jet(a, b, 2, 1, 1)
        assert len(matrix) == 3 and all(len(row) == 3 for row in matrix)
        assert modular.det_jet(matrix) == [modular.res_actual([-2, 0, 1], [1, 1])]


class TestTowerGuards:

    def test_requires_concrete_profile(self):
        table = SymbolTable.canonical()
        profile = ScenarioProfile(CaseTag.FOUR_A)
        constraints = build_constraints(profile, table)
        with pytest.raises(ProfileError):
            case1a_final(profile, MultiPoly.variable(table, "lam1"), constraints, seed=1)

    def test_case1b_requires_integer_parameters(self):
        table = SymbolTable.canonical()
        profile = ScenarioProfile(CaseTag.FOUR_B, (1, 1, 1), Fraction(1, 2), Fraction(7))
        constraints = build_constraints(profile, table)
        lam1 = MultiPoly.variable(table, "lam1")
        with pytest.raises(ProfileError):
            case1b_final(profile, lam1, lam1, constraints, seed=1)
