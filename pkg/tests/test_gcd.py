#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
最大公因式、有理式约分与形式次数下的结式
"""

import pytest
import sympy
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from algebra.elimination import clear_denominators, eliminate_linear, formal_degree_factor, resultant
from algebra.gcd import cofactors, poly_gcd, pseudo_remainder
from algebra.polynomial import MultiPoly
from algebra.rational import RationalExpr
from algebra.symbols import SymbolTable
from algebra.text_format import format_poly, parse_poly

TABLE = SymbolTable(["x", "y", "a", "b"])

small = st.integers(min_value=-4, max_value=4)


def text(value: str) -> MultiPoly:
    return parse_poly(value, TABLE)


@st.composite
def linear_forms(draw):
    """x、y、a 的一次式，常数项非零"""
    u, v, w = draw(small), draw(small), draw(small)
    k = draw(small.filter(bool))
    return text("x").scale(u) + text("y").scale(v) + text("a").scale(w) + k


# ============ 最大公因式 ============

class TestPolyGcd:

    def test_shared_factor(self):
        assert poly_gcd(text("(x + y)*(x - 1)"), text("(x + y)*(x + 2)")) == text("x + y")

    def test_result_is_normalized(self):
        assert poly_gcd(text("-2*x*(x + y)"), text("4*(x + y)")) == text("x + y")

    def test_monomial_part(self):
        assert poly_gcd(text("x^2*y"), text("x*y^3")) == text("x*y")
        assert poly_gcd(text("x^2*(y + 1)"), text("x*(y + 1)^2")) == text("x*(y + 1)")

    def test_coprime(self):
        assert poly_gcd(text("x^2 + 1"), text("x + y")) == 1
        assert poly_gcd(text("3"), text("x + y")) == 1

    def test_zero_operand(self):
        assert poly_gcd(text("0"), text("2*x + 2")) == text("x + 1")
        assert poly_gcd(text("0"), text("0")).is_zero()

    def test_multivariate_repeated_factor(self):
        a = text("(a*x + b)*(x - y)^2")
        b = text("(a*x + b)*(x - y)*(x + a)")
        assert poly_gcd(a, b) == text("(a*x + b)*(x - y)").normalize()

    def test_cofactors(self):
        a, b = text("(y + 1)*(x^2 - a)"), text("(y + 1)*(x + b)")
        g, ca, cb = cofactors(a, b)
        assert g == text("y + 1")
        assert g * ca == a
        assert g * cb == b

    def test_pseudo_remainder(self):
        f = [text("1"), text("0"), text("1")]
        g = [text("1"), text("1")]
        assert [format_poly(c) for c in pseudo_remainder(f, g)] == ["2"]

    @settings(max_examples=40, deadline=None)
    @given(linear_forms(), linear_forms(), linear_forms())
    def test_common_factor_divides_gcd(self, f, g, h):
        common = poly_gcd(f * h, g * h)
        assert common.try_divide(h) is not None
        assert (f * h).try_divide(common) is not None
        assert (g * h).try_divide(common) is not None

    @settings(max_examples=40, deadline=None)
    @given(linear_forms(), linear_forms())
    def test_agrees_with_sympy(self, f, g):
        expected = sympy.gcd(sympy.sympify(format_poly(f * g).replace("^", "**")),
                             sympy.sympify(format_poly(f * f).replace("^", "**")))
        ours = sympy.sympify(format_poly(poly_gcd(f * g, f * f)).replace("^", "**"))
        assert sympy.simplify(ours / expected).is_number


# ============ 有理式约分 ============

class TestRationalReduction:

    def test_cancels_factor_of_reducible_denominator(self):
        value = RationalExpr.quotient(text("x + 1"), text("x^2 - 1"))
        assert value.numerator == 1
        assert value.denominator == text("x - 1")

    def test_partial_cancellation_keeps_rest(self):
        value = RationalExpr.quotient(text("(x + y)*a"), text("(x + y)^2*(x - y)"))
        assert value.numerator == text("a")
        assert value.denominator == text("(x + y)*(x - y)").normalize()

    def test_sum_is_reduced(self):
        value = (RationalExpr.quotient(text("x"), text("x^2 - y^2"))
                 + RationalExpr.quotient(text("y"), text("x^2 - y^2")))
        assert value.denominator == text("x - y")
        assert value.numerator == 1

    @settings(max_examples=40, deadline=None)
    @given(linear_forms(), linear_forms(), linear_forms())
    def test_numerator_and_denominator_coprime(self, f, g, h):
        assume(not f.is_constant() and not g.is_constant())
        value = RationalExpr.quotient(f * h, g * h * f)
        assert poly_gcd(value.numerator, value.denominator).is_constant()
        assert value == RationalExpr.quotient(h, g * h)


# ============ 清分母 ============

class TestClearDenominators:

    def test_cancelled_divisor_stays_as_condition(self):
        numerator, condition = clear_denominators(RationalExpr.quotient(text("x^2 - 1"), text("x - 1")))
        assert numerator == text("x + 1")
        assert condition.expr == text("x - 1")

    def test_divisors_survive_arithmetic(self):
        value = RationalExpr.quotient(text("x*y"), text("y")) + text("a")
        numerator, condition = clear_denominators(value)
        assert numerator == text("x + a")
        assert condition.expr == text("y")

    def test_polynomial_has_no_condition(self):
        assert clear_denominators(RationalExpr.from_poly(text("x")))[1] is None


# ============ 线性消元去公因式 ============

class TestEliminateLinearCommonFactor:

    def test_equal_coefficients(self):
        assert eliminate_linear(text("y*x + a"), text("y*x + b"), "x") == text("a - b")

    def test_shared_factor_is_removed(self):
        result = eliminate_linear(text("y^2*x + a"), text("y*(a + 1)*x + b"), "x")
        assert result == text("(a + 1)*a - y*b")

    def test_shared_factor_in_square(self):
        result = eliminate_linear(text("(y + 1)*x^2 + a"), text("(y + 1)*(y - 1)*x^2 + b"), "x", degree=2)
        assert result == text("(y - 1)*a - b")


# ============ 形式次数 ============

def formal_sylvester(cf, cg):
    """按给定系数列表（最高次在前，允许首项为零）构造 Sylvester 矩阵"""
    m, n = len(cf) - 1, len(cg) - 1
    rows = [[0] * i + cf + [0] * (n - 1 - i) for i in range(n)]
    rows += [[0] * i + cg + [0] * (m - 1 - i) for i in range(m)]
    return sympy.Matrix(rows)


class TestFormalDegreeFactor:

    @pytest.mark.parametrize("f, g, m, n, expected", [
        ("2*x^4 + x^3 + 3*x^2 + 2*x + 1", "2*x^2 + x + 3", 5, 2, 2),
        ("x^2 + 3*x + 2", "5*x^3 + x^2 + 3*x + 1", 3, 3, -5),
        ("4*x^2 + x + 1", "x + 3", 2, 2, 4),
        ("x^2 + 1", "x - 2", 2, 1, 1),
    ])
    def test_known_factors(self, f, g, m, n, expected):
        assert formal_degree_factor(text(f), text(g), "x", m, n) == expected

    @pytest.mark.parametrize("cf, cg", [
        ([0, 2, 1, 3, 2, 1], [2, 1, 3]),
        ([0, 1, 3, 2], [5, 1, 3, 1]),
        ([4, 1, 1], [0, 1, 3]),
        ([0, 0, 1, -1], [3, 0, 2]),
    ])
    def test_matches_padded_determinant(self, cf, cg):
        x = sympy.Symbol("x")
        f = sum(c * x ** k for k, c in enumerate(reversed(cf)))
        g = sum(c * x ** k for k, c in enumerate(reversed(cg)))
        ours_f, ours_g = text(str(sympy.expand(f)).replace("**", "^")), text(str(sympy.expand(g)).replace("**", "^"))
        factor = formal_degree_factor(ours_f, ours_g, "x", len(cf) - 1, len(cg) - 1)
        padded = formal_sylvester(cf, cg).det()
        assert factor * resultant(ours_f, ours_g, "x") == int(padded)

    def test_both_dropped_is_zero(self):
        assert formal_degree_factor(text("x + 1"), text("x - 1"), "x", 2, 2).is_zero()

    def test_degree_above_formal(self):
        with pytest.raises(ValueError):
            formal_degree_factor(text("x^3"), text("x"), "x", 2, 1)

    def test_symbolic_lead(self):
        factor = formal_degree_factor(text("x + a"), text("y*x^3 + 1"), "x", 2, 3)
        assert factor == text("-y")
