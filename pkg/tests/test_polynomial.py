#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
多项式核心：规范文本、环公理、规范化与精确除法
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from algebra.polynomial import MultiPoly, check_term_count, term_guard
from algebra.reductions import is_symmetric, rescale_to_integer, strip_monomial_content, symmetric_reduce
from algebra.symbols import SymbolTable, alias_name
from algebra.text_format import format_poly, parse_poly
from infrastructure.exceptions import (
    MissingAssignment,
    NotDivisible,
    NotSymmetric,
    ParseError,
    ResourceGuardError,
)

XYZ = SymbolTable(["x", "y", "z"])

coefficients = st.fractions(min_value=-20, max_value=20, max_denominator=6)
exponents = st.tuples(*(st.integers(min_value=0, max_value=3) for _ in range(3)))


@st.composite
def polys(draw, max_terms=5):
    terms = draw(st.dictionaries(exponents, coefficients, max_size=max_terms))
    return MultiPoly(terms, XYZ)


def text(value: str) -> MultiPoly:
    return parse_poly(value, XYZ)


# ============ 规范文本 ============

class TestCanonicalText:

    @pytest.mark.parametrize("source, expected", [
        ("y + x^2", "x^2 + y"),
        ("x*y + x^2", "x^2 + x*y"),
        ("y^2 + x*y", "x*y + y^2"),
        ("-1 + x", "x - 1"),
        ("2*x - 3*y*z + 1/2", "-3*y*z + 2*x + 1/2"),
        ("(x - y)*(x + y)", "x^2 - y^2"),
        ("x - x", "0"),
        ("2x y", "2*x*y"),
        ("x/4", "1/4*x"),
    ])
    def test_format(self, source, expected):
        assert format_poly(text(source)) == expected

    def test_parse_of_format_is_identity(self):
        value = text("3*x^2*y - 1/3*z + 7")
        assert parse_poly(format_poly(value), XYZ) == value

    def test_unknown_names_are_registered(self):
        table = SymbolTable()
        value = parse_poly("a*b + b", table)
        assert table.names() == ["a", "b"]
        assert format_poly(value) == "a*b + b"

    @pytest.mark.parametrize("source", ["", "x +", "(x", "x / y", "x ^ y", "x $ y", "x / 0"])
    def test_parse_errors(self, source):
        with pytest.raises(ParseError):
            text(source)

    def test_canonical_fixture_order(self, table):
        value = parse_poly("e1_lam1 + lam1", table)
        assert format_poly(value) == "lam1 + e1_lam1"


# ============ 环公理 ============

class TestRingAxioms:

    @settings(max_examples=200, deadline=None)
    @given(polys(), polys(), polys())
    def test_associativity_and_distributivity(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c

    @settings(max_examples=200, deadline=None)
    @given(polys(), polys())
    def test_commutativity_and_identities(self, a, b):
        one = MultiPoly.constant(XYZ, 1)
        assert a + b == b + a
        assert a * b == b * a
        assert a * one == a
        assert (a - a).is_zero()
        assert a + MultiPoly.zero(XYZ) == a

    @settings(max_examples=200, deadline=None)
    @given(polys(), polys())
    def test_evaluation_is_a_homomorphism(self, a, b):
        point = {"x": Fraction(2), "y": Fraction(-1, 3), "z": Fraction(5)}
        assert (a * b).evaluate(point) == a.evaluate(point) * b.evaluate(point)
        assert (a - b).evaluate(point) == a.evaluate(point) - b.evaluate(point)

    def test_power(self):
        assert text("x + 1") ** 3 == text("x^3 + 3*x^2 + 3*x + 1")
        assert text("x + y") ** 0 == 1
        with pytest.raises(ValueError):
            text("x") ** -1

    def test_float_coefficients_are_rejected(self):
        with pytest.raises(TypeError):
            MultiPoly({(1,): 0.5}, XYZ)

    def test_tables_must_match(self):
        other = SymbolTable(["x"])
        with pytest.raises(ValueError):
            text("x") + MultiPoly.variable(other, "x")


# ============ 规范化 ============

class TestNormalize:

    @settings(max_examples=500, deadline=None)
    @given(polys(), st.fractions(min_value=-9, max_value=9, max_denominator=5).filter(bool))
    def test_idempotent_and_scale_invariant(self, p, factor):
        normal = p.normalize()
        assert normal.normalize() == normal
        assert p.scale(factor).normalize() == normal

    @settings(max_examples=200, deadline=None)
    @given(polys())
    def test_primitive_with_positive_lead(self, p):
        normal = p.normalize()
        if normal.is_zero():
            assert p.is_zero()
        else:
            assert normal.content() == 1
            assert normal.leading_coefficient() > 0

    def test_examples(self):
        assert format_poly(text("-4*x + 6*y").normalize()) == "2*x - 3*y"
        assert format_poly(text("1/2*x - 1/3").normalize()) == "3*x - 2"
        assert text("0").normalize().is_zero()

    def test_rescale_to_integer(self):
        value, factor = rescale_to_integer(text("1/2*x + 1/3"))
        assert format_poly(value) == "3*x + 2"
        assert factor == 6


# ============ 结构操作 ============

class TestStructure:

    def test_coefficients_and_degree(self):
        p = text("x^2*y + 3*x*z - y + 1")
        assert p.degree("x") == 2
        assert p.degree("z") == 1
        assert p.coefficient("x", 1) == text("3*z")
        assert p.as_univariate("x") == [text("1 - y"), text("3*z"), text("y")]
        assert MultiPoly.from_univariate(p.as_univariate("x"), "x") == p
        assert MultiPoly.zero(XYZ).degree("x") == -1

    def test_partial_derivative(self):
        assert text("x^3*y + x*z").partial_derivative("x") == text("3*x^2*y + z")

    def test_substitute_is_simultaneous(self):
        swapped = text("x - 2*y").substitute({"x": text("y"), "y": text("x")})
        assert swapped == text("y - 2*x")

    def test_partial_evaluate_and_evaluate(self):
        p = text("x*y + z")
        assert p.partial_evaluate({"x": 3}) == text("3*y + z")
        assert p.evaluate({"x": 1, "y": 2, "z": Fraction(1, 2)}) == Fraction(5, 2)
        with pytest.raises(MissingAssignment):
            p.evaluate({"x": 1})

    def test_symbols_present(self):
        p = text("z^2 + x")
        assert p.symbol_names() == ["x", "z"]
        assert p.contains("z") and not p.contains("y")

    def test_constant_value(self):
        assert text("7/3").constant_value() == Fraction(7, 3)
        with pytest.raises(ValueError):
            text("x").constant_value()

    def test_monomial_content(self):
        p = text("x^2*y^3 + x^3*y*z")
        stripped, exponent = strip_monomial_content(p)
        assert exponent == (2, 1)
        assert stripped == text("y^2 + x*z")


# ============ 精确除法 ============

class TestExactDivide:

    @settings(max_examples=200, deadline=None)
    @given(polys(max_terms=4), polys(max_terms=3))
    def test_product_divides_back(self, a, b):
        if b.is_zero():
            return
        assert (a * b).exact_divide(b) == a

    def test_not_divisible(self):
        with pytest.raises(NotDivisible):
            text("x^2 + 1").exact_divide(text("x + 1"))
        assert text("x^2 + 1").try_divide(text("x - y")) is None

    def test_zero_divisor(self):
        with pytest.raises(ZeroDivisionError):
            text("x").exact_divide(MultiPoly.zero(XYZ))

    def test_constant_divisor(self):
        assert text("4*x + 2").exact_divide(text("2")) == text("2*x + 1")


# ============ 对称约化 ============

class TestSymmetricReduce:

    def test_reduces_to_elementary(self):
        table = SymbolTable(["a", "b"])
        p = parse_poly("a^2 + b^2 + 3*a*b + a + b", table)
        assert is_symmetric(p, "a", "b")
        reduced = symmetric_reduce(p, "a", "b", "s", "t")
        assert reduced == parse_poly("s^2 + t + s", table)

    def test_rejects_asymmetric(self):
        table = SymbolTable(["a", "b"])
        p = parse_poly("a^2 + b", table)
        assert not is_symmetric(p, "a", "b")
        with pytest.raises(NotSymmetric):
            symmetric_reduce(p, "a", "b", "s", "t")


# ============ 项数保护与别名 ============

class TestGuardsAndAliases:

    def test_term_guard_limits_products(self):
        wide = text("x + y + z + 1")
        with term_guard(10, "展开"):
            with pytest.raises(ResourceGuardError) as info:
                wide ** 3
        assert info.value.step == "展开"
        assert len(wide ** 3) == 20

    def test_check_term_count_outside_guard(self):
        check_term_count(1000)

    def test_alias_names(self):
        assert alias_name("e1", "lam1") == "e1_lam1"
        assert alias_name("e1", "e1_lam1") == "e1e1_lam1"
        assert alias_name("eu", "a1") == "eu_a1"

    def test_alias_is_unique_per_pair(self):
        table = SymbolTable(["lam1"])
        first = table.alias("e1", table["lam1"])
        assert table.alias("e1", table["lam1"]) is first
        assert table.aliases() == {("e1", "lam1"): first}

    def test_invalid_symbol_name(self):
        with pytest.raises(ValueError):
            SymbolTable().register("1x")
