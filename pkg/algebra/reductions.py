#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
对称约化与单项式容量剥离
"""

from fractions import Fraction
from typing import Tuple

from infrastructure.exceptions import NotSymmetric
from .polynomial import Exponent, MultiPoly, SymbolRef


def strip_monomial_content(poly: MultiPoly) -> Tuple[MultiPoly, Exponent]:
    """
    除去所有项共有的单项式因子

    Returns:
        (剥离后的多项式, 被除去的指数)
    """
    content = poly.monomial_content()
    if not content:
        return poly, content
    return poly.shift_down(content), content


def symmetric_reduce(poly: MultiPoly, a: SymbolRef, b: SymbolRef,
                     e1: SymbolRef, e2: SymbolRef) -> MultiPoly:
    """
    把关于 a, b 对称的多项式改写为 e1 = a + b、e2 = a·b 的多项式

    每次取 a 指数最大的项 coef·a^i·b^j·m（须 i ≥ j），
    减去 coef·(a+b)^(i−j)(ab)^j·m 并累加 coef·e1^(i−j)·e2^j·m。

    Raises:
        NotSymmetric: 输入关于 a, b 不对称
    """
    table = poly.table
    sa = a if not isinstance(a, str) else table[a]
    sb = b if not isinstance(b, str) else table[b]
    se1 = e1 if not isinstance(e1, str) else table.register(e1)
    se2 = e2 if not isinstance(e2, str) else table.register(e2)
    xa = MultiPoly.variable(table, sa)
    xb = MultiPoly.variable(table, sb)
    elementary_sum = xa + xb
    elementary_product = xa * xb
    v1 = MultiPoly.variable(table, se1)
    v2 = MultiPoly.variable(table, se2)

    remaining = poly
    result = MultiPoly.zero(table)
    while not remaining.is_zero():
        degree_a = remaining.degree(sa)
        layer = remaining.coefficient(sa, degree_a)
        degree_b = layer.degree(sb)
        if degree_a < degree_b:
            raise NotSymmetric("多项式关于两变量不对称", f"{sa.name}^{degree_a} 层含 {sb.name}^{degree_b}")
        coefficient = layer.coefficient(sb, degree_b)
        i, j = degree_a, degree_b
        # 一次处理整个 a^i b^j 层
        if coefficient.contains(sa) or coefficient.contains(sb):
            raise NotSymmetric("系数仍含约化变量", str(coefficient))
        remaining = remaining - coefficient * elementary_sum ** (i - j) * elementary_product ** j
        result = result + coefficient * v1 ** (i - j) * v2 ** j
        if remaining.degree(sa) > degree_a or (remaining.degree(sa) == degree_a
                                              and remaining.coefficient(sa, degree_a).degree(sb) >= degree_b):
            raise NotSymmetric("约化未能前进", str(remaining))
    return result


def is_symmetric(poly: MultiPoly, a: SymbolRef, b: SymbolRef) -> bool:
    """交换 a, b 后不变"""
    table = poly.table
    xa = MultiPoly.variable(table, a)
    xb = MultiPoly.variable(table, b)
    return poly.substitute({a: xb, b: xa}) == poly


def rescale_to_integer(poly: MultiPoly) -> Tuple[MultiPoly, Fraction]:
    """乘以容量倒数得到整系数本原多项式，返回 (结果, 所乘因子)"""
    content = poly.content()
    if not content:
        return poly, Fraction(1)
    factor = Fraction(1) / content
    return poly.scale(factor), factor
