#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
多元多项式最大公因式

在 ℚ[x₁, …, xₙ] 上递归计算：选定一个两者共有的主变量，
按该变量分出容量（系数的 gcd，递归求得）与本原部分，
本原部分走本原余式序列（伪余式后再取本原部分）。
结果规范化为本原且首项系数为正。
"""

from typing import List, Optional, Tuple

from .polynomial import MultiPoly
from .symbols import Symbol

UnivariateCoefficients = List[MultiPoly]


# ============ 关于主变量的一元运算 ============

def _trim(coefficients: UnivariateCoefficients) -> UnivariateCoefficients:
    while len(coefficients) > 1 and coefficients[-1].is_zero():
        coefficients.pop()
    return coefficients


def _is_zero(coefficients: UnivariateCoefficients) -> bool:
    return len(coefficients) == 1 and coefficients[0].is_zero()


def pseudo_remainder(f: UnivariateCoefficients, g: UnivariateCoefficients) -> UnivariateCoefficients:
    """
    伪余式 prem(f, g)：lc(g)^k·f 除以 g 的余式

    Args:
        f, g: 系数列表 c0..cd，g 非零
    """
    n = len(g) - 1
    lead = g[-1]
    r = list(f)
    while not _is_zero(r) and len(r) - 1 >= n:
        d = len(r) - 1
        top = r[-1]
        r = [c * lead for c in r]
        for i, gc in enumerate(g):
            r[d - n + i] = r[d - n + i] - top * gc
        r.pop()
        _trim(r)
        if not r:
            r = [MultiPoly.zero(lead.table)]
    return r


def _content(coefficients: UnivariateCoefficients) -> MultiPoly:
    """非零系数的 gcd，得到常数时提前结束"""
    result: Optional[MultiPoly] = None
    for coefficient in coefficients:
        if coefficient.is_zero():
            continue
        result = coefficient.normalize() if result is None else poly_gcd(result, coefficient)
        if result.is_constant():
            break
    if result is None:
        return MultiPoly.constant(coefficients[0].table, 1)
    return result


def _primitive(coefficients: UnivariateCoefficients) -> Tuple[MultiPoly, UnivariateCoefficients]:
    content = _content(coefficients)
    if content.is_constant():
        scale = content.constant_value()
        return content, [c.scale(1 / scale) for c in coefficients]
    return content, [c.exact_divide(content) for c in coefficients]


def _main_symbol(a: MultiPoly, b: MultiPoly) -> Optional[Symbol]:
    """共有变量中两者次数之和最小者"""
    shared = set(a.symbol_ids()) & set(b.symbol_ids())
    if not shared:
        return None
    table = a.table
    symbols = [table.by_id(i) for i in sorted(shared)]
    return min(symbols, key=lambda s: a.degree(s) + b.degree(s))


# ============ 入口 ============

def poly_gcd(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    """
    最大公因式，规范化为本原且首项系数为正

    任一为零时返回另一个的规范形式；两者都为零时返回零。
    """
    if a.is_zero():
        return b.normalize()
    if b.is_zero():
        return a.normalize()
    table = a.table
    one = MultiPoly.constant(table, 1)
    if a.is_constant() or b.is_constant():
        return one

    # 单项式部分单独处理
    low_a, low_b = a.monomial_content(), b.monomial_content()
    shared_low = tuple(min(x, y) for x, y in zip(low_a, low_b))
    monomial = one
    for i, power in enumerate(shared_low):
        if power:
            monomial = monomial * MultiPoly.variable(table, table.by_id(i), power)
    if low_a:
        a = a.shift_down(low_a)
    if low_b:
        b = b.shift_down(low_b)

    quotient = a.try_divide(b) if len(b) <= len(a) else b.try_divide(a)
    if quotient is not None:
        smaller = b if len(b) <= len(a) else a
        return (monomial * smaller).normalize()

    symbol = _main_symbol(a, b)
    if symbol is None:
        return monomial
    content_a, f = _primitive(a.as_univariate(symbol))
    content_b, g = _primitive(b.as_univariate(symbol))
    content = poly_gcd(content_a, content_b)
    if len(f) < len(g):
        f, g = g, f
    while not _is_zero(g):
        r = pseudo_remainder(f, g)
        f, g = g, (r if _is_zero(r) else _primitive(r)[1])
    if len(f) > 1:
        common = MultiPoly.from_univariate(f, symbol, table)
    else:
        common = one
    return (monomial * content * common).normalize()


def cofactors(a: MultiPoly, b: MultiPoly) -> Tuple[MultiPoly, MultiPoly, MultiPoly]:
    """
    (g, a/g, b/g)，g = poly_gcd(a, b)

    两者都为零时 g 取 1。
    """
    g = poly_gcd(a, b)
    if g.is_zero():
        g = MultiPoly.constant(a.table, 1)
    return g, a.exact_divide(g), b.exact_divide(g)


__all__ = ["poly_gcd", "cofactors", "pseudo_remainder"]
