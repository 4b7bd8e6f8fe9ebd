#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
有理式模块

分母以规范化多项式因子的多重集保存（因子 -> 指数），有理容量并入分子。
约分先对各因子试除；试除不尽且因子可能可约时，再用 gcd 把因子拆开。
"""

from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, Mapping, Tuple, Union

from infrastructure.exceptions import NotPolynomial
from .gcd import poly_gcd
from .polynomial import Coefficient, MultiPoly, SymbolRef

FactorMap = Dict[MultiPoly, int]


def _evidently_irreducible(factor: MultiPoly) -> bool:
    """关于某个变量为一次且对该变量本原，则在 ℚ 上不可约"""
    for symbol_id in factor.symbol_ids():
        symbol = factor.table.by_id(symbol_id)
        if factor.degree(symbol) != 1:
            continue
        constant_part, linear_part = factor.as_univariate(symbol)
        if poly_gcd(constant_part, linear_part).is_constant():
            return True
    return False


class RationalExpr:
    """
    numerator / Π factor^exponent

    不变量：因子为非常数的规范化多项式，分子与分母的 gcd 为常数。
    divisors 记录运算中出现过的全部非常数除式，约分后消失的也保留，
    清分母时据此给出附加条件。
    """

    __slots__ = ("numerator", "_factors", "_divisors")

    def __init__(self, numerator: MultiPoly, factors: Mapping[MultiPoly, int] = None,
                 divisors: Iterable[MultiPoly] = ()):
        self.numerator = numerator
        self._factors: FactorMap = dict(factors or {})
        self._divisors: FrozenSet[MultiPoly] = frozenset(divisors) or frozenset(self._factors)

    # ============ 构造 ============

    @classmethod
    def from_poly(cls, poly: MultiPoly) -> 'RationalExpr':
        return cls(poly)

    @classmethod
    def quotient(cls, numerator: MultiPoly, denominator: MultiPoly) -> 'RationalExpr':
        """numerator / denominator，分母作为单个因子"""
        return cls(numerator)._divided_by(denominator, 1)._reduced()

    @property
    def table(self):
        return self.numerator.table

    @property
    def factors(self) -> Tuple[Tuple[MultiPoly, int], ...]:
        """分母因子（按规范文本排序，保证输出确定）"""
        return tuple(sorted(self._factors.items(), key=lambda item: str(item[0])))

    @property
    def divisors(self) -> Tuple[MultiPoly, ...]:
        """出现过的除式（含已约去的），按规范文本排序"""
        return tuple(sorted(self._divisors, key=str))

    @property
    def denominator(self) -> MultiPoly:
        result = MultiPoly.constant(self.table, 1)
        for factor, exponent in self.factors:
            result = result * factor ** exponent
        return result

    def is_polynomial(self) -> bool:
        return not self._factors

    def is_zero(self) -> bool:
        return self.numerator.is_zero()

    def to_poly(self) -> MultiPoly:
        """
        Raises:
            NotPolynomial: 分母非平凡
        """
        if self._factors:
            raise NotPolynomial("结果带有非平凡分母", str(self))
        return self.numerator

    # ============ 内部 ============

    def _divided_by(self, divisor: MultiPoly, exponent: int) -> 'RationalExpr':
        if divisor.is_zero():
            raise ZeroDivisionError("分母为零多项式")
        if divisor.is_constant():
            scale = Fraction(1) / divisor.constant_value() ** exponent
            return RationalExpr(self.numerator.scale(scale), self._factors, self._divisors)
        normal = divisor.normalize()
        unit = Fraction(divisor.leading_coefficient()) / normal.leading_coefficient()
        factors = dict(self._factors)
        factors[normal] = factors.get(normal, 0) + exponent
        return RationalExpr(self.numerator.scale(Fraction(1) / unit ** exponent), factors,
                            self._divisors | {normal})

    def _reduced(self) -> 'RationalExpr':
        if self.numerator.is_zero():
            return RationalExpr(self.numerator, divisors=self._divisors)
        numerator = self.numerator
        pending = list(self._factors.items())
        factors: FactorMap = {}
        while pending:
            factor, exponent = pending.pop()
            while exponent > 0:
                quotient = numerator.try_divide(factor)
                if quotient is None:
                    break
                numerator = quotient
                exponent -= 1
            if not exponent:
                continue
            common = None if _evidently_irreducible(factor) else poly_gcd(numerator, factor)
            if common is None or common.is_constant():
                factors[factor] = factors.get(factor, 0) + exponent
                continue
            # factor = common · rest：约去一个 common，其余拆成两个因子继续约分
            numerator = numerator.exact_divide(common)
            rest = factor.exact_divide(common)
            if not rest.is_constant():
                normal = rest.normalize()
                unit = Fraction(rest.leading_coefficient()) / normal.leading_coefficient()
                numerator = numerator.scale(Fraction(1) / unit ** exponent)
                pending.append((normal, exponent))
            else:
                numerator = numerator.scale(Fraction(1) / rest.constant_value() ** exponent)
            if exponent > 1:
                pending.append((common, exponent - 1))
        return RationalExpr(numerator, factors, self._divisors)

    def _lift(self, other) -> 'RationalExpr':
        if isinstance(other, RationalExpr):
            return other
        if isinstance(other, MultiPoly):
            return RationalExpr(other)
        if isinstance(other, (int, Fraction)):
            return RationalExpr(MultiPoly.constant(self.table, other))
        raise TypeError(f"无法与 {type(other).__name__} 运算")

    # ============ 运算 ============

    def __add__(self, other) -> 'RationalExpr':
        other = self._lift(other)
        common: FactorMap = dict(self._factors)
        for factor, exponent in other._factors.items():
            common[factor] = max(common.get(factor, 0), exponent)

        def lifted(expr: 'RationalExpr') -> MultiPoly:
            numerator = expr.numerator
            for factor, exponent in common.items():
                missing = exponent - expr._factors.get(factor, 0)
                if missing:
                    numerator = numerator * factor ** missing
            return numerator

        return RationalExpr(lifted(self) + lifted(other), common,
                            self._divisors | other._divisors)._reduced()

    __radd__ = __add__

    def __neg__(self) -> 'RationalExpr':
        return RationalExpr(-self.numerator, self._factors, self._divisors)

    def __sub__(self, other) -> 'RationalExpr':
        return self + (-self._lift(other))

    def __rsub__(self, other) -> 'RationalExpr':
        return self._lift(other) + (-self)

    def __mul__(self, other) -> 'RationalExpr':
        other = self._lift(other)
        factors = dict(self._factors)
        for factor, exponent in other._factors.items():
            factors[factor] = factors.get(factor, 0) + exponent
        return RationalExpr(self.numerator * other.numerator, factors,
                            self._divisors | other._divisors)._reduced()

    __rmul__ = __mul__

    def __truediv__(self, other) -> 'RationalExpr':
        if isinstance(other, (int, Fraction)):
            return RationalExpr(self.numerator.scale(Fraction(1) / Fraction(other)), self._factors,
                                self._divisors)
        if isinstance(other, MultiPoly):
            return self._divided_by(other, 1)._reduced()
        other = self._lift(other)
        result = self._divided_by(other.numerator, 1)
        numerator = result.numerator
        for factor, exponent in other._factors.items():
            numerator = numerator * factor ** exponent
        return RationalExpr(numerator, result._factors,
                            result._divisors | other._divisors)._reduced()

    def __pow__(self, exponent: int) -> 'RationalExpr':
        if exponent < 0:
            raise ValueError("指数必须是非负整数")
        factors = {f: e * exponent for f, e in self._factors.items()} if exponent else {}
        return RationalExpr(self.numerator ** exponent, factors, self._divisors)._reduced()

    def __eq__(self, other) -> bool:
        if isinstance(other, (RationalExpr, MultiPoly, int, Fraction)):
            other = self._lift(other)
            return (self.numerator * other.denominator) == (other.numerator * self.denominator)
        return NotImplemented

    __hash__ = None

    def substitute(self, mapping: Mapping[SymbolRef, Union[MultiPoly, Coefficient]]) -> 'RationalExpr':
        """对分子与各因子同时代换"""
        divisors = set()
        for divisor in self._divisors:
            image = divisor.substitute(mapping)
            if not image.is_constant():
                divisors.add(image.normalize())
        result = RationalExpr(self.numerator.substitute(mapping), divisors=divisors)
        for factor, exponent in self._factors.items():
            result = result._divided_by(factor.substitute(mapping), exponent)
        return result._reduced()

    def evaluate(self, assignment) -> Fraction:
        denominator = self.denominator.evaluate(assignment)
        if not denominator:
            raise ZeroDivisionError("分母在该点为零")
        return self.numerator.evaluate(assignment) / denominator

    def __str__(self) -> str:
        if not self._factors:
            return str(self.numerator)
        parts = []
        for factor, exponent in self.factors:
            parts.append(f"({factor})" + (f"^{exponent}" if exponent > 1 else ""))
        return f"({self.numerator}) / ({'*'.join(parts)})"

    def __repr__(self) -> str:
        return f"RationalExpr({self})"


def substitute_rational(poly: MultiPoly,
                        mapping: Mapping[SymbolRef, Union[RationalExpr, MultiPoly, Coefficient]]) -> RationalExpr:
    """
    把有理式代入多项式

    按被代换符号的指数模式分组，每组乘以对应幂后累加。

    Args:
        poly: 多项式
        mapping: 符号 -> 有理式/多项式/常数

    Returns:
        代换结果（已约分）
    """
    replacements = {}
    for key, value in mapping.items():
        symbol = key if not isinstance(key, str) else poly.table[key]
        if isinstance(value, RationalExpr):
            replacements[symbol.id] = value
        elif isinstance(value, MultiPoly):
            replacements[symbol.id] = RationalExpr(value)
        else:
            replacements[symbol.id] = RationalExpr(MultiPoly.constant(poly.table, value))
    ids = sorted(replacements)
    groups: Dict[Tuple[int, ...], MultiPoly] = {}
    for e, c in poly.items():
        pattern = tuple(e[i] if i < len(e) else 0 for i in ids)
        kept = list(e)
        for i in ids:
            if i < len(kept):
                kept[i] = 0
        monomial = MultiPoly({tuple(kept): c}, poly.table)
        groups[pattern] = groups.get(pattern, MultiPoly.zero(poly.table)) + monomial
    result = RationalExpr(MultiPoly.zero(poly.table))
    for pattern, part in groups.items():
        term = RationalExpr(part)
        for symbol_id, power in zip(ids, pattern):
            if power:
                term = term * replacements[symbol_id] ** power
        result = result + term
    return result

