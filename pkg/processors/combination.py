#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
组合与改写步骤 - 线性组合、代换、解出、取系数、约去因子
"""

from fractions import Fraction
from typing import Dict, Optional, Sequence, Tuple, Union

from algebra.elimination import SideCondition, cancel_factor, clear_denominators, solve_linear
from algebra.polynomial import MultiPoly
from algebra.rational import RationalExpr
from algebra.reductions import strip_monomial_content, symmetric_reduce
from core.context import ReplayContext

from .operands import (MappingSpec, Operand, OperandStep, apply_mapping, describe, mapping_operands,
                       resolve_mapping)

Number = Union[int, Fraction]


def _multiplier(step: OperandStep, context: ReplayContext, multiplier) -> MultiPoly:
    if isinstance(multiplier, (int, Fraction)):
        return MultiPoly.constant(context.table, multiplier)
    return step.poly(context, multiplier)


class Combine(OperandStep):
    """
    Σ multiplier·premise，可选整除 divisor、数乘 scale 与规范化

    整除失败时抛出 NotDivisible；非常数除数记为附加条件。
    """

    kind = "Combine"

    def __init__(self, target: str, parts: Sequence[Tuple[object, Operand]], divisor: Optional[Operand] = None,
                 scale: Optional[Number] = None, reason: str = "约去的因子非零", normalize: bool = False,
                 label: Optional[str] = None, event_bus=None):
        operands = [op for pair in parts for op in pair] + ([divisor] if divisor is not None else [])
        super().__init__(target, operands, label, event_bus)
        self.parts = list(parts)
        self.divisor = divisor
        self.scale = scale
        self.reason = reason
        self.normalize = normalize

    def process(self, context: ReplayContext) -> str:
        total = MultiPoly.zero(context.table)
        for multiplier, premise in self.parts:
            total = total + _multiplier(self, context, multiplier) * self.poly(context, premise)
        if self.divisor is not None:
            divisor = self.poly(context, self.divisor)
            total, condition = cancel_factor(total, divisor, self.reason)
            self.record_condition(context, condition)
        if self.scale is not None:
            total = total.scale(Fraction(self.scale))
        self.store(context, total.normalize() if self.normalize else total)
        summary = " + ".join(f"({describe(m)})·{describe(p)}" for m, p in self.parts)
        if self.divisor is not None:
            summary += f" ÷ {describe(self.divisor)}"
        return summary


class Substitute(OperandStep):
    """
    同时代换若干符号

    代入值带分母时先得到有理式，clear 为真则清分母并登记分母非零。
    mapping 也可以是 table -> 映射 的改写集工厂。
    """

    kind = "Substitute"

    def __init__(self, target: str, source: Operand, mapping: MappingSpec, clear: bool = True,
                 reason: str = "分母非零", label: Optional[str] = None, event_bus=None):
        super().__init__(target, [source, *mapping_operands(mapping)], label, event_bus)
        self.source = source
        self.mapping = mapping
        self.clear = clear
        self.reason = reason

    def process(self, context: ReplayContext) -> str:
        values = resolve_mapping(context, self.mapping)
        result = apply_mapping(self.value(context, self.source), values)
        if isinstance(result, RationalExpr) and (self.clear or result.is_polynomial()):
            result, condition = clear_denominators(result, self.reason)
            self.record_condition(context, condition)
        self.store(context, result)
        return f"{describe(self.source)} 中代换 {', '.join(values)}"


class Solve(OperandStep):
    """由关于 symbol 一次的关系解出 symbol（有理式）"""

    kind = "Solve"

    def __init__(self, target: str, source: Operand, symbol: str, label: Optional[str] = None, event_bus=None):
        super().__init__(target, [source], label, event_bus)
        self.source = source
        self.symbol = symbol

    def process(self, context: ReplayContext) -> str:
        solution = solve_linear(self.poly(context, self.source), self.symbol)
        self.record_condition(context, SideCondition.of(solution.denominator, f"{self.symbol} 的系数非零"))
        self.store(context, solution)
        return f"{self.symbol} = {solution}"


class Coefficient(OperandStep):
    """symbol^k 的系数"""

    kind = "Coefficient"

    def __init__(self, target: str, source: Operand, symbol: str, k: int = 1, negate: bool = False,
                 label: Optional[str] = None, event_bus=None):
        super().__init__(target, [source], label, event_bus)
        self.source = source
        self.symbol = symbol
        self.k = k
        self.negate = negate

    def process(self, context: ReplayContext) -> str:
        value = self.poly(context, self.source).coefficient(self.symbol, self.k)
        self.store(context, -value if self.negate else value)
        sign = "−" if self.negate else ""
        return f"{sign}[{self.symbol}^{self.k}] {describe(self.source)}"


class CancelFactor(OperandStep):
    """约去已知因子并登记其非零条件"""

    kind = "CancelFactor"

    def __init__(self, target: str, source: Operand, factor: Operand, reason: str, normalize: bool = False,
                 label: Optional[str] = None, event_bus=None):
        super().__init__(target, [source, factor], label, event_bus)
        self.source = source
        self.factor = factor
        self.reason = reason
        self.normalize = normalize

    def process(self, context: ReplayContext) -> str:
        factor = self.poly(context, self.factor)
        quotient, condition = cancel_factor(self.poly(context, self.source), factor, self.reason)
        self.record_condition(context, condition)
        self.store(context, quotient.normalize() if self.normalize else quotient)
        return f"约去 {factor}（{self.reason}）"


class ClearDenominators(OperandStep):
    """有理式 -> 分子，登记分母非零"""

    kind = "ClearDenominators"

    def __init__(self, target: str, source: Operand, reason: str = "分母非零",
                 label: Optional[str] = None, event_bus=None):
        super().__init__(target, [source], label, event_bus)
        self.source = source
        self.reason = reason

    def process(self, context: ReplayContext) -> str:
        value = self.value(context, self.source)
        if isinstance(value, MultiPoly):
            self.store(context, value)
            return "无分母"
        poly, condition = clear_denominators(value, self.reason)
        self.record_condition(context, condition)
        self.store(context, poly)
        return f"清分母 {value.denominator}"


class StripMonomial(OperandStep):
    """除去公共单项式因子"""

    kind = "StripMonomial"

    def __init__(self, target: str, source: Operand, reason: str = "单项式因子非零",
                 label: Optional[str] = None, event_bus=None):
        super().__init__(target, [source], label, event_bus)
        self.source = source
        self.reason = reason

    def process(self, context: ReplayContext) -> str:
        source = self.poly(context, self.source)
        stripped, exponent = strip_monomial_content(source)
        self.store(context, stripped)
        if not exponent:
            return "无单项式因子"
        monomial = MultiPoly({tuple(exponent): 1}, context.table)
        self.record_condition(context, SideCondition.of(monomial, self.reason))
        return f"除去单项式 {monomial}"


class SymmetricReduce(OperandStep):
    """
    关于 a, b 对称的多项式经初等对称函数改写，再代入给定的和与积

    Raises:
        NotSymmetric: 输入不对称
    """

    kind = "SymmetricReduce"
    SUM_SYMBOL = "sigma1"
    PRODUCT_SYMBOL = "sigma2"

    def __init__(self, target: str, source: Operand, a: str, b: str, total: Operand, product: Operand,
                 label: Optional[str] = None, event_bus=None):
        super().__init__(target, [source, total, product], label, event_bus)
        self.source = source
        self.a, self.b = a, b
        self.total = total
        self.product = product

    def process(self, context: ReplayContext) -> str:
        reduced = symmetric_reduce(self.poly(context, self.source), self.a, self.b,
                                   self.SUM_SYMBOL, self.PRODUCT_SYMBOL)
        result = reduced.substitute({
            self.SUM_SYMBOL: self.poly(context, self.total),
            self.PRODUCT_SYMBOL: self.poly(context, self.product),
        })
        self.store(context, result)
        return f"对称约化 ({self.a}, {self.b})"


class Specialize(OperandStep):
    """把部分符号赋为具体有理数"""

    kind = "Specialize"

    def __init__(self, target: str, source: Operand, assignment: Dict[str, Number],
                 label: Optional[str] = None, event_bus=None):
        super().__init__(target, [source], label, event_bus)
        self.source = source
        self.assignment = dict(assignment)

    def process(self, context: ReplayContext) -> str:
        self.store(context, self.poly(context, self.source).partial_evaluate(self.assignment))
        return ", ".join(f"{k}={v}" for k, v in sorted(self.assignment.items()))

