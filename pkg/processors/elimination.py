#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
消元步骤 - 相关行列式、结式、迹消元、线性消元
"""

from typing import Optional

from algebra.elimination import (cancel_factor, dependency_determinant, eliminate_linear,
                                 resultant_step, substitute_linear)
from core.context import ReplayContext
from infrastructure.exceptions import ReplayToolError

from .operands import Operand, OperandStep, describe


class DependencyDet(OperandStep):
    """
    两个关于 x, y 齐次线性的关系的系数行列式

    (x, y) 非零时行列式必须为零；divisor 给出时再约去已知因子。
    """

    kind = "DependencyDet"

    def __init__(self, target: str, first: Operand, second: Operand, x: str, y: str,
                 divisor: Optional[Operand] = None, reason: str = "约去的因子非零", normalize: bool = False,
                 label: Optional[str] = None, event_bus=None):
        operands = [first, second] + ([divisor] if divisor is not None else [])
        super().__init__(target, operands, label, event_bus)
        self.first, self.second = first, second
        self.x, self.y = x, y
        self.divisor = divisor
        self.reason = reason
        self.normalize = normalize

    def process(self, context: ReplayContext) -> str:
        value = dependency_determinant(self.poly(context, self.first), self.poly(context, self.second),
                                       self.x, self.y)
        if self.divisor is not None:
            value, condition = cancel_factor(value, self.poly(context, self.divisor), self.reason)
            self.record_condition(context, condition)
        self.store(context, value.normalize() if self.normalize else value)
        return f"det({describe(self.first)}, {describe(self.second)}; {self.x}, {self.y})"


class Resultant(OperandStep):
    """Res_symbol(f, g)，normalize 为真时除去容量"""

    kind = "Resultant"

    def __init__(self, target: str, f: Operand, g: Operand, symbol: str, normalize: bool = False,
                 label: Optional[str] = None, event_bus=None):
        super().__init__(target, [f, g], label, event_bus)
        self.f, self.g = f, g
        self.symbol = symbol
        self.normalize = normalize

    def process(self, context: ReplayContext) -> str:
        step = resultant_step(self.poly(context, self.f), self.poly(context, self.g), self.symbol)
        for condition in step.side_conditions:
            self.record_condition(context, condition)
        value = step.result.normalize() if self.normalize else step.result
        self.store(context, value)
        return f"Res_{self.symbol}({describe(self.f)}, {describe(self.g)})"


class EliminateTrace(OperandStep):
    """用一次关系（缺省为迹条件）消去 symbol"""

    kind = "EliminateTrace"

    def __init__(self, target: str, source: Operand, symbol: str, relation: Optional[Operand] = None,
                 normalize: bool = False, label: Optional[str] = None, event_bus=None):
        operands = [source] + ([relation] if relation is not None else [])
        super().__init__(target, operands, label, event_bus)
        self.source = source
        self.symbol = symbol
        self.relation = relation
        self.normalize = normalize

    def process(self, context: ReplayContext) -> str:
        if self.relation is not None:
            relation = self.poly(context, self.relation)
        elif context.constraints is not None:
            relation = context.constraints.trace
        else:
            raise ReplayToolError("缺少迹条件", self.name)
        value = substitute_linear(self.poly(context, self.source), self.symbol, relation)
        self.store(context, value.normalize() if self.normalize else value)
        return f"{describe(self.source)} 中消去 {self.symbol}"


class EliminateLinear(OperandStep):
    """消去只以 symbol^degree 出现的 symbol"""

    kind = "EliminateLinear"

    def __init__(self, target: str, first: Operand, second: Operand, symbol: str, degree: int = 1,
                 label: Optional[str] = None, event_bus=None):
        super().__init__(target, [first, second], label, event_bus)
        self.first, self.second = first, second
        self.symbol = symbol
        self.degree = degree

    def process(self, context: ReplayContext) -> str:
        value = eliminate_linear(self.poly(context, self.first), self.poly(context, self.second),
                                 self.symbol, self.degree)
        self.store(context, value)
        power = f"^{self.degree}" if self.degree != 1 else ""
        return f"由 {describe(self.first)}, {describe(self.second)} 消去 {self.symbol}{power}"
