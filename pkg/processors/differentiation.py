#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
求导步骤
"""

from fractions import Fraction
from typing import Optional, Sequence, Union

from algebra.elimination import clear_denominators
from algebra.polynomial import MultiPoly
from algebra.rational import RationalExpr
from core.context import ReplayContext
from infrastructure.exceptions import ReplayToolError

from .operands import (MappingSpec, Operand, OperandStep, apply_mapping, describe, mapping_operands,
                       resolve_mapping)


class Differentiate(OperandStep):
    """
    对前提施加具名导子，随后按顺序应用改写

    rewrites 的每一项是 {符号名: 操作数} 或改写集工厂（如 Codazzi 改写）。
    结果带分母且 clear 为真时清分母并登记分母非零。
    """

    kind = "Differentiate"

    def __init__(self, target: str, source: Operand, derivation: str,
                 rewrites: Sequence[MappingSpec] = (), scale: Optional[Union[int, Fraction]] = None,
                 clear: bool = True, reason: str = "导数分母非零",
                 label: Optional[str] = None, event_bus=None):
        operands = [source]
        for spec in rewrites:
            operands.extend(mapping_operands(spec))
        super().__init__(target, operands, label, event_bus)
        self.source = source
        self.derivation = derivation
        self.rewrites = list(rewrites)
        self.scale = scale
        self.clear = clear
        self.reason = reason

    def process(self, context: ReplayContext) -> str:
        derivation = context.derivations.get(self.derivation)
        if derivation is None:
            raise ReplayToolError("未知的导子", self.derivation)
        source = self.value(context, self.source)
        if isinstance(source, RationalExpr):
            result = derivation.apply_rational(source)
        else:
            result = derivation.apply(source)
        for spec in self.rewrites:
            result = apply_mapping(result, resolve_mapping(context, spec))
        if isinstance(result, MultiPoly):
            result = RationalExpr(result)
        if self.scale is not None:
            result = result * MultiPoly.constant(context.table, Fraction(self.scale))
        if self.clear or result.is_polynomial():
            poly, condition = clear_denominators(result, self.reason)
            self.record_condition(context, condition)
            self.store(context, poly)
        else:
            self.store(context, result)
        return f"{self.derivation}({describe(self.source)})"
