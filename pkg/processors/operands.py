#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
步骤操作数

操作数可以是：
- str：先前步骤的输出名
- FixtureRef：基准编号（按场景特化）
- ExprRef：内联的多项式文本（按场景特化）
- MultiPoly / 整数 / Fraction：直接给出的值
- 可调用对象：context -> 值
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from algebra.polynomial import MultiPoly
from algebra.rational import RationalExpr, substitute_rational
from algebra.symbols import SymbolTable
from algebra.text_format import parse_poly
from core.base import BaseStep
from core.context import ReplayContext, Value
from infrastructure.exceptions import ReplayToolError


@dataclass(frozen=True)
class FixtureRef:
    """对基准的引用"""
    fixture_id: str

    def __str__(self) -> str:
        return f"fixture:{self.fixture_id}"


@dataclass(frozen=True)
class ExprRef:
    """内联表达式"""
    text: str

    def __str__(self) -> str:
        return self.text


Operand = Union[str, FixtureRef, ExprRef, MultiPoly, RationalExpr, int, Fraction, Callable[[ReplayContext], Any]]


def expr(text: str) -> ExprRef:
    return ExprRef(text)


def fixture(fixture_id: str) -> FixtureRef:
    return FixtureRef(fixture_id)


def references(operands: Iterable[Any]) -> Tuple[str, ...]:
    """操作数中引用的中间结果名（保持顺序、去重）"""
    names: List[str] = []
    for operand in operands:
        if isinstance(operand, str) and operand not in names:
            names.append(operand)
    return tuple(names)


def resolve(context: ReplayContext, operand: Operand) -> Value:
    """
    求出操作数的值

    Raises:
        ReplayToolError: 操作数类型不受支持或名称未定义
    """
    if isinstance(operand, str):
        return context.get(operand)
    if isinstance(operand, FixtureRef):
        return context.fixture(operand.fixture_id)
    if isinstance(operand, ExprRef):
        poly = parse_poly(operand.text, context.table)
        return context.profile.specialize(poly) if context.profile is not None else poly
    if isinstance(operand, (MultiPoly, RationalExpr)):
        return operand
    if isinstance(operand, (int, Fraction)):
        return MultiPoly.constant(context.table, operand)
    if callable(operand):
        return resolve(context, operand(context))
    raise ReplayToolError("不支持的操作数", repr(operand))


def resolve_poly(context: ReplayContext, operand: Operand) -> MultiPoly:
    """
    Raises:
        ReplayToolError: 值带有非平凡分母
    """
    value = resolve(context, operand)
    if isinstance(value, RationalExpr):
        if not value.is_polynomial():
            raise ReplayToolError("操作数带分母", str(operand))
        return value.numerator
    return value


def describe(operand: Operand) -> str:
    if isinstance(operand, MultiPoly):
        return str(operand) if len(operand) <= 4 else f"<{len(operand)} 项>"
    if callable(operand) and not isinstance(operand, (FixtureRef, ExprRef)):
        return getattr(operand, "__name__", "<callable>")
    return str(operand)


class OperandStep(BaseStep):
    """从操作数推导 inputs 的步骤基类"""

    def __init__(self, target: Optional[str], operands: Sequence[Any], label: Optional[str] = None,
                 event_bus=None):
        super().__init__(target=target, inputs=references(operands), label=label, event_bus=event_bus)

    def value(self, context: ReplayContext, operand: Operand) -> Value:
        return resolve(context, operand)

    def poly(self, context: ReplayContext, operand: Operand) -> MultiPoly:
        return resolve_poly(context, operand)


MappingSpec = Union[Mapping[str, Operand], Callable[[SymbolTable], Mapping[str, MultiPoly]]]


def mapping_operands(spec: MappingSpec) -> List[Any]:
    """映射中引用的操作数（工厂形式没有）"""
    return list(spec.values()) if isinstance(spec, Mapping) else []


def resolve_mapping(context: ReplayContext, spec: MappingSpec) -> Dict[str, Value]:
    """
    求出代换映射

    spec 为 {符号名: 操作数}，或 table -> 映射 的工厂（如 Codazzi 改写集，按场景特化）。
    """
    if isinstance(spec, Mapping):
        return {name: resolve(context, op) for name, op in spec.items()}
    values = spec(context.table)
    if context.profile is None:
        return dict(values)
    return {name: context.profile.specialize(v) for name, v in values.items()}


def apply_mapping(value: Value, mapping: Mapping[str, Value]) -> Value:
    """
    同时代换；代入值带分母时返回有理式

    Raises:
        ReplayToolError: 对有理式做有理代换
    """
    if any(isinstance(v, RationalExpr) and not v.is_polynomial() for v in mapping.values()):
        if isinstance(value, RationalExpr):
            if not value.is_polynomial():
                raise ReplayToolError("有理式不支持有理代换", ", ".join(mapping))
            value = value.numerator
        return substitute_rational(value, mapping)
    plain = {k: (v.numerator if isinstance(v, RationalExpr) else v) for k, v in mapping.items()}
    return value.substitute(plain)
