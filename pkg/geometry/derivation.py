#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
导子模块

导子由逐符号的改写规则给出，按线性与 Leibniz 法则延拓到整个多项式环：
D(p) = Σ_x ∂p/∂x · D(x)。
"""

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Dict, Iterable, Mapping, Optional, Tuple, Union

from algebra.polynomial import MultiPoly, SymbolRef
from algebra.rational import RationalExpr
from algebra.symbols import Symbol, SymbolTable
from infrastructure.exceptions import MissingRule
from infrastructure.logger import LogManager

logger = LogManager.get_logger("bicons.geometry")


class RuleKind(Enum):
    """规则类别"""
    POLY = "poly"
    RATIONAL = "rational"
    ZERO = "zero"
    FRESH = "fresh"


@dataclass(frozen=True)
class Rule:
    """
    单个符号的导数规则

    FRESH 规则的 target 为空时，在首次使用时按 "<导子>_<符号>" 惰性创建别名。
    """
    kind: RuleKind
    poly: Optional[MultiPoly] = None
    rational: Optional[RationalExpr] = None
    target: Optional[Symbol] = None

    @classmethod
    def of(cls, value: Union[MultiPoly, RationalExpr]) -> 'Rule':
        if isinstance(value, RationalExpr):
            if value.is_polynomial():
                return cls(RuleKind.POLY, poly=value.numerator)
            return cls(RuleKind.RATIONAL, rational=value)
        if value.is_zero():
            return cls.zero()
        return cls(RuleKind.POLY, poly=value)

    @classmethod
    def zero(cls) -> 'Rule':
        return cls(RuleKind.ZERO)

    @classmethod
    def fresh(cls, target: Optional[Symbol] = None) -> 'Rule':
        return cls(RuleKind.FRESH, target=target)

    def describe(self) -> str:
        if self.kind is RuleKind.ZERO:
            return "0"
        if self.kind is RuleKind.POLY:
            return str(self.poly)
        if self.kind is RuleKind.RATIONAL:
            return str(self.rational)
        return f"<{self.target.name if self.target else '新符号'}>"


RuleSpec = Union[Rule, MultiPoly, RationalExpr]


class Derivation:
    """
    具名导子

    构造后不可变；with_rules 返回新实例。alias_prefix 决定惰性别名的前缀，
    缺省为导子名，使 "eu_opaque" 之类的变体仍产生 eu_* 符号。
    """

    def __init__(self, name: str, table: SymbolTable, rules: Mapping[SymbolRef, RuleSpec],
                 alias_prefix: Optional[str] = None):
        self.name = name
        self.table = table
        self.alias_prefix = alias_prefix or name
        self._rules: Dict[int, Rule] = {}
        for key, spec in rules.items():
            symbol = table.register(key) if isinstance(key, str) else key
            self._rules[symbol.id] = spec if isinstance(spec, Rule) else Rule.of(spec)

    # ============ 规则查询 ============

    def rule_for(self, symbol: SymbolRef) -> Rule:
        """
        Raises:
            MissingRule: 没有该符号的规则
        """
        sym = self.table[symbol] if isinstance(symbol, str) else symbol
        rule = self._rules.get(sym.id)
        if rule is None:
            raise MissingRule(f"导子 {self.name} 缺少规则", sym.name, symbol=sym.name)
        return rule

    def covers(self, symbol: SymbolRef) -> bool:
        sym = self.table.get(symbol) if isinstance(symbol, str) else symbol
        return sym is not None and sym.id in self._rules

    def rules(self) -> Tuple[Tuple[str, str], ...]:
        """(符号名, 规则文本) 列表，按符号编号排序"""
        return tuple((self.table.name_of(i), self._rules[i].describe()) for i in sorted(self._rules))

    def image(self, symbol: SymbolRef) -> Union[MultiPoly, RationalExpr]:
        """单个符号的导数"""
        sym = self.table[symbol] if isinstance(symbol, str) else symbol
        rule = self.rule_for(sym)
        if rule.kind is RuleKind.ZERO:
            return MultiPoly.zero(self.table)
        if rule.kind is RuleKind.POLY:
            return rule.poly
        if rule.kind is RuleKind.RATIONAL:
            return rule.rational
        target = rule.target or self.table.alias(self.alias_prefix, sym)
        return MultiPoly.variable(self.table, target)

    # ============ 作用 ============

    def apply(self, poly: MultiPoly) -> RationalExpr:
        """
        D(p) = Σ ∂p/∂x · D(x)

        Raises:
            MissingRule: p 中某个符号没有规则
        """
        polynomial_part = MultiPoly.zero(self.table)
        rational_part: Optional[RationalExpr] = None
        for symbol in poly.symbols():
            value = self.image(symbol)
            if isinstance(value, MultiPoly):
                if not value.is_zero():
                    polynomial_part = polynomial_part + poly.partial_derivative(symbol) * value
            else:
                term = value * poly.partial_derivative(symbol)
                rational_part = term if rational_part is None else rational_part + term
        if rational_part is None:
            return RationalExpr(polynomial_part)
        return rational_part + polynomial_part

    def apply_poly(self, poly: MultiPoly) -> MultiPoly:
        """
        Raises:
            NotPolynomial: 结果带分母
        """
        return self.apply(poly).to_poly()

    def apply_rational(self, expr: RationalExpr) -> RationalExpr:
        """商法则 D(N/Q) = (D(N)·Q − N·D(Q)) / Q²"""
        if expr.is_polynomial():
            return self.apply(expr.numerator)
        denominator = expr.denominator
        numerator_derivative = self.apply(expr.numerator)
        denominator_derivative = self.apply(denominator)
        top = numerator_derivative * denominator - denominator_derivative * expr.numerator
        return top / (denominator * denominator)

    def with_rules(self, overrides: Mapping[SymbolRef, RuleSpec], name: Optional[str] = None) -> 'Derivation':
        """复制并覆盖部分规则"""
        merged: Dict[SymbolRef, RuleSpec] = {self.table.by_id(i): rule for i, rule in self._rules.items()}
        for key, spec in overrides.items():
            symbol = self.table.register(key) if isinstance(key, str) else key
            merged[symbol] = spec
        return Derivation(name or self.name, self.table, merged, self.alias_prefix)

    def __repr__(self) -> str:
        return f"<Derivation {self.name} rules={len(self._rules)}>"


def check_leibniz(derivation: Union[Derivation, Callable[[MultiPoly], RationalExpr]],
                  a: MultiPoly, b: MultiPoly) -> bool:
    """
    D(ab) = D(a)·b + a·D(b)

    也接受任意一元映射，便于检验被篡改的规则。
    """
    apply = derivation.apply if isinstance(derivation, Derivation) else derivation
    left = apply(a * b)
    right = apply(a) * b + apply(b) * a
    return left == right


def constant_rules(table: SymbolTable, names: Iterable[str]) -> Dict[Symbol, Rule]:
    """若干常数参数的零规则"""
    return {table.register(name): Rule.zero() for name in names}
