#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
稀疏多元多项式模块

MultiPoly 以 {指数元组: 系数} 存储，指数元组按符号编号索引并去掉末尾零；
系数为 int（整数时）或 Fraction。值在构造后不可变，可在线程间共享。
单项式序为按符号编号的分次字典序。
"""

import heapq
from contextlib import contextmanager
from contextvars import ContextVar
from fractions import Fraction
from math import gcd
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from infrastructure.exceptions import MissingAssignment, NotDivisible, ResourceGuardError
from .symbols import Symbol, SymbolTable

Coefficient = Union[int, Fraction]
Exponent = Tuple[int, ...]
SymbolRef = Union[Symbol, str]

DEFAULT_MAX_TERMS = 5_000_000

# ============ 项数保护 ============

_guard: ContextVar[Tuple[int, str]] = ContextVar("term_guard", default=(DEFAULT_MAX_TERMS, ""))


@contextmanager
def term_guard(limit: int, step: str = ""):
    """
    在上下文内设置项数上限及当前步骤名

    Args:
        limit: 单个中间多项式允许的最大项数
        step: 步骤名称，出现在超限错误中
    """
    token = _guard.set((limit, step))
    try:
        yield
    finally:
        _guard.reset(token)


def check_term_count(count: int) -> None:
    """超过当前上限时抛出 ResourceGuardError"""
    limit, step = _guard.get()
    if count > limit:
        raise ResourceGuardError(
            "中间多项式项数超过上限",
            f"步骤 {step or '<未命名>'}: {count} > {limit}",
            step=step,
        )


# ============ 指数与系数辅助 ============

def _coerce(value: Coefficient) -> Coefficient:
    if isinstance(value, Fraction) and value.denominator == 1:
        return value.numerator
    return value


def _trim(e: Sequence[int]) -> Exponent:
    end = len(e)
    while end and e[end - 1] == 0:
        end -= 1
    return tuple(e[:end])


def _add_exp(a: Exponent, b: Exponent) -> Exponent:
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return a
    return tuple([x + y for x, y in zip(a, b)]) + a[len(b):]


def _sub_exp(a: Exponent, b: Exponent) -> Optional[Exponent]:
    """a - b；b 不整除 a 时返回 None"""
    if len(b) > len(a):
        return None
    out = list(a)
    for i, y in enumerate(b):
        d = out[i] - y
        if d < 0:
            return None
        out[i] = d
    return _trim(out)


def _divide_coefficient(c: Coefficient, d: Coefficient) -> Coefficient:
    if isinstance(c, int) and isinstance(d, int) and c % d == 0:
        return c // d
    return _coerce(Fraction(c) / d)


def grlex_key(e: Exponent) -> Tuple[int, Exponent]:
    """分次字典序键：先比总次数，再按编号从小到大比较指数"""
    return (sum(e), e)


def _heap_key(e: Exponent) -> Tuple[int, Tuple[int, ...]]:
    return (-sum(e), tuple(-x for x in e))


def _from_accumulator(acc: Dict[Exponent, Coefficient]) -> Dict[Exponent, Coefficient]:
    return {e: _coerce(c) for e, c in acc.items() if c}


class MultiPoly:
    """
    有理系数稀疏多元多项式

    所有运算返回新对象；同一运算的操作数必须共享同一个 SymbolTable。
    """

    __slots__ = ("_terms", "table", "_hash")

    def __init__(self, terms: Mapping[Exponent, Coefficient], table: SymbolTable,
                 _trusted: bool = False):
        if _trusted:
            self._terms = terms
        else:
            clean: Dict[Exponent, Coefficient] = {}
            for e, c in terms.items():
                if isinstance(c, float):
                    raise TypeError("系数必须是精确有理数")
                if c:
                    key = _trim(e)
                    value = clean.get(key, 0) + c
                    if value:
                        clean[key] = _coerce(value)
                    else:
                        clean.pop(key, None)
            self._terms = clean
        self.table = table
        self._hash = None
        check_term_count(len(self._terms))

    # ============ 构造 ============

    @classmethod
    def zero(cls, table: SymbolTable) -> 'MultiPoly':
        return cls({}, table, _trusted=True)

    @classmethod
    def constant(cls, table: SymbolTable, value: Coefficient) -> 'MultiPoly':
        value = _coerce(Fraction(value)) if not isinstance(value, int) else value
        return cls({(): value} if value else {}, table, _trusted=True)

    @classmethod
    def variable(cls, table: SymbolTable, symbol: SymbolRef, power: int = 1) -> 'MultiPoly':
        sym = table.register(symbol) if isinstance(symbol, str) else symbol
        if power == 0:
            return cls.constant(table, 1)
        e = [0] * (sym.id + 1)
        e[sym.id] = power
        return cls({tuple(e): 1}, table, _trusted=True)

    @classmethod
    def from_univariate(cls, coefficients: Sequence['MultiPoly'], symbol: SymbolRef,
                        table: Optional[SymbolTable] = None) -> 'MultiPoly':
        """由系数列表 c0..cd 重建 Σ c_k x^k"""
        if table is None:
            table = coefficients[0].table
        x = cls.variable(table, symbol)
        result = cls.zero(table)
        power = cls.constant(table, 1)
        for k, coefficient in enumerate(coefficients):
            if k:
                power = power * x
            result = result + coefficient * power
        return result

    def _new(self, terms: Dict[Exponent, Coefficient]) -> 'MultiPoly':
        return MultiPoly(terms, self.table, _trusted=True)

    def _lift(self, other) -> Optional['MultiPoly']:
        if isinstance(other, MultiPoly):
            if other.table is not self.table:
                raise ValueError("多项式运算要求共享同一个符号表")
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.constant(self.table, other)
        return None

    def _symbol(self, symbol: SymbolRef) -> Symbol:
        if isinstance(symbol, Symbol):
            return symbol
        return self.table[symbol]

    # ============ 环运算 ============

    def __add__(self, other) -> 'MultiPoly':
        other = self._lift(other)
        if other is None:
            return NotImplemented
        big, small = (self._terms, other._terms)
        if len(big) < len(small):
            big, small = small, big
        acc = dict(big)
        for e, c in small.items():
            value = acc.get(e, 0) + c
            if value:
                acc[e] = _coerce(value)
            else:
                del acc[e]
        return MultiPoly(acc, self.table, _trusted=True)

    __radd__ = __add__

    def __neg__(self) -> 'MultiPoly':
        return self._new({e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> 'MultiPoly':
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> 'MultiPoly':
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, factor: Coefficient) -> 'MultiPoly':
        """乘以有理常数"""
        if not factor:
            return MultiPoly.zero(self.table)
        if factor == 1:
            return self
        return self._new({e: _coerce(c * factor) for e, c in self._terms.items()})

    def __mul__(self, other) -> 'MultiPoly':
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._lift(other)
        if other is None:
            return NotImplemented
        a, b = self._terms, other._terms
        if not a or not b:
            return MultiPoly.zero(self.table)
        if len(a) < len(b):
            a, b = b, a
        limit, _ = _guard.get()
        acc: Dict[Exponent, Coefficient] = {}
        get = acc.get
        b_items = list(b.items())
        for i, (ea, ca) in enumerate(a.items()):
            for eb, cb in b_items:
                e = _add_exp(ea, eb)
                acc[e] = get(e, 0) + ca * cb
            if i & 63 == 63 and len(acc) > limit:
                check_term_count(len(acc))
        return MultiPoly(_from_accumulator(acc), self.table, _trusted=True)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> 'MultiPoly':
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("指数必须是非负整数")
        result = MultiPoly.constant(self.table, 1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __truediv__(self, other) -> 'MultiPoly':
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("除以零")
            return self.scale(Fraction(1) / Fraction(other))
        if isinstance(other, MultiPoly):
            return self.exact_divide(other)
        return NotImplemented

    # ============ 比较 ============

    def __eq__(self, other) -> bool:
        if isinstance(other, MultiPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            if not other:
                return not self._terms
            return self._terms == {(): other}
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    # ============ 查询 ============

    @property
    def terms(self) -> Mapping[Exponent, Coefficient]:
        return self._terms

    def items(self) -> Iterable[Tuple[Exponent, Coefficient]]:
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and () in self._terms)

    def constant_value(self) -> Fraction:
        """常数多项式的值"""
        if not self.is_constant():
            raise ValueError(f"不是常数: {self}")
        return Fraction(self._terms.get((), 0))

    def constant_term(self) -> Fraction:
        return Fraction(self._terms.get((), 0))

    def total_degree(self) -> int:
        """总次数；零多项式为 -1"""
        return max((sum(e) for e in self._terms), default=-1)

    def degree(self, symbol: SymbolRef) -> int:
        """关于 symbol 的次数；零多项式为 -1"""
        if not self._terms:
            return -1
        i = self._symbol(symbol).id
        return max((e[i] if i < len(e) else 0) for e in self._terms)

    def symbol_ids(self) -> List[int]:
        ids = set()
        for e in self._terms:
            ids.update(i for i, x in enumerate(e) if x)
        return sorted(ids)

    def symbols(self) -> List[Symbol]:
        """出现的符号（按编号排序）"""
        return [self.table.by_id(i) for i in self.symbol_ids()]

    def symbol_names(self) -> List[str]:
        return [s.name for s in self.symbols()]

    def contains(self, symbol: SymbolRef) -> bool:
        i = self._symbol(symbol).id
        return any(i < len(e) and e[i] for e in self._terms)

    def sorted_terms(self) -> List[Tuple[Exponent, Coefficient]]:
        """按分次字典序降序排列的项"""
        return sorted(self._terms.items(), key=lambda item: grlex_key(item[0]), reverse=True)

    def leading_term(self) -> Tuple[Exponent, Coefficient]:
        if not self._terms:
            raise ValueError("零多项式没有首项")
        e = max(self._terms, key=grlex_key)
        return e, self._terms[e]

    def leading_coefficient(self) -> Fraction:
        return Fraction(self.leading_term()[1])

    # ============ 结构操作 ============

    def coefficient(self, symbol: SymbolRef, k: int) -> 'MultiPoly':
        """x^k 的系数（不含 x 的多项式）"""
        i = self._symbol(symbol).id
        out: Dict[Exponent, Coefficient] = {}
        for e, c in self._terms.items():
            power = e[i] if i < len(e) else 0
            if power == k:
                if i < len(e):
                    stripped = list(e)
                    stripped[i] = 0
                    out[_trim(stripped)] = c
                else:
                    out[e] = c
        return self._new(out)

    def as_univariate(self, symbol: SymbolRef) -> List['MultiPoly']:
        """
        视为关于 symbol 的一元多项式

        Returns:
            系数列表 c0..cd；零多项式返回 [0]
        """
        i = self._symbol(symbol).id
        buckets: Dict[int, Dict[Exponent, Coefficient]] = {}
        for e, c in self._terms.items():
            power = e[i] if i < len(e) else 0
            if power:
                stripped = list(e)
                stripped[i] = 0
                key = _trim(stripped)
            else:
                key = e
            buckets.setdefault(power, {})[key] = c
        degree = max(buckets, default=0)
        return [self._new(buckets.get(k, {})) for k in range(degree + 1)]

    def partial_derivative(self, symbol: SymbolRef) -> 'MultiPoly':
        i = self._symbol(symbol).id
        out: Dict[Exponent, Coefficient] = {}
        for e, c in self._terms.items():
            power = e[i] if i < len(e) else 0
            if power:
                lowered = list(e)
                lowered[i] = power - 1
                out[_trim(lowered)] = c * power
        return self._new(out)

    def substitute(self, mapping: Mapping[SymbolRef, Union['MultiPoly', Coefficient]]) -> 'MultiPoly':
        """
        同时代换

        Args:
            mapping: 符号 -> 多项式或常数

        Returns:
            代换后的多项式
        """
        if not mapping:
            return self
        replacements: Dict[int, MultiPoly] = {}
        for key, value in mapping.items():
            sym = self._symbol(key)
            lifted = self._lift(value)
            if lifted is None:
                raise TypeError(f"无法代换为 {type(value).__name__}")
            replacements[sym.id] = lifted
        ids = sorted(replacements)
        groups: Dict[Tuple[int, ...], Dict[Exponent, Coefficient]] = {}
        for e, c in self._terms.items():
            pattern = tuple(e[i] if i < len(e) else 0 for i in ids)
            if any(pattern):
                kept = list(e)
                for i in ids:
                    if i < len(kept):
                        kept[i] = 0
                key = _trim(kept)
            else:
                key = e
            groups.setdefault(pattern, {})[key] = c
        powers: Dict[Tuple[int, int], MultiPoly] = {}

        def power_of(symbol_id: int, k: int) -> MultiPoly:
            cached = powers.get((symbol_id, k))
            if cached is None:
                cached = replacements[symbol_id] ** k
                powers[(symbol_id, k)] = cached
            return cached

        result = MultiPoly.zero(self.table)
        for pattern, kept_terms in groups.items():
            part = self._new(kept_terms)
            for symbol_id, k in zip(ids, pattern):
                if k:
                    part = part * power_of(symbol_id, k)
            result = result + part
        return result

    def _resolve_assignment(self, assignment: Mapping[SymbolRef, Coefficient]) -> Dict[int, Fraction]:
        values: Dict[int, Fraction] = {}
        for key, value in assignment.items():
            if isinstance(key, Symbol):
                values[key.id] = Fraction(value)
            else:
                sym = self.table.get(key)
                if sym is not None:
                    values[sym.id] = Fraction(value)
        return values

    def partial_evaluate(self, assignment: Mapping[SymbolRef, Coefficient]) -> 'MultiPoly':
        """把部分符号赋为有理数，其余保持符号"""
        values = self._resolve_assignment(assignment)
        if not values:
            return self
        acc: Dict[Exponent, Coefficient] = {}
        for e, c in self._terms.items():
            coefficient = c
            kept = list(e)
            touched = False
            for i, power in enumerate(e):
                if power and i in values:
                    coefficient = coefficient * values[i] ** power
                    kept[i] = 0
                    touched = True
            key = _trim(kept) if touched else e
            acc[key] = acc.get(key, 0) + coefficient
        return self._new(_from_accumulator(acc))

    def evaluate(self, assignment: Mapping[SymbolRef, Coefficient]) -> Fraction:
        """
        精确求值

        Raises:
            MissingAssignment: 某个出现的符号没有赋值
        """
        values = self._resolve_assignment(assignment)
        total = Fraction(0)
        for e, c in self._terms.items():
            term = Fraction(c)
            for i, power in enumerate(e):
                if power:
                    if i not in values:
                        raise MissingAssignment("缺少变量赋值", self.table.name_of(i))
                    term *= values[i] ** power
            total += term
        return total

    def map_coefficients(self, fn) -> 'MultiPoly':
        return MultiPoly({e: fn(c) for e, c in self._terms.items()}, self.table)

    # ============ 容量与规范化 ============

    def content(self) -> Fraction:
        """正的有理容量：分子的 gcd / 分母的 lcm；零多项式为 0"""
        g, l = 0, 1
        for c in self._terms.values():
            f = Fraction(c)
            g = gcd(g, f.numerator)
            l = l * f.denominator // gcd(l, f.denominator)
        return Fraction(g, l) if g else Fraction(0)

    def normalize(self) -> 'MultiPoly':
        """本原部分，首项系数为正；幂等且对非零常数倍不变"""
        if not self._terms:
            return self
        content = self.content()
        _, lead = self.leading_term()
        if lead < 0:
            content = -content
        if content == 1:
            return self
        return self.scale(Fraction(1) / content)

    def monomial_content(self) -> Exponent:
        """所有项指数的逐分量最小值"""
        if not self._terms:
            return ()
        iterator = iter(self._terms)
        low = list(next(iterator))
        for e in iterator:
            if len(e) < len(low):
                del low[len(e):]
            for i in range(len(low)):
                if e[i] < low[i]:
                    low[i] = e[i]
        return _trim(low)

    def shift_down(self, exponent: Exponent) -> 'MultiPoly':
        """除以单项式 x^exponent（须整除每一项）"""
        out = {}
        for e, c in self._terms.items():
            reduced = _sub_exp(e, exponent)
            if reduced is None:
                raise NotDivisible("单项式不整除", str(self))
            out[reduced] = c
        return self._new(out)

    # ============ 精确除法 ============

    def exact_divide(self, divisor: 'MultiPoly') -> 'MultiPoly':
        """
        精确除法 self / divisor

        Raises:
            ZeroDivisionError: 除数为零
            NotDivisible: 余数非零
        """
        divisor = self._lift(divisor)
        if divisor is None or divisor.is_zero():
            raise ZeroDivisionError("除数为零多项式")
        if not self._terms:
            return self
        if divisor.is_constant():
            return self.scale(Fraction(1) / divisor.constant_value())
        if not set(divisor.symbol_ids()) <= set(self.symbol_ids()):
            raise NotDivisible("余数非零", f"({self}) / ({divisor})")
        lead_e, lead_c = divisor.leading_term()
        if len(divisor) == 1:
            out = {}
            for e, c in self._terms.items():
                reduced = _sub_exp(e, lead_e)
                if reduced is None:
                    raise NotDivisible("余数非零", f"({self}) / ({divisor})")
                out[reduced] = _divide_coefficient(c, lead_c)
            return self._new(out)

        remainder: Dict[Exponent, Coefficient] = dict(self._terms)
        heap = [(_heap_key(e), e) for e in remainder]
        heapq.heapify(heap)
        divisor_items = [(e, c) for e, c in divisor.items() if e != lead_e]
        quotient: Dict[Exponent, Coefficient] = {}
        while heap:
            _, e = heapq.heappop(heap)
            c = remainder.pop(e, None)
            if c is None:
                continue
            shift = _sub_exp(e, lead_e)
            if shift is None:
                raise NotDivisible("余数非零", f"({self}) / ({divisor})")
            q = _divide_coefficient(c, lead_c)
            quotient[shift] = q
            for de, dc in divisor_items:
                target = _add_exp(shift, de)
                value = remainder.get(target, 0) - q * dc
                if value:
                    if target not in remainder:
                        heapq.heappush(heap, (_heap_key(target), target))
                    remainder[target] = _coerce(value)
                else:
                    remainder.pop(target, None)
            if len(quotient) & 1023 == 0:
                check_term_count(len(remainder))
        return self._new(quotient)

    def try_divide(self, divisor: 'MultiPoly') -> Optional['MultiPoly']:
        """可整除时返回商，否则返回 None"""
        try:
            return self.exact_divide(divisor)
        except NotDivisible:
            return None

    # ============ 文本 ============

    def __str__(self) -> str:
        from .text_format import format_poly
        return format_poly(self)

    def __repr__(self) -> str:
        return f"MultiPoly({self})"

    def __iter__(self) -> Iterator[Tuple[Exponent, Coefficient]]:
        return iter(self._terms.items())
