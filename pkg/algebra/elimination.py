#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
消元模块

Sylvester 矩阵的行排布：先是 n 行 f 的系数（从最高次开始逐行右移），
再是 m 行 g 的系数；resultant 为其行列式。
"""

from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from infrastructure.exceptions import BothConstant, NotDivisible, NotLinear
from infrastructure.logger import LogManager
from .gcd import cofactors
from .polynomial import MultiPoly, SymbolRef, check_term_count
from .rational import RationalExpr
from .symbols import Symbol

logger = LogManager.get_logger("bicons.algebra")

Matrix = Sequence[Sequence[MultiPoly]]


@dataclass(frozen=True)
class SideCondition:
    """非零假设：expr ≠ 0"""
    expr: MultiPoly
    reason: str

    def __post_init__(self):
        if self.expr.is_zero():
            raise ValueError(f"附加条件不能是零多项式: {self.reason}")

    @classmethod
    def of(cls, expr: MultiPoly, reason: str) -> Optional['SideCondition']:
        """常数表达式无需记录，返回 None"""
        if expr.is_constant():
            return None
        return cls(expr.normalize(), reason)

    def to_dict(self) -> dict:
        return {"expr": str(self.expr), "reason": self.reason}

    def __str__(self) -> str:
        return f"{self.expr} ≠ 0  [{self.reason}]"


@dataclass
class SylvesterMatrix:
    """Sylvester 矩阵及其附加条件"""
    entries: List[List[MultiPoly]]
    m: int
    n: int
    eliminated: Symbol
    side_conditions: List[SideCondition] = field(default_factory=list)

    @property
    def dimension(self) -> int:
        return self.m + self.n


@dataclass
class EliminationStep:
    """一次已记录的消元计算"""
    kind: str
    eliminated: Tuple[str, ...]
    result: MultiPoly
    side_conditions: List[SideCondition] = field(default_factory=list)


def _resolve(poly: MultiPoly, symbol: SymbolRef) -> Symbol:
    return symbol if isinstance(symbol, Symbol) else poly.table[symbol]


# ============ Sylvester 矩阵与结式 ============

def sylvester_matrix(f: MultiPoly, g: MultiPoly, x: SymbolRef) -> SylvesterMatrix:
    """
    构造 Sylvester 矩阵

    Args:
        f: 第一个多项式（次数 m）
        g: 第二个多项式（次数 n）
        x: 消元变量

    Returns:
        (m+n)×(m+n) 矩阵，符号首项系数记为附加条件

    Raises:
        BothConstant: m = n = 0
    """
    symbol = _resolve(f, x)
    a = list(reversed(f.as_univariate(symbol)))
    b = list(reversed(g.as_univariate(symbol)))
    m, n = len(a) - 1, len(b) - 1
    if f.is_zero():
        m = 0
    if g.is_zero():
        n = 0
    if m == 0 and n == 0:
        raise BothConstant("两个多项式关于消元变量都是常数", symbol.name)
    zero = MultiPoly.zero(f.table)
    size = m + n
    rows: List[List[MultiPoly]] = []
    for i in range(n):
        rows.append([a[j - i] if 0 <= j - i <= m else zero for j in range(size)])
    for i in range(m):
        rows.append([b[j - i] if 0 <= j - i <= n else zero for j in range(size)])
    conditions = []
    for lead, tag in ((a[0], "f"), (b[0], "g")):
        condition = SideCondition.of(lead, f"{tag} 关于 {symbol.name} 的首项系数（与另一首项系数不同时为零）")
        if condition is not None:
            conditions.append(condition)
    return SylvesterMatrix(rows, m, n, symbol, conditions)


def cofactor_determinant(matrix: Matrix) -> MultiPoly:
    """按第一行展开的行列式（小矩阵的直接算法）"""
    size = len(matrix)
    if size == 0:
        raise ValueError("空矩阵需要显式符号表")
    table = matrix[0][0].table
    if size == 1:
        return matrix[0][0]
    if size == 2:
        return matrix[0][0] * matrix[1][1] - matrix[0][1] * matrix[1][0]
    total = MultiPoly.zero(table)
    for j in range(size):
        entry = matrix[0][j]
        if entry.is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in matrix[1:]]
        term = entry * cofactor_determinant(minor)
        total = total - term if j % 2 else total + term
    return total


def bareiss_determinant(matrix: Matrix) -> MultiPoly:
    """
    无分数 Bareiss 消去求行列式

    主元取第 k 列中第 k 行及以下第一个非零元；每次交换行翻转符号。
    """
    size = len(matrix)
    work = [list(row) for row in matrix]
    table = work[0][0].table
    if size == 1:
        return work[0][0]
    sign = 1
    previous = MultiPoly.constant(table, 1)
    for k in range(size - 1):
        pivot_row = next((i for i in range(k, size) if not work[i][k].is_zero()), None)
        if pivot_row is None:
            return MultiPoly.zero(table)
        if pivot_row != k:
            work[k], work[pivot_row] = work[pivot_row], work[k]
            sign = -sign
        pivot = work[k][k]
        for i in range(k + 1, size):
            row = work[i]
            lead = row[k]
            for j in range(k + 1, size):
                value = row[j] * pivot - lead * work[k][j]
                row[j] = value.exact_divide(previous) if not value.is_zero() else value
                check_term_count(len(row[j]))
            row[k] = MultiPoly.zero(table)
        previous = pivot
        logger.debug(f"Bareiss 第 {k + 1}/{size - 1} 步，主元 {len(pivot)} 项")
    result = work[size - 1][size - 1]
    return -result if sign < 0 else result


def determinant(matrix: Matrix, method: str = "bareiss") -> MultiPoly:
    """
    多项式矩阵的精确行列式

    Args:
        matrix: 方阵
        method: "bareiss" 或 "cofactor"（维数 ≤ 4 时可用）
    """
    size = len(matrix)
    if any(len(row) != size for row in matrix):
        raise ValueError("行列式需要方阵")
    if method == "cofactor":
        return cofactor_determinant(matrix)
    return bareiss_determinant(matrix)


def resultant(f: MultiPoly, g: MultiPoly, x: SymbolRef) -> MultiPoly:
    """Res_x(f, g)，即 Sylvester 矩阵的行列式"""
    return resultant_step(f, g, x).result


def formal_degree_factor(f: MultiPoly, g: MultiPoly, x: SymbolRef, m: int, n: int) -> MultiPoly:
    """
    按形式次数 (m, n) 排布的 Sylvester 行列式与 Res_x(f, g) 之比

    f 的次数低于 m 时每低一次乘 (−1)^n·lc(g)；g 的次数低于 n 时每低一次乘 lc(f)。
    两者同时降次时形式行列式的首列全零，返回零多项式。

    Raises:
        ValueError: 实际次数高于形式次数
    """
    symbol = _resolve(f, x)
    drop_f, drop_g = m - max(f.degree(symbol), 0), n - max(g.degree(symbol), 0)
    if drop_f < 0 or drop_g < 0:
        raise ValueError(f"实际次数高于形式次数 ({m}, {n})")
    if drop_f and drop_g:
        return MultiPoly.zero(f.table)
    factor = MultiPoly.constant(f.table, 1)
    if drop_f:
        lead = g.coefficient(symbol, n)
        factor = (-lead if n % 2 else lead) ** drop_f
    elif drop_g:
        factor = f.coefficient(symbol, m) ** drop_g
    return factor


def resultant_step(f: MultiPoly, g: MultiPoly, x: SymbolRef) -> EliminationStep:
    """计算结式并保留附加条件"""
    matrix = sylvester_matrix(f, g, x)
    if matrix.dimension == 0:
        value = MultiPoly.constant(f.table, 1)
    else:
        value = determinant(matrix.entries)
    logger.debug(f"结式消去 {matrix.eliminated.name}: {matrix.dimension} 阶，结果 {len(value)} 项")
    return EliminationStep("resultant", (matrix.eliminated.name,), value, matrix.side_conditions)


# ============ 线性消元 ============

def _linear_coefficients(eq: MultiPoly, x: Symbol, y: Symbol) -> Tuple[MultiPoly, MultiPoly]:
    cx = eq.coefficient(x, 1)
    cy = eq.coefficient(y, 1)
    for coefficient in (cx, cy):
        if coefficient.contains(x) or coefficient.contains(y):
            raise NotLinear("方程关于未知量不是齐次线性的", str(eq))
    rebuilt = cx * MultiPoly.variable(eq.table, x) + cy * MultiPoly.variable(eq.table, y)
    if rebuilt != eq:
        raise NotLinear("方程关于未知量不是齐次线性的", str(eq))
    return cx, cy


def dependency_determinant(eq1: MultiPoly, eq2: MultiPoly, x: SymbolRef, y: SymbolRef) -> MultiPoly:
    """
    齐次线性方程组 eq_i = c_i1·x + c_i2·y 的系数行列式 c11·c22 − c12·c21

    Raises:
        NotLinear: 某项不恰好含 x 或 y 之一的一次幂
    """
    sx, sy = _resolve(eq1, x), _resolve(eq1, y)
    c11, c12 = _linear_coefficients(eq1, sx, sy)
    c21, c22 = _linear_coefficients(eq2, sx, sy)
    return c11 * c22 - c12 * c21


def eliminate_linear(a: MultiPoly, b: MultiPoly, x: SymbolRef, degree: int = 1) -> MultiPoly:
    """
    消去仅以 x^degree 形式出现的 x：(coef(b)/g)·a − (coef(a)/g)·b

    g 为两个系数的最大公因式，乘数中不带两者共有的因子。

    Raises:
        NotLinear: a 或 b 含有 x 的其他幂次
    """
    symbol = _resolve(a, x)
    coefficients = []
    for poly in (a, b):
        parts = poly.as_univariate(symbol)
        if any(not parts[k].is_zero() for k in range(1, len(parts)) if k != degree):
            raise NotLinear(f"多项式含有 {symbol.name} 的其他幂次", str(poly))
        coefficients.append(parts[degree] if degree < len(parts) else MultiPoly.zero(a.table))
    _, ca, cb = cofactors(*coefficients)
    return cb * a - ca * b


def substitute_linear(e: MultiPoly, x: SymbolRef, relation: MultiPoly) -> MultiPoly:
    """
    用关于 x 一次的关系 a·x + b = 0 从 e 中消去 x

    计算 Σ c_k (−b)^k a^(d−k)，再在整除成立时反复约去非常数的 a。

    Raises:
        NotLinear: relation 关于 x 不是一次的
    """
    symbol = _resolve(e, x)
    parts = relation.as_univariate(symbol)
    if len(parts) != 2 or parts[1].is_zero():
        raise NotLinear(f"关系关于 {symbol.name} 不是一次的", str(relation))
    b, a = parts
    coefficients = e.as_univariate(symbol)
    d = len(coefficients) - 1
    minus_b = -b
    result = MultiPoly.zero(e.table)
    b_power = MultiPoly.constant(e.table, 1)
    a_powers = [MultiPoly.constant(e.table, 1)]
    for _ in range(d):
        a_powers.append(a_powers[-1] * a)
    for k, coefficient in enumerate(coefficients):
        if k:
            b_power = b_power * minus_b
        if not coefficient.is_zero():
            result = result + coefficient * b_power * a_powers[d - k]
    if not a.is_constant():
        while not result.is_zero():
            quotient = result.try_divide(a)
            if quotient is None:
                break
            result = quotient
    return result


def solve_linear(relation: MultiPoly, x: SymbolRef) -> RationalExpr:
    """
    由 a·x + b = 0 解出 x = −b/a

    Raises:
        NotLinear: relation 关于 x 不是一次的
    """
    symbol = _resolve(relation, x)
    parts = relation.as_univariate(symbol)
    if len(parts) != 2 or parts[1].is_zero():
        raise NotLinear(f"关系关于 {symbol.name} 不是一次的", str(relation))
    return RationalExpr.quotient(-parts[0], parts[1])


def cancel_factor(p: MultiPoly, factor: MultiPoly, reason: str) -> Tuple[MultiPoly, Optional[SideCondition]]:
    """
    约去已知因子

    Raises:
        NotDivisible: factor 不整除 p
    """
    quotient = p.exact_divide(factor)
    return quotient, SideCondition.of(factor, reason)


def clear_denominators(e: RationalExpr, reason: str = "分母非零") -> Tuple[MultiPoly, Optional[SideCondition]]:
    """
    清分母：返回分子与分母非零的附加条件（没有非常数除式时为 None）

    条件取运算中出现过的全部除式之积，约分后消失的除式也在其中，
    例如 (x² − 1)/(x − 1) 化为 x + 1，仍登记 x − 1 ≠ 0。
    """
    if not e.divisors:
        return e.numerator, None
    product = MultiPoly.constant(e.table, 1)
    for divisor in e.divisors:
        product = product * divisor
    return e.numerator, SideCondition.of(product, reason)


def check_combination(target: MultiPoly, parts: Sequence[Tuple[MultiPoly, MultiPoly]]) -> bool:
    """normalize(target − Σ multiplier·premise) = 0"""
    residual = target
    for multiplier, premise in parts:
        residual = residual - multiplier * premise
    return residual.normalize().is_zero()


def first_nonzero(values: Sequence[MultiPoly]) -> Optional[int]:
    """第一个非零元素的下标"""
    for index, value in enumerate(values):
        if not value.is_zero():
            return index
    return None


__all__ = [
    "SideCondition", "SylvesterMatrix", "EliminationStep",
    "sylvester_matrix", "determinant", "bareiss_determinant", "cofactor_determinant",
    "resultant", "resultant_step", "formal_degree_factor", "dependency_determinant", "eliminate_linear",
    "substitute_linear", "solve_linear", "cancel_factor", "clear_denominators", "check_combination",
    "NotDivisible",
]
