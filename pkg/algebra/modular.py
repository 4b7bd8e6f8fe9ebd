#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
模素数运算

素数 PRIME = 2^31 − 1。一元多项式以系数列表表示（低次在前）；
"jet" 是截断幂级数 a0 + a1·ε + ... + a_{K−1}·ε^{K−1}，同样用列表表示。

模 PRIME 下结式非零蕴含有理数域上结式非零（前提是首项系数在模约化后仍非零），
因此这里的计算只用于给出非零证书，不用于断言为零。
"""

from fractions import Fraction
from typing import List, Optional, Sequence

from infrastructure.exceptions import LeadingCoefficientVanished

PRIME = 2 ** 31 - 1

UPoly = List[int]
Jet = List[int]


# ============ 标量 ============

def reduce(value) -> int:
    """把整数或 Fraction 约化到 [0, PRIME)"""
    if isinstance(value, Fraction):
        if value.denominator % PRIME == 0:
            raise ZeroDivisionError(f"分母被 {PRIME} 整除")
        return value.numerator % PRIME * inverse(value.denominator) % PRIME
    return value % PRIME


def inverse(a: int) -> int:
    """
    模逆元

    Raises:
        ZeroDivisionError: a ≡ 0
    """
    a %= PRIME
    if a == 0:
        raise ZeroDivisionError("0 在模素数下不可逆")
    return pow(a, PRIME - 2, PRIME)


# ============ 一元多项式 ============

def trim(a: Sequence[int]) -> UPoly:
    end = len(a)
    while end and a[end - 1] % PRIME == 0:
        end -= 1
    return [x % PRIME for x in a[:end]]


def degree(a: Sequence[int]) -> int:
    """零多项式为 -1"""
    return len(trim(a)) - 1


def evaluate(a: Sequence[int], x: int) -> int:
    result = 0
    for coefficient in reversed(a):
        result = (result * x + coefficient) % PRIME
    return result


def remainder(f: Sequence[int], g: Sequence[int]) -> UPoly:
    f = trim(f)
    g = trim(g)
    if not g:
        raise ZeroDivisionError("除以零多项式")
    dg = len(g) - 1
    lead_inverse = inverse(g[dg])
    while len(f) - 1 >= dg and f:
        shift = len(f) - 1 - dg
        factor = f[-1] * lead_inverse % PRIME
        for i in range(dg + 1):
            f[i + shift] = (f[i + shift] - factor * g[i]) % PRIME
        f = trim(f)
    return f


def divmod_poly(f: Sequence[int], g: Sequence[int]):
    """返回 (商, 余式)"""
    f = trim(f)
    g = trim(g)
    if not g:
        raise ZeroDivisionError("除以零多项式")
    quotient = [0] * max(0, len(f) - len(g) + 1)
    lead_inverse = inverse(g[-1])
    while len(f) >= len(g) and f:
        shift = len(f) - len(g)
        factor = f[-1] * lead_inverse % PRIME
        quotient[shift] = factor
        for i, coefficient in enumerate(g):
            f[i + shift] = (f[i + shift] - factor * coefficient) % PRIME
        f = trim(f)
    return trim(quotient), f


def gcd(f: Sequence[int], g: Sequence[int]) -> UPoly:
    """首一最大公因式（两者都为零时返回 []）"""
    f, g = trim(f), trim(g)
    while g:
        f, g = g, remainder(f, g)
    if not f:
        return f
    lead_inverse = inverse(f[-1])
    return [x * lead_inverse % PRIME for x in f]


def res_actual(f: Sequence[int], g: Sequence[int]) -> int:
    """按实际次数计算的结式 Res(f, g)"""
    f, g = trim(f), trim(g)
    if not f or not g:
        return 0
    m, k = len(f) - 1, len(g) - 1
    if k == 0:
        return pow(g[0], m, PRIME)
    if m == 0:
        return pow(f[0], k, PRIME)
    r = remainder(f, g)
    if not r:
        return 0
    # Res(f, g) = (−1)^{mk} lc(g)^{m − deg r} Res(g, r)
    value = pow(g[k], m - (len(r) - 1), PRIME) * res_actual(g, r) % PRIME
    if (m * k) % 2:
        value = -value % PRIME
    return value


def res_formal(f: Sequence[int], g: Sequence[int], m: int, n: int) -> int:
    """
    形式次数 (m, n) 下的 Sylvester 结式

    两个首项都退化时为 0。

    Raises:
        ValueError: 实际次数超过形式次数
    """
    f, g = trim(f), trim(g)
    df, dg = len(f) - 1, len(g) - 1
    if df > m or dg > n:
        raise ValueError(f"实际次数 ({df}, {dg}) 超过形式次数 ({m}, {n})")
    if df == m:
        if dg < 0:
            return 0
        return pow(f[m], n - dg, PRIME) * res_actual(f, g) % PRIME
    if dg == n:
        if df < 0:
            return 0
        value = pow(g[n], m - df, PRIME) * res_actual(f, g) % PRIME
        if (m * n + n * df) % 2:
            value = -value % PRIME
        return value
    return 0


def interpolate(xs: Sequence[int], ys: Sequence[int]) -> UPoly:
    """牛顿插值，返回次数 < len(xs) 的系数列表"""
    n = len(xs)
    c = [y % PRIME for y in ys]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            c[i] = (c[i] - c[i - 1]) * inverse(xs[i] - xs[i - j]) % PRIME
    poly = [0]
    for i in range(n - 1, -1, -1):
        shifted = [0] * (len(poly) + 1)
        for k, coefficient in enumerate(poly):
            shifted[k + 1] = (shifted[k + 1] + coefficient) % PRIME
            shifted[k] = (shifted[k] - coefficient * xs[i]) % PRIME
        shifted[0] = (shifted[0] + c[i]) % PRIME
        poly = shifted
    return trim(poly)


def valuation(a: Sequence[int]) -> int:
    """最低非零系数的下标（零多项式返回 len）"""
    for index, coefficient in enumerate(a):
        if coefficient % PRIME:
            return index
    return len(a)


# ============ 截断幂级数 ============

def jet_constant(value: int, order: int) -> Jet:
    out = [0] * order
    if order:
        out[0] = value % PRIME
    return out


def jet_add(a: Jet, b: Jet) -> Jet:
    return [(x + y) % PRIME for x, y in zip(a, b)]


def jet_sub(a: Jet, b: Jet) -> Jet:
    return [(x - y) % PRIME for x, y in zip(a, b)]


def jet_mul(a: Jet, b: Jet) -> Jet:
    order = len(a)
    out = [0] * order
    for i, x in enumerate(a):
        if x:
            for j in range(order - i):
                out[i + j] = (out[i + j] + x * b[j]) % PRIME
    return out


def jet_inverse(a: Jet) -> Jet:
    """
    Raises:
        ZeroDivisionError: 常数项为零
    """
    order = len(a)
    out = [0] * order
    head = inverse(a[0])
    out[0] = head
    for k in range(1, order):
        total = 0
        for j in range(1, k + 1):
            total += a[j] * out[k - j]
        out[k] = -total * head % PRIME
    return out


def jet_is_zero(a: Jet) -> bool:
    return not any(x % PRIME for x in a)


def det_jet(matrix: Sequence[Sequence[Jet]]) -> Jet:
    """
    jet 矩阵的行列式（高斯消去，主元须为单位）

    Raises:
        LeadingCoefficientVanished: 某列没有常数项非零的主元
    """
    size = len(matrix)
    if size == 0:
        raise ValueError("空矩阵")
    order = len(matrix[0][0])
    work = [[list(entry) for entry in row] for row in matrix]
    result = jet_constant(1, order)
    for k in range(size):
        pivot_row = next((i for i in range(k, size) if work[i][k][0] % PRIME), None)
        if pivot_row is None:
            if order == 1:
                return [0]
            raise LeadingCoefficientVanished("jet 行列式缺少可逆主元", f"第 {k} 列")
        if pivot_row != k:
            work[k], work[pivot_row] = work[pivot_row], work[k]
            result = [-x % PRIME for x in result]
        pivot = work[k][k]
        result = jet_mul(result, pivot)
        pivot_inverse = jet_inverse(pivot)
        for i in range(k + 1, size):
            factor = jet_mul(work[i][k], pivot_inverse)
            if jet_is_zero(factor):
                continue
            for j in range(k, size):
                work[i][j] = jet_sub(work[i][j], jet_mul(factor, work[k][j]))
    return result


def sylvester_jet(a: Sequence[Jet], b: Sequence[Jet], m: int, n: int, order: int) -> List[List[Jet]]:
    """
    jet 系数的 Sylvester 矩阵（a、b 为低次在前的系数列表，形式次数 m、n）
    """
    zero = jet_constant(0, order)
    a_full = [a[i] if i < len(a) else zero for i in range(m + 1)]
    b_full = [b[i] if i < len(b) else zero for i in range(n + 1)]
    size = m + n
    rows: List[List[Jet]] = []
    for i in range(n):
        rows.append([a_full[m - (j - i)] if 0 <= j - i <= m else zero for j in range(size)])
    for i in range(m):
        rows.append([b_full[n - (j - i)] if 0 <= j - i <= n else zero for j in range(size)])
    return rows


def first_nonzero(values: Sequence[int]) -> Optional[int]:
    for index, value in enumerate(values):
        if value % PRIME:
            return index
    return None
