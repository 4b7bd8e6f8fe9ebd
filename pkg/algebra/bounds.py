#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
加权次数上界

Sylvester 行列式的每一项是一次全排列，所以结式在任一加权分次下的次数
不超过"各元素权重上界之和"在所有排列上的最大值，即一个最大权指派问题。
"""

import math
from typing import Callable, Dict, Iterable, List, Sequence, Tuple

import numpy as np
from scipy.optimize import linear_sum_assignment

NEG_INF = -math.inf
# 指派矩阵中代替 -inf 的惩罚值
_FORBIDDEN = -1.0e9

Profile = List[float]
Weights = List[List[float]]


def sylvester_weights(pf: Sequence[float], pg: Sequence[float], m: int, n: int) -> Weights:
    """
    Sylvester 矩阵元素的权重上界

    Args:
        pf: pf[k] 为 f 中 x^k 系数的权重上界
        pg: 同上，对应 g
        m: f 的形式次数
        n: g 的形式次数

    Returns:
        (m+n)×(m+n) 权重矩阵，结构零元素为 -inf
    """
    def at(profile: Sequence[float], k: int) -> float:
        return profile[k] if 0 <= k < len(profile) else NEG_INF

    size = m + n
    rows: Weights = []
    for i in range(n):
        rows.append([at(pf, m - (j - i)) if 0 <= j - i <= m else NEG_INF for j in range(size)])
    for i in range(m):
        rows.append([at(pg, n - (j - i)) if 0 <= j - i <= n else NEG_INF for j in range(size)])
    return rows


def max_assignment(weights: Weights) -> float:
    """
    最大权完美匹配的权重

    Returns:
        最大权重；不存在避开 -inf 的排列时返回 -inf
    """
    if not weights:
        return 0.0
    matrix = np.array(weights, dtype=float)
    forbidden = np.isneginf(matrix)
    matrix[forbidden] = _FORBIDDEN
    rows, cols = linear_sum_assignment(matrix, maximize=True)
    if forbidden[rows, cols].any():
        return NEG_INF
    return float(matrix[rows, cols].sum())


# ============ 支撑函数 ============

Term = Tuple[int, int, int, int]  # (alpha 次数, phi 次数, lam_u 次数, lam1 次数)


def support(terms: Iterable[Term]) -> Callable[[float, float, float], float]:
    """H(wa, wf, s) = max(wa·a + wf·f + s·u)"""
    items = list(terms)

    def evaluate(wa: float, wf: float, s: float) -> float:
        return max(wa * a + wf * f + s * u for a, f, u, _ in items)

    return evaluate


def univariate_profile(terms: Iterable[Term], size: int, wa: float, wf: float) -> Profile:
    """按 lam_u 次数分组的 wa·a + wf·f 最大值"""
    profile = [NEG_INF] * (size + 1)
    for a, f, u, _ in terms:
        profile[u] = max(profile[u], wa * a + wf * f)
    return profile


def resultant_support(f_terms: Sequence[Term], g_terms: Sequence[Term], m: int, n: int,
                      slopes: Sequence[float]) -> Callable[[float, float], float]:
    """
    Res_u(F, G) 在权重 (wa, wf) 下的次数上界

    取两种界的较小者：对斜率 s 的支撑函数界 min_s(n·H_F + m·H_G − s·m·n)，
    以及 Sylvester 元素指派界。m = 0 时 F 原样传递。
    """
    hf = support(f_terms)
    hg = support(g_terms)
    cache: Dict[Tuple[float, float], float] = {}

    def evaluate(wa: float, wf: float) -> float:
        key = (wa, wf)
        if key in cache:
            return cache[key]
        if m == 0:
            value = hf(wa, wf, 0)
        else:
            by_slope = min(n * hf(wa, wf, s) + m * hg(wa, wf, s) - s * m * n for s in slopes)
            by_assignment = max_assignment(sylvester_weights(
                univariate_profile(f_terms, m, wa, wf),
                univariate_profile(g_terms, n, wa, wf), m, n))
            value = min(by_slope, by_assignment)
        cache[key] = value
        return value

    return evaluate


def slope_grid(limit: int = 40, denominator: int = 2) -> List[float]:
    """对称的斜率网格 {k/denominator : |k| ≤ limit}"""
    return [k / denominator for k in range(-limit, limit + 1)]


def phi_profile(bound: Callable[[float, float], float], size: int,
                slopes: Sequence[float]) -> Profile:
    """
    alpha^k 系数的 phi 次数上界

    对任意 a，a·k + deg_phi ≤ bound(a, 1)，取所有 a 的最小值。
    """
    profile = []
    for k in range(size + 1):
        profile.append(min(math.floor(bound(a, 1) - a * k + 1e-9) for a in slopes))
    return profile


def derivation_step(profile: Sequence[float]) -> Profile:
    """
    e1 作用一次后的 phi 次数轮廓

    规则的单项式至多把 (alpha, phi) 次数改变 (0, +1)、(±1, 0)，结果长度加一。
    """
    def at(k: int) -> float:
        return profile[k] if 0 <= k < len(profile) else NEG_INF

    return [max(at(k) + 1, at(k - 1), at(k + 1)) for k in range(len(profile) + 1)]


def resultant_degree_bound(pf: Sequence[float], pg: Sequence[float], m: int, n: int) -> int:
    """
    Raises:
        ValueError: 没有可行排列（结式恒为零）
    """
    value = max_assignment(sylvester_weights(pf, pg, m, n))
    if value == NEG_INF:
        raise ValueError("Sylvester 矩阵结构上奇异")
    return int(math.floor(value + 1e-9))
