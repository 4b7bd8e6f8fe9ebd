#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
情形 1 的最终结式塔

两条链都在 λ₁ = t 处模 PRIME 计算最终结式。模素数下的非零值证明
有理数域上的结式在 t 处非零，从而最终关于 λ₁ 的多项式不恒为零。
只要特化前后首项次数一致，特化与结式可交换；次数下降时重新抽取 t。
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from algebra import modular
from algebra.bounds import (
    NEG_INF,
    derivation_step,
    phi_profile,
    resultant_degree_bound,
    resultant_support,
    slope_grid,
)
from algebra.elimination import SideCondition, resultant, substitute_linear
from algebra.polynomial import MultiPoly
from algebra.reductions import strip_monomial_content, symmetric_reduce
from algebra.symbols import SymbolTable
from algebra.text_format import parse_poly
from geometry.scenario import ConstraintSet, ScenarioProfile
from infrastructure.exceptions import ExhaustedTrials, LeadingCoefficientVanished, ProfileError
from infrastructure.logger import LogManager

logger = LogManager.get_logger("bicons.tower")

# 对称约化使用的临时符号
SIGMA_SUM = "sigma1"
SIGMA_PRODUCT = "sigma2"

# lam1 = t + ε 的截断阶数
JET_ORDER = 3


@dataclass
class TowerResult:
    """结式塔在 λ₁ = t 处的模素数值"""
    name: str
    sample: int
    value: int
    degrees: Dict[str, int] = field(default_factory=dict)
    side_conditions: List[SideCondition] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)
    attempts: int = 1

    @property
    def nonzero(self) -> bool:
        return self.value % modular.PRIME != 0

    def describe(self) -> str:
        degrees = ", ".join(f"{k}={v}" for k, v in self.degrees.items())
        return f"{self.name}: λ₁={self.sample} 处模 {modular.PRIME} 值 {self.value}（{degrees}）"


# ============ 公共 ============

def _require_concrete(profile: ScenarioProfile) -> Dict[str, Fraction]:
    if not profile.is_concrete:
        raise ProfileError("最终结式塔需要具体的重数、曲率与范数", profile.label())
    return profile.assignment()


def _monomial(table: SymbolTable, exponent: Tuple[int, ...]) -> MultiPoly:
    result = MultiPoly.constant(table, 1)
    for index, power in enumerate(exponent):
        if power:
            result = result * MultiPoly.variable(table, table.by_id(index), power)
    return result


def strip_with_condition(poly: MultiPoly, reason: str) -> Tuple[MultiPoly, Optional[SideCondition]]:
    """剥离单项式因子并给出其非零条件"""
    stripped, exponent = strip_monomial_content(poly)
    if not exponent:
        return poly, None
    return stripped, SideCondition.of(_monomial(poly.table, exponent), reason)


def symmetric_pair(profile: ScenarioProfile, table: SymbolTable) -> Tuple[MultiPoly, MultiPoly]:
    """
    q = r 时 λ_v + λ_w 与 λ_v·λ_w 的表达式

    迹约束给出和，范数约束给出平方和。
    """
    values = profile.assignment()
    p, q, beta = values["p"], values["q"], values["beta"]
    lam1 = MultiPoly.variable(table, "lam1")
    lam_u = MultiPoly.variable(table, "lam_u")
    total = (lam_u.scale(p) + lam1.scale(3)).scale(Fraction(-1) / q)
    squares = (lam1 * lam1 + (lam_u * lam_u).scale(p) - beta).scale(Fraction(-1) / q)
    product = (total * total - squares).scale(Fraction(1, 2))
    return total, product


def symmetric_substitute(poly: MultiPoly, total: MultiPoly, product: MultiPoly) -> MultiPoly:
    """对称约化后代入和与积"""
    reduced = symmetric_reduce(poly, "lam_v", "lam_w", SIGMA_SUM, SIGMA_PRODUCT)
    return reduced.substitute({SIGMA_SUM: total, SIGMA_PRODUCT: product})


def eliminate_principal_pair(poly: MultiPoly, profile: ScenarioProfile,
                             constraints: ConstraintSet) -> MultiPoly:
    """
    用迹约束与范数约束消去 λ_w、λ_v

    q ≠ r 时为 Res_{λ_v}(poly|λ_w, norm|λ_w)；q = r 时结式是完全平方，
    改用对称约化得到其平方根。
    """
    values = profile.assignment()
    if values["q"] == values["r"]:
        total, product = symmetric_pair(profile, poly.table)
        return symmetric_substitute(poly, total, product).normalize()
    norm_without_w = substitute_linear(constraints.norm, "lam_w", constraints.trace)
    return resultant(substitute_linear(poly, "lam_w", constraints.trace), norm_without_w, "lam_v")


def _mod_coefficients(poly: MultiPoly, symbol: str) -> List[int]:
    """一元多项式（只含 symbol）的系数模 PRIME"""
    return [modular.reduce(c.constant_value()) for c in poly.as_univariate(symbol)]


def _samples(seed: int, bound: int, trials: int) -> List[int]:
    rng = np.random.default_rng(seed)
    return [int(x) for x in rng.integers(2, max(bound, 3) + 1, size=trials)]


# ============ 子情形 A ============

def case1a_final(profile: ScenarioProfile, quartic: MultiPoly, constraints: ConstraintSet,
                 seed: int, bound: int = 50, trials: int = 64) -> TowerResult:
    """
    子情形 A 的最终结式 Res_{λ_u}(G, 𝒢) 在 λ₁ = t 处的值

    G 由四次关系消去 λ_v、λ_w 得到；𝒢 是 L 关系的分子（由 ∂G/∂λ₁、∂G/∂λ_u 构成）
    消去 λ_v、λ_w 的结果。

    Args:
        profile: 具体场景
        quartic: 四次关系（已特化）
        constraints: 场景约束
        seed: 随机种子
        bound: t 的取值上界
        trials: 最多尝试次数

    Raises:
        ProfileError: 场景不是具体的
        ExhaustedTrials: 所有 t 都给出零或退化
    """
    values = _require_concrete(profile)
    table = quartic.table
    side_conditions: List[SideCondition] = []
    symmetric = values["q"] == values["r"]

    if symmetric:
        stripped, condition = strip_with_condition(quartic, "单项式因子非零")
        if condition:
            side_conditions.append(condition)
        total, product = symmetric_pair(profile, table)
        g_poly = symmetric_substitute(stripped, total, product).normalize()
    else:
        g_poly = eliminate_principal_pair(quartic, profile, constraints)
    if set(g_poly.symbol_names()) - {"lam1", "lam_u"}:
        raise ProfileError("G 含有多余变量", ", ".join(g_poly.symbol_names()))
    generic_degree = g_poly.degree("lam_u")
    logger.info(f"子情形 A：G 关于 λ_u 的次数 {generic_degree}，{len(g_poly)} 项")

    g1 = g_poly.partial_derivative("lam1")
    gu = g_poly.partial_derivative("lam_u")
    side_conditions.append(SideCondition.of(g1, "∂G/∂λ₁ 非零（L 的分母）"))
    p = values["p"]
    lam_u_minus_lam1 = parse_poly("lam_u - lam1", table)
    nl = (gu.scale(3) - g1.scale(p)) * lam_u_minus_lam1
    outer = profile.specialize(parse_poly("(c + lam_u*lam_v)*(c + lam_u*lam_w)", table))
    inner = profile.specialize(parse_poly(
        "(q*(lam_v - lam1)*(c + lam_u*lam_v) + r*(lam_w - lam1)*(c + lam_u*lam_w))*(c + lam_w*lam_v)", table))
    l_numerator = outer * nl - g1 * inner
    l_numerator, condition = strip_with_condition(l_numerator, "单项式因子非零")
    if condition:
        side_conditions.append(condition)
    norm_without_w = substitute_linear(constraints.norm, "lam_w", constraints.trace)

    attempts = 0
    for t in _samples(seed, bound, trials):
        attempts += 1
        at = {"lam1": t}
        g_at = g_poly.partial_evaluate(at)
        if g_at.degree("lam_u") != generic_degree:
            continue
        g_mod = _mod_coefficients(g_at, "lam_u")
        if modular.degree(g_mod) != generic_degree:
            continue
        l_at = l_numerator.partial_evaluate(at)
        if symmetric:
            total, product = symmetric_pair(profile, table)
            gg_at = symmetric_substitute(l_at, total.partial_evaluate(at), product.partial_evaluate(at))
        else:
            trace_at = constraints.trace.partial_evaluate(at)
            gg_at = resultant(substitute_linear(l_at, "lam_w", trace_at),
                              norm_without_w.partial_evaluate(at), "lam_v")
        if gg_at.is_zero():
            continue
        gg_mod = _mod_coefficients(gg_at, "lam_u")
        value = modular.res_formal(g_mod, gg_mod, modular.degree(g_mod), modular.degree(gg_mod))
        if value == 0:
            logger.debug(f"λ₁={t} 处模值为零，重新采样")
            continue
        return TowerResult(
            name="case1A",
            sample=t,
            value=value,
            degrees={"G": generic_degree, "L": modular.degree(gg_mod)},
            side_conditions=[c for c in side_conditions if c is not None],
            notes=["对称约化" if symmetric else "λ_v 结式"],
            attempts=attempts,
        )
    raise ExhaustedTrials("子情形 A 的最终结式在所有采样点为零", f"{trials} 次, seed={seed}")


# ============ 子情形 B：二元模多项式 ============

Bivariate = Dict[Tuple[int, int], int]  # (alpha 次数, phi 次数) -> 系数
BiJet = List[Bivariate]


def _bi_add(x: Bivariate, y: Bivariate) -> Bivariate:
    out = dict(x)
    for key, value in y.items():
        total = (out.get(key, 0) + value) % modular.PRIME
        if total:
            out[key] = total
        else:
            out.pop(key, None)
    return out


def _bi_mul(x: Bivariate, y: Bivariate) -> Bivariate:
    out: Bivariate = {}
    for (a1, f1), v1 in x.items():
        for (a2, f2), v2 in y.items():
            key = (a1 + a2, f1 + f2)
            out[key] = (out.get(key, 0) + v1 * v2) % modular.PRIME
    return {k: v for k, v in out.items() if v}


def _bi_scale(x: Bivariate, s: int) -> Bivariate:
    return {k: v * s % modular.PRIME for k, v in x.items() if v * s % modular.PRIME}


def _bi_d_alpha(x: Bivariate) -> Bivariate:
    out: Bivariate = {}
    for (a, f), v in x.items():
        if a:
            out[(a - 1, f)] = (out.get((a - 1, f), 0) + v * a) % modular.PRIME
    return {k: v for k, v in out.items() if v}


def _bi_d_phi(x: Bivariate) -> Bivariate:
    out: Bivariate = {}
    for (a, f), v in x.items():
        if f:
            out[(a, f - 1)] = (out.get((a, f - 1), 0) + v * f) % modular.PRIME
    return {k: v for k, v in out.items() if v}


def _bi(entries: Dict[Tuple[int, int], int]) -> Bivariate:
    return {k: v % modular.PRIME for k, v in entries.items() if v % modular.PRIME}


def _jet_mul(x: BiJet, y: BiJet, order: int) -> BiJet:
    out: BiJet = [{} for _ in range(order)]
    for i in range(order):
        for j in range(order - i):
            if i < len(x) and j < len(y) and x[i] and y[j]:
                out[i + j] = _bi_add(out[i + j], _bi_mul(x[i], y[j]))
    return out


def _bi_at_phi(x: Bivariate, phi: int, size: int) -> List[int]:
    out = [0] * (max(size, max((a for a, _ in x), default=0)) + 1)
    for (a, f), v in x.items():
        out[a] = (out[a] + v * pow(phi, f, modular.PRIME)) % modular.PRIME
    return out


@dataclass
class AffineRules:
    """e₁ 在 (λ₁ = t + ε, α, φ) 上的规则（ε 的 jet）"""
    lam1: BiJet
    alpha: BiJet
    phi: BiJet

    @classmethod
    def at(cls, t: int, n: int, beta: int, c: int) -> 'AffineRules':
        i3 = modular.inverse(3)
        n2 = n + 2
        # 3e₁(λ₁) = (n+2)λ₁φ − α(β + 2λ₁²)
        lam1 = [
            _bi({(0, 1): n2 * t * i3, (1, 0): -(beta + 2 * t * t) * i3}),
            _bi({(0, 1): n2 * i3, (1, 0): -4 * t * i3}),
            _bi({(1, 0): -2 * i3}),
        ]
        # e₁(α) = αφ + λ₁(1 + α²)
        alpha = [_bi({(1, 1): 1, (0, 0): t, (2, 0): t}), _bi({(0, 0): 1, (2, 0): 1}), {}]
        # e₁(φ) = φ² + αλ₁φ + c
        phi = [_bi({(0, 2): 1, (1, 1): t, (0, 0): c}), _bi({(1, 1): 1}), {}]
        return cls(lam1, alpha, phi)

    def apply(self, f: BiJet, order: int) -> BiJet:
        """e₁(F)，输入长度 order+1，输出长度 order"""
        d_lam1 = [_bi_scale(f[k + 1], k + 1) for k in range(order)]
        d_alpha = [_bi_d_alpha(f[k]) for k in range(order)]
        d_phi = [_bi_d_phi(f[k]) for k in range(order)]
        parts = (_jet_mul(d_lam1, self.lam1, order), _jet_mul(d_alpha, self.alpha, order),
                 _jet_mul(d_phi, self.phi, order))
        return [_bi_add(_bi_add(parts[0][k], parts[1][k]), parts[2][k]) for k in range(order)]


Term = Tuple[int, int, int, int]


def _terms(poly: MultiPoly) -> List[Tuple[Term, int]]:
    """(alpha, phi, lam_u, lam1) 指数与模系数"""
    allowed = {"alpha", "phi", "lam_u", "lam1"}
    extra = set(poly.symbol_names()) - allowed
    if extra:
        raise ProfileError("多项式含有多余变量", ", ".join(sorted(extra)))
    table = poly.table
    ids = [table[name].id for name in ("alpha", "phi", "lam_u", "lam1")]
    out = []
    for exponent, coefficient in poly.items():
        key = tuple(exponent[i] if i < len(exponent) else 0 for i in ids)
        out.append((key, modular.reduce(Fraction(coefficient))))
    return out


def _lam1_powers(t: int, order: int, top: int) -> List[List[int]]:
    """(t + ε)^k 的 jet，k = 0..top"""
    base = [t % modular.PRIME, 1] + [0] * (order - 2)
    powers = [modular.jet_constant(1, order)]
    for _ in range(top):
        powers.append(modular.jet_mul(powers[-1], base[:order]))
    return powers


def _evaluate_u(terms: Sequence[Tuple[Term, int]], size: int, a0: int, f0: int,
                powers: List[List[int]], order: int) -> List[List[int]]:
    """各 λ_u 次数系数在 (t + ε, a0, f0) 处的 jet"""
    out = [modular.jet_constant(0, order) for _ in range(size + 1)]
    for (a, f, u, l), coefficient in terms:
        scalar = coefficient * pow(a0, a, modular.PRIME) * pow(f0, f, modular.PRIME) % modular.PRIME
        if scalar:
            out[u] = modular.jet_add(out[u], [scalar * x % modular.PRIME for x in powers[l]])
    return out


def _interpolate_grid(grid: List[List[List[int]]], alpha_nodes: List[int], phi_nodes: List[int],
                      phi_size: int, order: int) -> BiJet:
    """网格值 -> 每个 ε 分量的二元系数"""
    result: BiJet = []
    for k in range(order):
        per_alpha = [modular.interpolate(phi_nodes, [cell[k] for cell in row]) for row in grid]
        component: Bivariate = {}
        for fd in range(phi_size + 1):
            column = [coefficients[fd] if fd < len(coefficients) else 0 for coefficients in per_alpha]
            for ad, value in enumerate(modular.interpolate(alpha_nodes, column)):
                if value:
                    component[(ad, fd)] = value
        result.append(component)
    return result


def _phi_resultant(first: Bivariate, second: Bivariate, sizes: Tuple[int, int],
                   nodes: List[int]) -> List[int]:
    m, n = sizes
    return [modular.res_formal(_bi_at_phi(first, f0, m), _bi_at_phi(second, f0, n), m, n) for f0 in nodes]


def case1b_final(profile: ScenarioProfile, quadratic: MultiPoly, cubic: MultiPoly,
                 constraints: ConstraintSet, seed: int, bound: int = 50,
                 trials: int = 64) -> TowerResult:
    """
    子情形 B 的最终结式 h₃(λ₁) 在 λ₁ = t 处的值

    F₃、G₂ 由两条仿射关系消去 λ_v、λ_w 得到；F₄ = Res_{λ_u}(F₃, G₂) 在 (α, φ) 网格上
    以 jet 形式求值并插值；F₅ = e₁(F₄)，F₆ = e₁(F₅)；h₁ = Res_α(F₄, F₅)，
    h₂ = Res_α(F₄, F₆) 按严格的 φ 次数上界插值，去掉 φ 的低次因子后取 Res_φ。

    Raises:
        ProfileError: 场景不是具体的
        ExhaustedTrials: 所有 t 都给出零或退化
    """
    values = _require_concrete(profile)
    n = int(values["n"])
    beta_value, c_value = values["beta"], values["c"]
    if beta_value.denominator != 1 or c_value.denominator != 1:
        raise ProfileError("子情形 B 的模计算需要整数 c 与 β", profile.label())
    beta, c = int(beta_value), int(c_value)
    side_conditions: List[SideCondition] = []
    notes: List[str] = []

    f3 = eliminate_principal_pair(quadratic, profile, constraints)
    g2 = eliminate_principal_pair(cubic, profile, constraints)
    f3_terms, g2_terms = _terms(f3), _terms(g2)
    m_f, m_g = f3.degree("lam_u"), g2.degree("lam_u")
    support_f = [t for t, _ in f3_terms]
    support_g = [t for t, _ in g2_terms]

    bound4 = resultant_support(support_f, support_g, m_f, m_g, slope_grid(40, 2))
    a4 = int(math.floor(bound4(1, 0) + 1e-9))
    b4 = int(math.floor(bound4(0, 1) + 1e-9))

    def rule_bounds(wa: float, wf: float) -> Tuple[float, float, float]:
        return max(wf, wa), max(wa + wf, 0, 2 * wa), max(2 * wf, wa + wf, 0 if c != 0 else NEG_INF)

    def next_bound(previous: Callable[[float, float], float]) -> Callable[[float, float], float]:
        def evaluate(wa: float, wf: float) -> float:
            h_e, h_a, h_ph = rule_bounds(wa, wf)
            base = previous(wa, wf)
            return max(base + h_e, base - wa + h_a, base - wf + h_ph)
        return evaluate

    bound5 = next_bound(bound4)
    bound6 = next_bound(bound5)
    a5 = int(math.floor(bound5(1, 0) + 1e-9))
    a6 = int(math.floor(bound6(1, 0) + 1e-9))

    profile4 = phi_profile(bound4, a4, slope_grid(60, 4))
    profile5 = derivation_step(profile4)
    profile6 = derivation_step(profile5)
    r1 = resultant_degree_bound(profile4, profile5, a4, a5)
    r2 = resultant_degree_bound(profile4, profile6, a4, a6)
    degrees = {"F3_lam_u": m_f, "G2_lam_u": m_g, "A4": a4, "B4": b4, "A5": a5, "A6": a6, "R1": r1, "R2": r2}
    logger.info(f"子情形 B 次数上界: {degrees}")

    if c == 0:
        side_conditions.append(SideCondition.of(parse_poly("phi", quadratic.table), "φ ≠ 0（c = 0 时作为假设）"))
    else:
        notes.append("c ≠ 0 时 e₁(φ)|_{φ=0} = c ≠ 0，φ 不恒为零")

    alpha_nodes = [i + 2 for i in range(a4 + 1)]
    phi_nodes = [j + 3 for j in range(b4 + 1)]
    h_nodes = [i + 5 for i in range(max(r1, r2) + 1)]
    top_lam1 = max((term[3] for term in support_f + support_g), default=0)

    attempts = 0
    for t in _samples(seed, bound, trials):
        attempts += 1
        powers = _lam1_powers(t, JET_ORDER, top_lam1 + 1)

        def f4_at(a0: int, f0: int) -> List[int]:
            first = _evaluate_u(f3_terms, m_f, a0, f0, powers, JET_ORDER)
            if m_f == 0:
                return first[0]
            second = _evaluate_u(g2_terms, m_g, a0, f0, powers, JET_ORDER)
            matrix = modular.sylvester_jet(first, second, m_f, m_g, JET_ORDER)
            return modular.det_jet(matrix)

        try:
            grid = [[f4_at(a0, f0) for f0 in phi_nodes] for a0 in alpha_nodes]
        except LeadingCoefficientVanished:
            logger.debug(f"λ₁={t} 处 jet 主元退化，重新采样")
            continue
        f4 = _interpolate_grid(grid, alpha_nodes, phi_nodes, b4, JET_ORDER)
        rules = AffineRules.at(t, n, beta, c)
        f5 = rules.apply(f4, 2)
        f6 = rules.apply(f5, 1)

        h1_values = _phi_resultant(f4[0], f5[0], (a4, a5), h_nodes)
        h2_values = _phi_resultant(f4[0], f6[0], (a4, a6), h_nodes)
        h1 = modular.interpolate(h_nodes[:r1 + 1], h1_values[:r1 + 1])
        h2 = modular.interpolate(h_nodes[:r2 + 1], h2_values[:r2 + 1])
        if not h1 or not h2:
            continue
        v1, v2 = modular.valuation(h1), modular.valuation(h2)
        value = modular.res_formal(h1[v1:], h2[v2:], r1 - v1, r2 - v2)
        if value == 0:
            logger.debug(f"λ₁={t} 处模值为零，重新采样")
            continue
        result_degrees = dict(degrees)
        result_degrees.update({"h1": modular.degree(h1), "h2": modular.degree(h2),
                               "phi_valuation_h1": v1, "phi_valuation_h2": v2})
        return TowerResult(
            name="case1B",
            sample=t,
            value=value,
            degrees=result_degrees,
            side_conditions=[c for c in side_conditions if c is not None],
            notes=notes + ["对称约化" if values["q"] == values["r"] else "λ_v 结式"],
            attempts=attempts,
        )
    raise ExhaustedTrials("子情形 B 的最终结式在所有采样点为零", f"{trials} 次, seed={seed}")
