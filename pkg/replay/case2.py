#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
情形 2（三个主曲率，重数 1, p, n − p − 1）

e₁(λ_u) = μ·e₁(λ₁)，μ 由范数的 e₁ 导数确定。Gauss 关系与两条 Riccati 方程
都写成 e₁(λ₁) 与 e₁e₁(λ₁) 的多项式，依次消去 e₁e₁(λ₁)、e₁(λ₁)²、μ 与 λ_u，
得到只含 λ₁ 的关系 φ(λ₁) = 0。
"""

from typing import List

from core.base import BaseStep
from geometry.scenario import DISPLAY_CASE2, ScenarioProfile
from processors.certify import Certify
from processors.checks import AssertZero, MatchFixture
from processors.combination import CancelFactor, Solve, Substitute
from processors.differentiation import Differentiate
from processors.elimination import EliminateLinear, EliminateTrace, Resultant
from processors.operands import expr, fixture
from processors.premises import Note, Premise

# 前两个展示式对 n、p、c 通用，严格比对；其余只在 (n, p) = (4, 2)、c = 0 时给出，仅作参考
GENERAL_DISPLAYS = (
    ("gauss_reduced", "case2.gauss_display"),
    ("riccati_u", "case2.riccati_u_display"),
)
DISPLAY_PROFILE = (DISPLAY_CASE2[0], (DISPLAY_CASE2[1],), DISPLAY_CASE2[2])
DISPLAYS = (
    ("riccati_v", "case2.riccati_v_display"),
    ("e1e1_free", "case2.e1e1_free_display"),
    ("lam1_square_free", "case2.final_display"),
)


def _shows_displays(profile: ScenarioProfile) -> bool:
    multiplicities = tuple(profile.multiplicities) if profile.multiplicities is not None else None
    curvature = profile.curvature
    return ((profile.dimension, multiplicities) == DISPLAY_PROFILE[:2]
            and curvature is not None and curvature == DISPLAY_PROFILE[2])


def _riccati(index: str) -> List[BaseStep]:
    """e₁(ω_ii¹) = (ω_ii¹)² + c + λ₁λ_i，ω_ii¹ 用 e₁(λ_i) 表示后代入 e₁(μ)"""
    return [
        Differentiate(f"w_{index}{index}1_derivative", f"w_{index}{index}1_solution", "e1", clear=False),
        Substitute(f"riccati_{index}_raw",
                   expr(f"e1_w_{index}{index}1-w_{index}{index}1^2-c-lam1*lam_{index}"),
                   {f"e1_w_{index}{index}1": f"w_{index}{index}1_derivative",
                    f"w_{index}{index}1": f"w_{index}{index}1_solution"},
                   reason=f"λ_{index} ≠ λ₁"),
        Substitute(f"riccati_{index}_mu", f"riccati_{index}_raw", {"e1_mu": "e1_mu_solution"},
                   reason="p(3λ₁ + (n − 1)λ_u) ≠ 0"),
    ]


def build_steps(profile: ScenarioProfile) -> List[BaseStep]:
    steps: List[BaseStep] = [
        Premise("trace", lambda context: context.constraints.trace),
        MatchFixture("trace", "case2.trace"),
        Premise("norm", lambda context: context.constraints.norm),
        MatchFixture("norm", "case2.norm"),
        EliminateTrace("norm_without_v", "norm", "lam_v"),
        MatchFixture("norm_without_v", "case2.norm_without_v"),
        EliminateTrace("norm_without_u", "norm", "lam_u"),
        MatchFixture("norm_without_u", "case2.norm_without_u"),

        Differentiate("e1_trace", "trace", "e1"),
        AssertZero("e1_trace", "e₁ 规则应保持迹条件"),
        Differentiate("e1_norm", "norm", "e1", reason="n − p − 1 ≠ 0"),
        CancelFactor("e1_norm_reduced", "e1_norm", expr("e1_lam1"), reason="λ₁ 不是常数"),
        EliminateTrace("mu_relation", "e1_norm_reduced", "lam_v"),
        MatchFixture("mu_relation", "case2.mu_relation"),
        Differentiate("mu_derivative", "mu_relation", "e1"),
        MatchFixture("mu_derivative", "case2.mu_derivative"),
        Solve("e1_mu_solution", "mu_derivative", "e1_mu"),

        Premise("gauss", fixture("case2.gauss")),
        Note("Codazzi：e₁(λ_i) = (λ_i − λ₁)ω_ii¹，其中 e₁(λ_u) = μe₁(λ₁)，e₁(λ_v) 由迹条件确定"),
        Premise("connection_u", expr("(lam_u-lam1)*w_uu1-mu*e1_lam1")),
        Premise("connection_v", expr("(n-p-1)*(lam_v-lam1)*w_vv1+(3+p*mu)*e1_lam1")),
        Solve("w_uu1_solution", "connection_u", "w_uu1"),
        Solve("w_vv1_solution", "connection_v", "w_vv1"),
        Substitute("gauss_connection", "gauss", {"w_uu1": "w_uu1_solution", "w_vv1": "w_vv1_solution"}),
        MatchFixture("gauss_connection", "case2.gauss_connection"),
        EliminateTrace("gauss_reduced", "gauss_connection", "lam_v"),
    ]
    steps += _riccati("u")
    steps.append(Premise("riccati_u", "riccati_u_mu"))
    steps += _riccati("v")
    steps += [
        EliminateTrace("riccati_v", "riccati_v_mu", "lam_v"),
        EliminateLinear("e1e1_free", "riccati_u", "riccati_v", "e1e1_lam1"),
        EliminateLinear("lam1_square_free", "e1e1_free", "gauss_reduced", "e1_lam1", degree=2),
        Resultant("mu_free", "lam1_square_free", "mu_relation", "mu", normalize=True),
        Resultant("final_relation", "mu_free", "norm_without_v", "lam_u", normalize=True),
    ]
    steps += [MatchFixture(name, fixture_id) for name, fixture_id in GENERAL_DISPLAYS]
    if _shows_displays(profile):
        steps += [MatchFixture(name, fixture_id, strict=False) for name, fixture_id in DISPLAYS]
    steps.append(Certify("constancy", "final_relation"))
    return steps
