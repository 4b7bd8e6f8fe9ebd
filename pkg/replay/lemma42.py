#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
四主曲率情形：混合联络系数与仿射联络

- curvature：Gauss 与 Codazzi 关系关于 (ω_vu^w, ω_uv^w) 的行列式等于 −a₁，
  a₁ ≠ 0 时两者为零
- affine：a₁ = 0 时 (λ_i, ω_ii¹) 共线，ω_ii¹ = α·λ_i + φ，
  由 e₁ 导数得到 α 与 φ 的 Riccati 型方程
"""

from typing import List

from core.base import BaseStep
from geometry.frames import PRINCIPAL, affine_rewrites
from geometry.scenario import ScenarioProfile
from processors.certify import Certify
from processors.checks import AssertCombination, AssertZero, MatchFixture, SpecializeCheck
from processors.combination import CancelFactor, Combine, Solve, Substitute
from processors.differentiation import Differentiate
from processors.elimination import DependencyDet
from processors.operands import expr, fixture
from processors.premises import Premise

from .lemma41 import A1_EXPRESSION


def build_curvature_steps(profile: ScenarioProfile) -> List[BaseStep]:
    """a₁ ≠ 0 时 ω_vu^w = ω_uv^w = 0"""
    return [
        Premise("curvature_relation", fixture("lemma42.curvature_relation")),
        Premise("codazzi_relation", fixture("lemma42.codazzi_relation")),
        Premise("a1_expression", expr(A1_EXPRESSION)),
        MatchFixture("a1_expression", "lemma41.a1"),
        DependencyDet("mixed_determinant", "curvature_relation", "codazzi_relation", "w_vu_w", "w_uv_w"),
        MatchFixture("mixed_determinant", "lemma41.a1"),
        AssertCombination("mixed_determinant", [(-1, "a1_expression")]),
        Certify("established", "mixed_determinant",
                claim="a₁ ≠ 0 时 ω_vu^w = ω_uv^w = 0：两个齐次关系的行列式为 −a₁"),
    ]


def build_affine_steps(profile: ScenarioProfile) -> List[BaseStep]:
    """a₁ = 0 时联络系数是主曲率的仿射函数"""
    steps: List[BaseStep] = [
        Premise("a1_expression", expr(A1_EXPRESSION)),
        Premise("ratio_uv", fixture("lemma42.ratio_uv")),
        Solve("alpha_solution", "ratio_uv", "alpha"),
    ]
    for pair in ("wv", "uw"):
        steps += [
            Premise(f"ratio_{pair}", fixture(f"lemma42.ratio_{pair}")),
            Substitute(f"ratio_{pair}_reduced", f"ratio_{pair}", {"alpha": "alpha_solution"}),
            MatchFixture(f"ratio_{pair}_reduced", "lemma41.a1"),
        ]
    for index in PRINCIPAL:
        name = f"affine_connection_{index}"
        steps += [
            Premise(name, expr(f"w_{index}{index}1-alpha*lam_{index}-phi")),
            Differentiate(f"residual_{index}", name, "e1_affine_opaque", rewrites=[affine_rewrites]),
        ]
    steps += [
        MatchFixture("affine_connection_u", "lemma42.affine_connection"),
        Combine("alpha_residual", [(1, "residual_u"), (-1, "residual_v")]),
        CancelFactor("alpha_derivative", "alpha_residual", expr("lam_u-lam_v"), reason="主曲率互异"),
        MatchFixture("alpha_derivative", "lemma42.alpha_derivative"),
        Combine("phi_derivative", [(1, "residual_u"), (expr("-lam_u"), "alpha_derivative")]),
        MatchFixture("phi_derivative", "lemma42.phi_derivative"),
        Combine("residual_w_check", [(1, "residual_w"), (expr("-lam_w"), "alpha_derivative"),
                                     (-1, "phi_derivative")]),
        SpecializeCheck("residual_w_check"),
        AssertZero("residual_w_check", "第三个仿射关系的导数应由前两个确定"),
    ]
    for index in PRINCIPAL:
        steps += [
            Differentiate(f"closed_residual_{index}", f"affine_connection_{index}", "e1",
                          rewrites=[affine_rewrites]),
            AssertZero(f"closed_residual_{index}", "α、φ 满足 Riccati 型方程时仿射关系应保持"),
        ]
    steps.append(Certify("established", "alpha_derivative",
                         claim="a₁ = 0 时 ω_ii¹ = α·λ_i + φ，且 e₁(α) = αφ + λ₁(1 + α²)，e₁(φ) = φ² + αλ₁φ + c"))
    return steps
