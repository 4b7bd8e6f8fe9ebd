#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
情形 1 子情形 A（a₁ ≠ 0）

混合联络系数为零，三个 Gauss 关系把 ω_vv¹、ω_ww¹ 表示为 ω_uu¹ 的倒数，
代入 e₁ 关系后消去 ω_uu¹ 得到主曲率的四次关系 G。
用迹消去 λ_w 后 G 是 λ_v 的五次式，范数是 λ_v 的二次式；
通用结式在随机特化点上与直接结式比对，最终结式在模约化塔中求值。
"""

from typing import List

from core.base import BaseStep
from geometry.scenario import ScenarioProfile
from processors.certify import Certify
from processors.checks import MatchFixture, TowerCheck, WitnessCheck
from processors.combination import Coefficient, Substitute, Solve
from processors.elimination import EliminateLinear, EliminateTrace, Resultant
from processors.operands import expr, fixture
from processors.premises import Note, Premise
from services.modular_tower import case1a_final

from .case1 import constraint_premises, curvature_premises, e1_relations, tower_bounds

# 每个曲率关系中为零的混合联络系数
MIXED_COEFFICIENTS = {
    "uv": ("w_uv_w", "w_vu_w"),
    "uw": ("w_uw_v", "w_wu_v"),
    "vw": ("w_vw_u", "w_wv_u"),
}

GENERIC_QUINTIC = "v0+v1*lam_v+v2*lam_v^2+v3*lam_v^3+v4*lam_v^4+v5*lam_v^5"
GENERIC_QUADRATIC = "v6+v7*lam_v+v8*lam_v^2"


def _final_tower(context):
    return case1a_final(context.profile, context.poly("quartic_relation"), context.constraints,
                        context.seed, **tower_bounds(context))


def _coefficients(source: str, first: int, count: int) -> List[BaseStep]:
    steps: List[BaseStep] = []
    for k in range(count):
        name = f"v{first + k}"
        steps += [
            Coefficient(name, source, "lam_v", k=k),
            MatchFixture(name, f"case1a.{name}"),
        ]
    return steps


def build_steps(profile: ScenarioProfile) -> List[BaseStep]:
    steps: List[BaseStep] = constraint_premises() + curvature_premises()
    steps.append(Note("a₁ ≠ 0 时混合联络系数 ω_ij^k 全为零（对每组指标重复同一行列式论证）"))
    for pair, (first, second) in MIXED_COEFFICIENTS.items():
        steps += [
            Substitute(f"gauss_{pair}", f"curvature_{pair}", {first: 0, second: 0}),
            MatchFixture(f"gauss_{pair}", f"case1a.gauss_{pair}"),
        ]
    steps += e1_relations("e1")
    steps += [
        Solve("w_vv1_solution", "gauss_uv", "w_vv1"),
        Solve("w_ww1_solution", "gauss_uw", "w_ww1"),
        Substitute("uu1_square", "gauss_vw", {"w_vv1": "w_vv1_solution", "w_ww1": "w_ww1_solution"},
                   reason="ω_uu¹ ≠ 0"),
        MatchFixture("uu1_square", "case1a.uu1_square"),
        Substitute("uu1_square_relation", "e1_free", {"w_vv1": "w_vv1_solution", "w_ww1": "w_ww1_solution"},
                   reason="ω_uu¹ ≠ 0"),
        MatchFixture("uu1_square_relation", "case1a.uu1_square_relation"),
        EliminateLinear("quartic_relation", "uu1_square_relation", "uu1_square", "w_uu1", degree=2),
        MatchFixture("quartic_relation", "case1a.quartic_relation"),

        EliminateTrace("quintic", "quartic_relation", "lam_w"),
        MatchFixture("quintic", "case1a.quintic"),
    ]
    steps += _coefficients("quintic", 0, 6)
    steps += [
        EliminateTrace("norm_without_w", "norm", "lam_w"),
        MatchFixture("norm_without_w", "case1a.norm_without_w"),
    ]
    steps += _coefficients("norm_without_w", 6, 3)
    steps += [
        Premise("l_relation", fixture("case1a.l_relation")),
        Note("L 是 G 的偏导数之商 (3∂G/∂λ_u − p∂G/∂λ₁)(λ_u − λ₁)/(∂G/∂λ₁)"),
        EliminateTrace("quartic_with_l", "l_relation", "lam_w"),
        MatchFixture("quartic_with_l", "case1a.quartic_with_l"),
    ]
    steps += _coefficients("quartic_with_l", 9, 5)
    steps += [
        Resultant("generic_resultant", expr(GENERIC_QUINTIC), expr(GENERIC_QUADRATIC), "lam_v"),
        MatchFixture("generic_resultant", "elimination.generic_resultant"),
        WitnessCheck("quintic", "norm_without_w", "lam_v", survivor="lam1", generic="generic_resultant",
                     coefficients={f"v{k}": f"v{k}" for k in range(9)}, degrees=(5, 2)),
        TowerCheck("case1a_tower", _final_tower, inputs=["quartic_relation"]),
        Certify("tower", artifact="case1a_tower"),
    ]
    return steps
