#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
情形 1（四个主曲率）两个子情形共用的前提与 e₁ 关系
"""

from fractions import Fraction
from typing import List

from core.base import BaseStep
from processors.checks import MatchFixture
from processors.combination import Combine
from processors.differentiation import Differentiate
from processors.operands import expr, fixture
from processors.premises import Premise

CURVATURE_PAIRS = ("uv", "uw", "vw")


def constraint_premises() -> List[BaseStep]:
    return [
        Premise("trace", lambda context: context.constraints.trace),
        MatchFixture("trace", "frame.trace"),
        Premise("norm", lambda context: context.constraints.norm),
        MatchFixture("norm", "frame.norm"),
    ]


def curvature_premises() -> List[BaseStep]:
    """Gauss 方程给出的三个曲率关系"""
    return [Premise(f"curvature_{pair}", fixture(f"case1.curvature_{pair}")) for pair in CURVATURE_PAIRS]


def e1_relations(derivation: str) -> List[BaseStep]:
    """
    迹与范数的 e₁ 导数，以及两者组合出的不含 e₁(λ₁) 的关系

    derivation 须把 ω_ii¹ 保留为符号（四曲率的 e1 或仿射情形的 e1_affine_opaque）。
    """
    return [
        Differentiate("e1_trace", "trace", derivation),
        MatchFixture("e1_trace", "case1.e1_trace"),
        Differentiate("e1_norm", "norm", derivation, scale=Fraction(1, 2)),
        MatchFixture("e1_norm", "case1.e1_norm"),
        Combine("e1_free", [(3, "e1_norm"), (expr("-lam1"), "e1_trace")]),
        MatchFixture("e1_free", "case1.e1_free"),
    ]


def tower_bounds(context) -> dict:
    """结式塔的采样范围（取自运行配置）"""
    config = context.config
    if config is None:
        return {}
    return {"bound": config.witness_bound, "trials": config.witness_trials}
