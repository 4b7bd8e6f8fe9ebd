#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
情形 3（两个主曲率，重数 1 与 n − 1）

迹条件给出 λ = −3λ₁/(n − 1)，代入范数得到 λ₁ 的二次关系，于是 λ₁ 为常数。
另外回放数量曲率恒等式并在一组具体参数处检查取值。
"""

from fractions import Fraction
from typing import List

from core.base import BaseStep
from geometry.scenario import ScenarioProfile, scalar_curvature, scalar_curvature_identity
from processors.certify import Certify
from processors.checks import AssertZero, MatchFixture, SpecializeCheck
from processors.combination import Specialize
from processors.elimination import EliminateTrace
from processors.premises import Note, Premise

SPOT_PARAMETERS = {"n": 4, "c": 1, "H": 0, "beta": 5}


def _spot_assignment() -> dict:
    values = {name: Fraction(value) for name, value in SPOT_PARAMETERS.items()}
    values["rho"] = scalar_curvature(SPOT_PARAMETERS["n"], values["c"], values["H"], values["beta"])
    return values


def build_steps(profile: ScenarioProfile) -> List[BaseStep]:
    spot = _spot_assignment()
    return [
        Premise("trace", lambda context: context.constraints.trace),
        MatchFixture("trace", "case3.trace"),
        Premise("norm", lambda context: context.constraints.norm),
        MatchFixture("norm", "case3.norm"),
        EliminateTrace("constraint", "norm", "lam"),
        MatchFixture("constraint", "case3.constraint"),
        SpecializeCheck("constraint", expect_zero=False),

        Premise("scalar_curvature", lambda context: context.profile.specialize(
            scalar_curvature_identity(context.table))),
        MatchFixture("scalar_curvature", "scalar_curvature"),
        Premise("scalar_curvature_generic", lambda context: scalar_curvature_identity(context.table)),
        Specialize("scalar_curvature_spot", "scalar_curvature_generic", spot),
        AssertZero("scalar_curvature_spot", "数量曲率恒等式在抽查点不成立"),
        Note(f"n=4, c=1, H=0, β=5 时 ρ = {spot['rho']}"),

        Certify("constancy", "constraint"),
    ]
