#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
情形 1 子情形 B（a₁ = 0）

联络系数为 ω_ii¹ = α·λ_i + φ。Gauss 关系的加权和给出二次仿射关系，
e₁ 关系给出三次仿射关系；两者连同迹与范数交给模约化塔。
"""

from typing import List

from core.base import BaseStep
from geometry.frames import affine_rewrites
from geometry.scenario import ScenarioProfile
from processors.certify import Certify
from processors.checks import MatchFixture, TowerCheck
from processors.combination import Combine, Substitute
from processors.elimination import EliminateTrace
from processors.operands import expr, fixture
from processors.premises import Premise
from services.modular_tower import case1b_final

from .case1 import constraint_premises, curvature_premises, e1_relations, tower_bounds


def _final_tower(context):
    return case1b_final(context.profile, context.poly("affine_quadratic"), context.poly("affine_cubic"),
                        context.constraints, context.seed, **tower_bounds(context))


def build_steps(profile: ScenarioProfile) -> List[BaseStep]:
    steps: List[BaseStep] = constraint_premises() + curvature_premises()
    steps += [
        Premise("connection_products", fixture("case1.connection_products")),
        Combine("quadratic_relation", [
            (expr("-p*q"), "curvature_uv"),
            (expr("-p*r"), "curvature_uw"),
            (expr("-q*r"), "curvature_vw"),
            (expr("2*p*q*r"), "connection_products"),
        ]),
        MatchFixture("quadratic_relation", "case1b.quadratic_relation"),
    ]
    steps += e1_relations("e1_affine_opaque")
    steps += [
        Substitute("affine_quadratic", "quadratic_relation", affine_rewrites),
        MatchFixture("affine_quadratic", "case1b.affine_quadratic"),
        Substitute("affine_cubic", "e1_free", affine_rewrites),
        MatchFixture("affine_cubic", "case1b.affine_cubic"),

        # Σ p_i λ_i 与 Σ p_i λ_i² 由迹和范数给出，Σ p_i = n − 1
        Substitute("affine_e1_trace", "e1_trace", affine_rewrites),
        Combine("e1_lam1_relation", [
            (1, "affine_e1_trace"),
            (expr("-alpha"), "norm"),
            (expr("lam1*alpha-phi"), "trace"),
            (expr("-lam1*phi"), expr("n-p-q-r-1")),
        ]),
        MatchFixture("e1_lam1_relation", "case1b.e1_lam1_relation"),

        EliminateTrace("norm_without_w", "norm", "lam_w"),
        MatchFixture("norm_without_w", "case1b.norm_without_w"),
        EliminateTrace("affine_quadratic_without_w", "affine_quadratic", "lam_w"),
        MatchFixture("affine_quadratic_without_w", "case1b.affine_quadratic_without_w"),
        EliminateTrace("affine_cubic_without_w", "affine_cubic", "lam_w"),
        MatchFixture("affine_cubic_without_w", "case1b.affine_cubic_without_w"),

        TowerCheck("case1b_tower", _final_tower, inputs=["affine_quadratic", "affine_cubic"]),
        Certify("tower", artifact="case1b_tower"),
    ]
    return steps
