#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
四主曲率情形：切向联络系数为零

由迹与范数的 e_u 导数得到关于 (ω_vv^u, ω_ww^u) 的齐次线性方程组，
对 e₁ 求导、消去 a₁ 与 e_u(ω_uu¹) 后得到第二个方程；
两方程的系数行列式化为三个主曲率两两之差的乘积，故方程组只有零解。

a₁ = 0 的分支单独处理：此时 ω_vv¹ = ω_ww¹，再求导得 λ₁(λ_v − λ_w) = 0。
"""

from fractions import Fraction
from typing import List

from core.base import BaseStep
from geometry.frames import codazzi_rewrites, tangential_rewrites
from geometry.scenario import ScenarioProfile
from processors.certify import Certify
from processors.checks import AssertCombination, AssertZero, MatchFixture
from processors.combination import CancelFactor, Coefficient, Combine, Solve, Substitute
from processors.differentiation import Differentiate
from processors.elimination import DependencyDet, EliminateLinear, EliminateTrace
from processors.operands import expr
from processors.premises import Note, Premise

A1_EXPRESSION = "(lam_w-lam_u)*w_vv1+(lam_u-lam_v)*w_ww1+(lam_v-lam_w)*w_uu1"


def _trace(context):
    return context.constraints.trace


def _norm(context):
    return context.constraints.norm


def _connection_system() -> List[BaseStep]:
    """迹与范数 -> 关于 (ω_vv^u, ω_ww^u) 的第一个方程"""
    return [
        Premise("trace", _trace),
        MatchFixture("trace", "frame.trace"),
        Premise("norm", _norm),
        MatchFixture("norm", "frame.norm"),
        Differentiate("eu_trace", "trace", "eu_opaque"),
        MatchFixture("eu_trace", "lemma41.eu_trace"),
        Differentiate("eu_e1_lam1", expr("e1_lam1"), "eu"),
        AssertZero("eu_e1_lam1", "e_u 与 e₁ 在 λ₁ 上不可交换"),
        Differentiate("eu_norm", "norm", "eu_opaque", scale=Fraction(1, 2)),
        MatchFixture("eu_norm", "lemma41.eu_norm"),
        Combine("eu_norm_reduced", [(expr("lam_u"), "eu_trace"), (-1, "eu_norm")]),
        MatchFixture("eu_norm_reduced", "lemma41.eu_norm_reduced"),
        Substitute("connection_system", "eu_norm_reduced", codazzi_rewrites),
        MatchFixture("connection_system", "lemma41.connection_system"),
    ]


def _a1_relation() -> List[BaseStep]:
    """e₁ 导数给出第二个方程，其系数余子式与 a₁ 的定义合成 a₁ 关系"""
    return [
        Differentiate("connection_system_e1", "connection_system", "e1"),
        MatchFixture("connection_system_e1", "lemma41.connection_system_e1"),
        DependencyDet("codazzi_minor", "connection_system", "connection_system_e1", "w_vv_u", "w_ww_u",
                      divisor=expr("q*r*(lam_v-lam_u)*(lam_w-lam_u)"),
                      reason="重数为正且主曲率互异"),
        MatchFixture("codazzi_minor", "lemma41.codazzi_minor"),
        Premise("a1_expression", expr(A1_EXPRESSION)),
        MatchFixture("a1_expression", "lemma41.a1"),
        Combine("a1_definition", [(1, "a1_expression"), (-1, expr("a1"))]),
        Combine("a1_relation", [(1, "codazzi_minor"), (expr("-2*(lam1-lam_u)"), "a1_definition")]),
        MatchFixture("a1_relation", "lemma41.a1_relation"),
    ]


def _vanishing_branch() -> List[BaseStep]:
    """a₁ = 0：ω_vv¹ = ω_ww¹ 与相异性矛盾"""
    return [
        Substitute("a1_vanishing", "a1_relation", {"a1": 0}),
        CancelFactor("equal_connection", "a1_vanishing", expr("-3*(lam_u-lam_v)*(lam_u-lam_w)"),
                     reason="主曲率互异"),
        MatchFixture("equal_connection", "lemma41.equal_connection"),
        Differentiate("equal_connection_e1", "equal_connection", "e1",
                      rewrites=[{"w_ww1": expr("w_vv1")}]),
        MatchFixture("equal_connection_e1", "lemma41.equal_connection_e1"),
        Note("a₁ = 0 时 ω_vv¹ = ω_ww¹，求导得 λ₁(λ_v − λ_w) = 0，与 λ₁ ≠ 0 及 λ_v ≠ λ_w 矛盾"),
    ]


def _tangential_derivatives() -> List[BaseStep]:
    """a₁ 关系、a₁ 定义与 e₁ 迹的 e_u 导数"""
    return [
        Differentiate("eu_a1_relation_raw", "a1_relation", "eu_opaque"),
        EliminateLinear("eu_a1_relation", "eu_a1_relation_raw", "eu_trace", "eu_lam_u"),
        MatchFixture("eu_a1_relation", "lemma41.eu_a1_relation"),
        Substitute("eu_a1_connection", "eu_a1_relation", tangential_rewrites),
        MatchFixture("eu_a1_connection", "lemma41.eu_a1_connection"),
        Coefficient("f1", "eu_a1_connection", "w_vv_u", negate=True),
        MatchFixture("f1", "lemma41.f1"),
        Coefficient("f2", "eu_a1_connection", "w_ww_u", negate=True),
        MatchFixture("f2", "lemma41.f2"),

        Differentiate("eu_a1_expression", "a1_definition", "eu_opaque"),
        EliminateLinear("eu_a1_definition_raw", "eu_a1_expression", "eu_trace", "eu_lam_u"),
        Substitute("eu_a1_definition", "eu_a1_definition_raw", tangential_rewrites),
        MatchFixture("eu_a1_definition", "lemma41.eu_a1_definition"),
        Coefficient("f3", "eu_a1_definition", "w_vv_u"),
        MatchFixture("f3", "lemma41.f3"),
        Coefficient("f4", "eu_a1_definition", "w_ww_u"),
        MatchFixture("f4", "lemma41.f4"),

        Differentiate("e1_trace", "trace", "e1"),
        MatchFixture("e1_trace", "lemma41.e1_trace"),
        Differentiate("eu_e1_trace_raw", "e1_trace", "eu_opaque"),
        EliminateLinear("eu_e1_trace_eliminated", "eu_e1_trace_raw", "eu_trace", "eu_lam_u"),
        Substitute("eu_e1_trace", "eu_e1_trace_eliminated", tangential_rewrites),
        MatchFixture("eu_e1_trace", "lemma41.eu_e1_trace"),
        Coefficient("f5_scaled", "eu_e1_trace", "w_vv_u"),
        CancelFactor("f5", "f5_scaled", expr("q"), reason="重数为正"),
        MatchFixture("f5", "lemma41.f5"),
        Coefficient("f6_scaled", "eu_e1_trace", "w_ww_u"),
        CancelFactor("f6", "f6_scaled", expr("r"), reason="重数为正"),
        MatchFixture("f6", "lemma41.f6"),
    ]


def _second_system() -> List[BaseStep]:
    """消去 e_u(ω_uu¹) 与 e_u(a₁)，再消去 ω_uu¹ 与 a₁"""
    steps: List[BaseStep] = [
        EliminateLinear("eu_uu1_free", "eu_a1_definition", "eu_e1_trace", "eu_w_uu1"),
        MatchFixture("eu_uu1_free", "lemma41.eu_uu1_free"),
        EliminateLinear("eu_a1_free", "eu_a1_connection", "eu_uu1_free", "eu_a1"),
        MatchFixture("eu_a1_free", "lemma41.eu_a1_free"),
        Coefficient("f7", "eu_a1_free", "w_vv_u"),
        MatchFixture("f7", "lemma41.f7"),
        Coefficient("f8", "eu_a1_free", "w_ww_u"),
        MatchFixture("f8", "lemma41.f8"),
        Solve("w_uu1_solution", "a1_definition", "w_uu1"),
        Solve("a1_solution", "a1_relation", "a1"),
    ]
    for index, coefficient, factor in (("1", "f7", "(lam_u-lam_v)^2*(w_vv1-w_ww1)"),
                                       ("2", "f8", "(lam_u-lam_w)^2*(w_vv1-w_ww1)")):
        reduced = f"{coefficient}_reduced"
        relation = f"g{index}_relation"
        steps += [
            Substitute(reduced, coefficient, {"w_uu1": "w_uu1_solution"}),
            MatchFixture(reduced, f"lemma41.{reduced}"),
            Substitute(relation, reduced, {"a1": "a1_solution"}),
            MatchFixture(relation, f"lemma41.{relation}"),
            CancelFactor(f"g{index}", relation, expr(factor), reason="主曲率互异且 ω_vv¹ ≠ ω_ww¹",
                         normalize=True),
            MatchFixture(f"g{index}", f"lemma41.g{index}"),
        ]
    steps += [
        Combine("g_system", [(expr("(lam_u-lam_v)^2*w_vv_u"), "g1"), (expr("-(lam_u-lam_w)^2*w_ww_u"), "g2")]),
        MatchFixture("g_system", "lemma41.g_system"),
        DependencyDet("g_combination", "connection_system", "g_system", "w_vv_u", "w_ww_u",
                      divisor=expr("(lam_v-lam_u)^2*(lam_w-lam_u)^2"), reason="主曲率互异", normalize=True),
        MatchFixture("g_combination", "lemma41.g_combination"),
        Combine("g_combination_tripled", [(3, "g_combination")]),
        AssertCombination("g_combination_tripled", [(expr("q"), "g2"), (expr("r"), "g1")]),
    ]
    return steps


def _forced_constancy() -> List[BaseStep]:
    """消去 λ_w 后与范数组合，得到 e_u(λ_u) = 0，于是方程组的行列式为相异性乘积"""
    steps: List[BaseStep] = [
        EliminateTrace("norm_without_w", "norm", "lam_w"),
        MatchFixture("norm_without_w", "lemma41.norm_without_w"),
        EliminateTrace("g_combination_without_w", "g_combination", "lam_w"),
        MatchFixture("g_combination_without_w", "lemma41.g_combination_without_w"),
    ]
    for k in range(3):
        steps += [
            Coefficient(f"b{k}", "g_combination_without_w", "lam_v", k=k),
            MatchFixture(f"b{k}", f"lemma41.b{k}"),
        ]
    steps += [
        Combine("norm_difference", [(1, "g_combination_without_w"),
                                    (expr("-(3*p+2*q+2*r)"), "norm_without_w")],
                divisor=expr("r"), reason="重数为正"),
        MatchFixture("norm_difference", "lemma41.norm_difference"),
        Differentiate("eu_lam_u_forced", "norm_difference", "eu_opaque"),
        MatchFixture("eu_lam_u_forced", "lemma41.eu_lam_u_forced"),
        CancelFactor("eu_lam_u_vanishes", "eu_lam_u_forced", expr("2*p*(p+q+r)*(lam1-lam_u)"),
                     reason="λ₁ ≠ λ_u"),
        Substitute("eu_trace_without_u", "eu_trace", {"eu_lam_u": 0}),
        Substitute("eu_trace_reduced", "eu_trace_without_u", codazzi_rewrites),
        MatchFixture("eu_trace_reduced", "lemma41.eu_trace_reduced"),
        DependencyDet("distinctness", "connection_system", "eu_trace_reduced", "w_vv_u", "w_ww_u",
                      divisor=expr("q*r"), reason="重数为正"),
        MatchFixture("distinctness", "lemma41.distinctness"),
        Certify("contradiction", "distinctness",
                claim="ω_vv^u = ω_ww^u = 0：齐次方程组的系数行列式是主曲率两两之差的乘积",
                factors=[expr("lam_v-lam_u"), expr("lam_w-lam_u"), expr("lam_v-lam_w")]),
    ]
    return steps


def build_steps(profile: ScenarioProfile) -> List[BaseStep]:
    """四主曲率情形的联络系数引理"""
    return (_connection_system() + _a1_relation() + _vanishing_branch()
            + _tangential_derivatives() + _second_system() + _forced_constancy())
