#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
标架导子

按情形给出 e₁ 与切向导子 e_u 的规则集：

- Riccati 型：e₁(ω_ii¹) = (ω_ii¹)² + c + λ₁λ_i
- Codazzi 型：e_j(λ_i) = (λ_i − λ_j)ω_ii^j
- 联络型：e₁(ω_ii^j) = ω_ii^j ω_ii¹，e_j(ω_ii¹) = ω_ii^j(ω_ii¹ − ω_jj¹)

常数参数在所有导子下为零；β 为零对应第二基本形式范数为常数。
"""

from typing import Dict, Mapping, Optional

from algebra.polynomial import MultiPoly
from algebra.rational import RationalExpr
from algebra.symbols import CONSTANT_PARAMETERS, SymbolTable
from algebra.text_format import parse_poly
from infrastructure.exceptions import UnknownProfile
from infrastructure.logger import LogManager

from .derivation import Derivation, Rule, RuleSpec, constant_rules
from .scenario import CaseTag, ScenarioProfile

logger = LogManager.get_logger("bicons.geometry")

PRINCIPAL = ("u", "v", "w")


def _rules(table: SymbolTable, texts: Mapping[str, str]) -> Dict[str, RuleSpec]:
    return {name: parse_poly(text, table) for name, text in texts.items()}


# ============ 改写集 ============

def codazzi_rewrites(table: SymbolTable) -> Dict[str, MultiPoly]:
    """e_u(λ_v)、e_u(λ_w) 的 Codazzi 形式"""
    return {
        "eu_lam_v": parse_poly("(lam_v - lam_u)*w_vv_u", table),
        "eu_lam_w": parse_poly("(lam_w - lam_u)*w_ww_u", table),
    }


def connection_rewrites(table: SymbolTable) -> Dict[str, MultiPoly]:
    """e_u(ω_vv¹)、e_u(ω_ww¹) 的联络形式"""
    return {
        "eu_w_vv1": parse_poly("w_vv_u*(w_vv1 - w_uu1)", table),
        "eu_w_ww1": parse_poly("w_ww_u*(w_ww1 - w_uu1)", table),
    }


def tangential_rewrites(table: SymbolTable) -> Dict[str, MultiPoly]:
    """Codazzi 与联络改写的并集"""
    return {**codazzi_rewrites(table), **connection_rewrites(table)}


def affine_connection(table: SymbolTable, index: str) -> MultiPoly:
    """ω_ii¹ 的仿射形式 α·λ_i + φ"""
    return parse_poly(f"alpha*lam_{index} + phi", table)


def affine_rewrites(table: SymbolTable) -> Dict[str, MultiPoly]:
    """ω_ii¹ -> α·λ_i + φ"""
    return {f"w_{i}{i}1": affine_connection(table, i) for i in PRINCIPAL}


# ============ 各情形规则 ============

def _four_e1(table: SymbolTable) -> Dict[str, RuleSpec]:
    rules: Dict[str, RuleSpec] = {"lam1": Rule.fresh(), "e1_lam1": Rule.fresh()}
    for i in PRINCIPAL:
        rules[f"lam_{i}"] = parse_poly(f"(lam_{i} - lam1)*w_{i}{i}1", table)
        rules[f"w_{i}{i}1"] = parse_poly(f"w_{i}{i}1^2 + c + lam1*lam_{i}", table)
    rules.update(_rules(table, {"w_vv_u": "w_vv_u*w_vv1", "w_ww_u": "w_ww_u*w_ww1"}))
    return rules


def _four_eu_opaque(table: SymbolTable) -> Dict[str, RuleSpec]:
    rules: Dict[str, RuleSpec] = {"lam1": Rule.zero(), "e1_lam1": Rule.zero(), "a1": Rule.fresh()}
    for i in PRINCIPAL:
        rules[f"lam_{i}"] = Rule.fresh()
        rules[f"w_{i}{i}1"] = Rule.fresh()
    return rules


def _four_eu(table: SymbolTable) -> Dict[str, RuleSpec]:
    rules = _four_eu_opaque(table)
    codazzi = codazzi_rewrites(table)
    connection = connection_rewrites(table)
    rules["lam_v"], rules["lam_w"] = codazzi["eu_lam_v"], codazzi["eu_lam_w"]
    rules["w_vv1"], rules["w_ww1"] = connection["eu_w_vv1"], connection["eu_w_ww1"]
    return rules


def _affine_e1(table: SymbolTable) -> Dict[str, RuleSpec]:
    rules = _four_e1(table)
    for i in PRINCIPAL:
        rules[f"lam_{i}"] = parse_poly(f"(lam_{i} - lam1)*(alpha*lam_{i} + phi)", table)
    rules.update(_rules(table, {
        "alpha": "alpha*phi + lam1*(1 + alpha^2)",
        "phi": "phi^2 + alpha*lam1*phi + c",
    }))
    return rules


def _affine_e1_opaque(table: SymbolTable) -> Dict[str, RuleSpec]:
    rules = _four_e1(table)
    rules["alpha"] = Rule.fresh()
    rules["phi"] = Rule.fresh()
    return rules


def _three_e1(table: SymbolTable, profile: ScenarioProfile) -> Dict[str, RuleSpec]:
    """e₁(λ_u) = μ e₁(λ₁)，e₁(λ_v) 由迹约束确定"""
    other = profile.specialize(parse_poly("n - p - 1", table))
    e1_lam1 = parse_poly("e1_lam1", table)
    lam_v = RationalExpr.quotient(-profile.specialize(parse_poly("(3 + p*mu)", table)) * e1_lam1, other)
    return {
        "lam1": Rule.fresh(),
        "e1_lam1": Rule.fresh(),
        "lam_u": parse_poly("mu*e1_lam1", table),
        "lam_v": lam_v,
        "mu": Rule.fresh(),
    }


def _three_e1_opaque(table: SymbolTable) -> Dict[str, RuleSpec]:
    return {"lam1": Rule.fresh(), "e1_lam1": Rule.fresh(),
            "lam_u": Rule.fresh(), "lam_v": Rule.fresh(), "mu": Rule.fresh()}


def _two_e1(table: SymbolTable, profile: ScenarioProfile) -> Dict[str, RuleSpec]:
    dimension = profile.dimension_poly(table)
    return {
        "lam1": Rule.fresh(),
        "lam": RationalExpr.quotient(parse_poly("-3*e1_lam1", table), dimension - 1),
    }


def _derivation(name: str, table: SymbolTable, rules: Dict[str, RuleSpec],
                alias_prefix: Optional[str] = None) -> Derivation:
    merged: Dict = dict(constant_rules(table, CONSTANT_PARAMETERS))
    for key, spec in rules.items():
        merged[table.register(key)] = spec
    return Derivation(name, table, merged, alias_prefix)


def standard_derivations(profile: ScenarioProfile, table: SymbolTable) -> Dict[str, Derivation]:
    """
    情形对应的导子集合

    Args:
        profile: 场景参数
        table: 共享符号表

    Returns:
        名称 -> 导子

    Raises:
        UnknownProfile: 情形标签未知
    """
    tag = getattr(profile, "case_tag", None)
    if tag in (CaseTag.FOUR_A, CaseTag.FOUR_B):
        derivations = {
            "e1": _derivation("e1", table, _four_e1(table)),
            "eu": _derivation("eu", table, _four_eu(table)),
            "eu_opaque": _derivation("eu_opaque", table, _four_eu_opaque(table), "eu"),
        }
        if tag is CaseTag.FOUR_B:
            derivations["e1"] = _derivation("e1", table, _affine_e1(table))
            derivations["e1_affine_opaque"] = _derivation(
                "e1_affine_opaque", table, _affine_e1_opaque(table), "e1")
    elif tag is CaseTag.THREE:
        derivations = {
            "e1": _derivation("e1", table, _three_e1(table, profile)),
            "e1_opaque": _derivation("e1_opaque", table, _three_e1_opaque(table), "e1"),
        }
    elif tag is CaseTag.TWO:
        derivations = {"e1": _derivation("e1", table, _two_e1(table, profile))}
    else:
        raise UnknownProfile("无法为该场景构造导子", str(tag))
    logger.debug(f"导子集合 {profile.label()}: {', '.join(sorted(derivations))}")
    return derivations
