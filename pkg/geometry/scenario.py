#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
场景设定

每种情形的重数、迹约束与范数约束。平均曲率统一写成 λ₁ = −nH/2，
因此迹约束右端 3nH/2 化为 −3λ₁。
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from algebra.elimination import substitute_linear
from algebra.polynomial import MultiPoly, SymbolRef
from algebra.symbols import SymbolTable
from algebra.text_format import parse_poly
from infrastructure.exceptions import NotLinearInTarget, ProfileError
from infrastructure.utils import format_rational, parse_optional_rational


class CaseTag(Enum):
    """主曲率个数与分支"""
    FOUR_A = "FourA"      # 四个不同主曲率，a₁ ≠ 0
    FOUR_B = "FourB"      # 四个不同主曲率，a₁ = 0（仿射联络）
    THREE = "Three"
    TWO = "Two"

    @classmethod
    def parse(cls, text: str) -> 'CaseTag':
        for tag in cls:
            if tag.value.lower() == str(text).lower():
                return tag
        raise ProfileError("未知情形标签", str(text))


# 流水线 -> 情形
PIPELINE_CASES: Dict[str, CaseTag] = {
    "lemma4_1": CaseTag.FOUR_A,
    "lemma4_2a": CaseTag.FOUR_A,
    "lemma4_2b": CaseTag.FOUR_B,
    "case1A": CaseTag.FOUR_A,
    "case1B": CaseTag.FOUR_B,
    "case2": CaseTag.THREE,
    "case3": CaseTag.TWO,
}

DEFAULT_MULTIPLICITIES: Tuple[Tuple[int, int, int], ...] = ((1, 1, 1), (2, 1, 1), (1, 2, 3))
DEFAULT_CURVATURES: Tuple[int, ...] = (-1, 0, 1)
DEFAULT_CASE2: Tuple[Tuple[int, int], ...] = ((5, 2), (6, 3))
# 展示式给出的具体参数 (n, p, c)，另作为一个默认场景
DISPLAY_CASE2: Tuple[int, int, int] = (4, 2, 0)
DEFAULT_NORM = Fraction(7)


@dataclass(frozen=True)
class ScenarioProfile:
    """
    情形参数

    未给定的参数保持为符号。FourA/FourB 的重数为 (p, q, r)，Three 为 (p,)
    且 dimension 给出 n，Two 没有重数。
    """
    case_tag: CaseTag
    multiplicities: Optional[Tuple[int, ...]] = None
    curvature: Optional[Fraction] = None
    norm: Optional[Fraction] = None
    dimension: Optional[int] = None

    def __post_init__(self):
        expected = {CaseTag.FOUR_A: 3, CaseTag.FOUR_B: 3, CaseTag.THREE: 1, CaseTag.TWO: 0}[self.case_tag]
        if self.multiplicities is not None:
            if len(self.multiplicities) != expected:
                raise ProfileError(f"{self.case_tag.value} 需要 {expected} 个重数",
                                   str(list(self.multiplicities)))
            if any(int(m) < 1 for m in self.multiplicities):
                raise ProfileError("重数必须不小于 1", str(list(self.multiplicities)))
        if self.dimension is not None:
            if self.dimension < 2:
                raise ProfileError("维数 n 必须不小于 2", str(self.dimension))
            if self.case_tag is CaseTag.THREE and self.multiplicities is not None:
                if self.dimension - self.multiplicities[0] - 1 < 1:
                    raise ProfileError("需要 n − p − 1 ≥ 1", f"n={self.dimension}, p={self.multiplicities[0]}")
            if self.case_tag in (CaseTag.FOUR_A, CaseTag.FOUR_B) and self.multiplicities is not None:
                if self.dimension != sum(self.multiplicities) + 1:
                    raise ProfileError("维数必须等于 p + q + r + 1", str(self.dimension))

    # ============ 查询 ============

    @property
    def is_concrete(self) -> bool:
        """重数、曲率与范数均已给定"""
        needs_multiplicities = self.case_tag is not CaseTag.TWO
        return ((self.multiplicities is not None or not needs_multiplicities)
                and self.curvature is not None and self.norm is not None
                and (self.case_tag not in (CaseTag.THREE, CaseTag.TWO) or self.dimension is not None))

    @property
    def n(self) -> Optional[int]:
        """维数（可由重数推出时给出）"""
        if self.dimension is not None:
            return self.dimension
        if self.case_tag in (CaseTag.FOUR_A, CaseTag.FOUR_B) and self.multiplicities is not None:
            return sum(self.multiplicities) + 1
        return None

    def assignment(self) -> Dict[str, Fraction]:
        """已给定参数的取值"""
        values: Dict[str, Fraction] = {}
        if self.multiplicities is not None:
            names = ("p", "q", "r") if len(self.multiplicities) == 3 else ("p",)
            values.update({name: Fraction(m) for name, m in zip(names, self.multiplicities)})
        if self.curvature is not None:
            values["c"] = Fraction(self.curvature)
        if self.norm is not None:
            values["beta"] = Fraction(self.norm)
        if self.n is not None:
            values["n"] = Fraction(self.n)
        return values

    def specialize(self, poly: MultiPoly) -> MultiPoly:
        """代入已给定的参数"""
        values = {name: value for name, value in self.assignment().items() if name in poly.table}
        return poly.partial_evaluate(values) if values else poly

    def dimension_poly(self, table: SymbolTable) -> MultiPoly:
        """n 作为多项式：已知时为常数，四曲率情形为 p + q + r + 1"""
        if self.n is not None:
            return MultiPoly.constant(table, self.n)
        if self.case_tag in (CaseTag.FOUR_A, CaseTag.FOUR_B):
            return parse_poly("p + q + r + 1", table)
        return MultiPoly.variable(table, "n")

    def label(self) -> str:
        """紧凑的可读标签"""
        parts = [self.case_tag.value]
        if self.multiplicities is not None:
            parts.append("mult=" + ",".join(str(m) for m in self.multiplicities))
        if self.dimension is not None:
            parts.append(f"n={self.dimension}")
        if self.curvature is not None:
            parts.append(f"c={format_rational(Fraction(self.curvature))}")
        if self.norm is not None:
            parts.append(f"beta={format_rational(Fraction(self.norm))}")
        return " ".join(parts)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'case_tag': self.case_tag.value,
            'multiplicities': list(self.multiplicities) if self.multiplicities is not None else None,
            'curvature': format_rational(Fraction(self.curvature)) if self.curvature is not None else None,
            'norm': format_rational(Fraction(self.norm)) if self.norm is not None else None,
            'dimension': self.dimension,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'ScenarioProfile':
        """
        Raises:
            ProfileError: 字段缺失或取值非法
        """
        if 'case_tag' not in data:
            raise ProfileError("场景缺少 case_tag", str(data))
        multiplicities = data.get('multiplicities')
        try:
            return cls(
                case_tag=CaseTag.parse(data['case_tag']),
                multiplicities=tuple(int(m) for m in multiplicities) if multiplicities is not None else None,
                curvature=parse_optional_rational(data.get('curvature')),
                norm=parse_optional_rational(data.get('norm')),
                dimension=int(data['dimension']) if data.get('dimension') is not None else None,
            )
        except (TypeError, ValueError) as e:
            raise ProfileError("场景参数无效", str(e)) from e


@dataclass
class ConstraintSet:
    """迹约束、范数约束与附加关系（均视为 = 0）"""
    trace: MultiPoly
    norm: MultiPoly
    extras: List[MultiPoly] = field(default_factory=list)


# ============ 约束 ============

_CONSTRAINT_TEXT: Dict[CaseTag, Tuple[str, str]] = {
    CaseTag.FOUR_A: ("p*lam_u + q*lam_v + r*lam_w + 3*lam1",
                     "lam1^2 + p*lam_u^2 + q*lam_v^2 + r*lam_w^2 - beta"),
    CaseTag.FOUR_B: ("p*lam_u + q*lam_v + r*lam_w + 3*lam1",
                     "lam1^2 + p*lam_u^2 + q*lam_v^2 + r*lam_w^2 - beta"),
    CaseTag.THREE: ("p*lam_u + (n - p - 1)*lam_v + 3*lam1",
                    "p*lam_u^2 + (n - p - 1)*lam_v^2 + lam1^2 - beta"),
    CaseTag.TWO: ("(n - 1)*lam + 3*lam1",
                  "(n - 1)*lam^2 + lam1^2 - beta"),
}


def build_constraints(profile: ScenarioProfile, table: SymbolTable) -> ConstraintSet:
    """
    情形的迹约束与范数约束

    四曲率情形另附维数关系 n − p − q − r − 1（n 为符号时）。
    """
    trace_text, norm_text = _CONSTRAINT_TEXT[profile.case_tag]
    trace = profile.specialize(parse_poly(trace_text, table))
    norm = profile.specialize(parse_poly(norm_text, table))
    extras: List[MultiPoly] = []
    if profile.case_tag in (CaseTag.FOUR_A, CaseTag.FOUR_B):
        relation = profile.specialize(parse_poly("n - p - q - r - 1", table))
        if not relation.is_zero():
            extras.append(relation)
    return ConstraintSet(trace=trace, norm=norm, extras=extras)


def eliminate_by_trace(e: MultiPoly, target: SymbolRef, constraints: ConstraintSet) -> MultiPoly:
    """
    用迹约束消去 target

    Raises:
        NotLinearInTarget: 迹约束关于 target 不是一次的
    """
    trace = constraints.trace
    if trace.degree(target) != 1:
        raise NotLinearInTarget("迹约束关于目标变量不是一次的", str(target))
    return substitute_linear(e, target, trace).normalize()


def scalar_curvature(n: int, c, H, beta) -> Fraction:
    """ρ = n(n−1)c + n²H² + β"""
    if n < 2:
        raise ProfileError("维数 n 必须不小于 2", str(n))
    c, H, beta = Fraction(c), Fraction(H), Fraction(beta)
    return n * (n - 1) * c + n * n * H * H + beta


def scalar_curvature_identity(table: SymbolTable) -> MultiPoly:
    """ρ − n(n−1)c − n²H² − β"""
    return parse_poly("rho - n*(n - 1)*c - n^2*H^2 - beta", table)


# ============ 默认场景 ============

def default_profiles(pipeline: str) -> List[ScenarioProfile]:
    """
    流水线的默认场景矩阵

    Raises:
        ProfileError: 未知流水线
    """
    tag = PIPELINE_CASES.get(pipeline)
    if tag is None:
        raise ProfileError("未知流水线", pipeline)
    if pipeline in ("lemma4_1", "lemma4_2a", "lemma4_2b"):
        return [ScenarioProfile(tag)]
    if pipeline in ("case1A", "case1B"):
        return [ScenarioProfile(tag, multiplicities=m, curvature=Fraction(c), norm=DEFAULT_NORM)
                for m in DEFAULT_MULTIPLICITIES for c in DEFAULT_CURVATURES]
    if pipeline == "case2":
        profiles = [ScenarioProfile(tag, multiplicities=(p,), dimension=n, curvature=Fraction(c), norm=DEFAULT_NORM)
                    for n, p in DEFAULT_CASE2 for c in DEFAULT_CURVATURES]
        n, p, c = DISPLAY_CASE2
        profiles.append(ScenarioProfile(tag, multiplicities=(p,), dimension=n, curvature=Fraction(c),
                                        norm=DEFAULT_NORM))
        return profiles
    return [ScenarioProfile(tag, norm=DEFAULT_NORM)]


def profile_for(pipeline: str, multiplicities: Optional[List[int]] = None,
                curvature: Optional[str] = None, norm: Optional[str] = None,
                case2: Optional[List[int]] = None, dimension: Optional[int] = None) -> ScenarioProfile:
    """
    由命令行参数构造单个场景

    Raises:
        ProfileError: 参数与流水线不匹配
    """
    tag = PIPELINE_CASES.get(pipeline)
    if tag is None:
        raise ProfileError("未知流水线", pipeline)
    c = parse_optional_rational(curvature)
    beta = parse_optional_rational(norm)
    if tag is CaseTag.THREE:
        if case2 is not None:
            if len(case2) != 2:
                raise ProfileError("case2 参数必须是 n,p", str(case2))
            return ScenarioProfile(tag, multiplicities=(case2[1],), dimension=case2[0], curvature=c, norm=beta)
        return ScenarioProfile(tag, curvature=c, norm=beta, dimension=dimension)
    if tag is CaseTag.TWO:
        return ScenarioProfile(tag, curvature=c, norm=beta, dimension=dimension)
    return ScenarioProfile(tag, multiplicities=tuple(multiplicities) if multiplicities else None,
                           curvature=c, norm=beta)
