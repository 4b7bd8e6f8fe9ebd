#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
数值预言机 - 精确有理数随机检验

所有检验都是精确的：非零取值即为非零证明，"看似为零"从不作为零的证明。
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from algebra.elimination import resultant
from algebra.polynomial import MultiPoly, SymbolRef
from infrastructure.exceptions import ExhaustedTrials
from infrastructure.logger import LogManager
from infrastructure.utils import format_rational

logger = LogManager.get_logger("bicons.oracle")


@dataclass(frozen=True)
class SamplePlan:
    """
    采样计划

    分子取自 [−bound, bound]，分母取自 [1, bound]；
    使 forbidden 中任一多项式为零的点被丢弃。
    """
    seed: int
    bound: int = 20
    trials: int = 16
    forbidden: Tuple[MultiPoly, ...] = ()

    def __post_init__(self):
        if self.bound < 2:
            raise ValueError("bound 必须不小于 2")
        if self.trials < 1:
            raise ValueError("trials 必须不小于 1")

    def rng(self) -> np.random.Generator:
        return np.random.default_rng(self.seed)

    def with_forbidden(self, polys: Sequence[MultiPoly]) -> 'SamplePlan':
        return SamplePlan(self.seed, self.bound, self.trials, tuple(self.forbidden) + tuple(polys))

    def to_dict(self) -> Dict[str, int]:
        return {'seed': self.seed, 'bound': self.bound, 'trials': self.trials}


def residual_plan(seed: int, bound: int = 20, trials: int = 16) -> SamplePlan:
    return SamplePlan(seed, bound, trials)


def witness_plan(seed: int, bound: int = 50, trials: int = 64) -> SamplePlan:
    return SamplePlan(seed, bound, trials)


def draw_rational(rng: np.random.Generator, bound: int) -> Fraction:
    numerator = int(rng.integers(-bound, bound + 1))
    denominator = int(rng.integers(1, bound + 1))
    return Fraction(numerator, denominator)


def sample_point(names: Sequence[str], plan: SamplePlan, rng: np.random.Generator) -> Dict[str, Fraction]:
    """按名称顺序抽取一个点（顺序固定保证可复现）"""
    return {name: draw_rational(rng, plan.bound) for name in names}


def _violates(point: Dict[str, Fraction], forbidden: Sequence[MultiPoly]) -> bool:
    for poly in forbidden:
        names = set(poly.symbol_names())
        if names <= set(point) and poly.evaluate({k: point[k] for k in names}) == 0:
            return True
    return False


# ============ 零检验 ============

@dataclass
class ZeroTestResult:
    """零检验结果：proved_nonzero 为真时 witness/value 构成非零证明"""
    proved_nonzero: bool
    witness: Dict[str, Fraction] = field(default_factory=dict)
    value: Fraction = Fraction(0)
    trials: int = 0

    def describe(self) -> str:
        if not self.proved_nonzero:
            return f"PlausiblyZero（{self.trials} 次采样）"
        point = ", ".join(f"{k}={format_rational(v)}" for k, v in sorted(self.witness.items()))
        return f"ProvedNonzero: {point} -> {format_rational(self.value)}"


def zero_test(e: MultiPoly, plan: SamplePlan) -> ZeroTestResult:
    """
    在随机有理点上检验 e 是否为零

    Returns:
        找到非零值时返回 ProvedNonzero，否则 PlausiblyZero
    """
    if e.is_zero():
        return ZeroTestResult(False, trials=0)
    if e.is_constant():
        return ZeroTestResult(True, {}, e.constant_value(), 1)
    names = sorted(e.symbol_names())
    rng = plan.rng()
    for trial in range(1, plan.trials + 1):
        point = sample_point(names, plan, rng)
        if _violates(point, plan.forbidden):
            continue
        value = e.evaluate(point)
        if value != 0:
            return ZeroTestResult(True, point, value, trial)
    return ZeroTestResult(False, trials=plan.trials)


# ============ gcd 预言机 ============

Univariate = Sequence[Union[int, Fraction]]


def _trim(coefficients: Sequence[Fraction]) -> List[Fraction]:
    result = [Fraction(c) for c in coefficients]
    while result and result[-1] == 0:
        result.pop()
    return result


def _remainder(a: List[Fraction], b: List[Fraction]) -> List[Fraction]:
    a = list(a)
    while len(a) >= len(b) and a:
        factor = a[-1] / b[-1]
        shift = len(a) - len(b)
        for i, c in enumerate(b):
            a[shift + i] -= factor * c
        a = _trim(a)
    return a


def univariate_gcd(f: Univariate, g: Univariate) -> List[Fraction]:
    """有理数上的 Euclid 算法，系数从低次到高次"""
    a, b = _trim(f), _trim(g)
    while b:
        a, b = b, _remainder(a, b)
    if not a:
        return []
    lead = a[-1]
    return [c / lead for c in a]


def gcd_oracle(f: Univariate, g: Univariate) -> bool:
    """
    f、g 是否有非常数公因子

    Args:
        f: 整系数（或有理系数）单变量多项式，系数从低次到高次
        g: 同上
    """
    return len(univariate_gcd(f, g)) >= 2


# ============ 特化见证 ============

@dataclass(frozen=True)
class TowerStage:
    """
    结式塔的一层

    first/second 为多项式或上一层结果的名称。
    """
    name: str
    first: Union[MultiPoly, str]
    second: Union[MultiPoly, str]
    symbol: str


@dataclass
class SpecializationWitness:
    """特化见证"""
    assignment: Dict[str, Fraction]
    survivor: str
    survivor_value: Fraction
    value: Fraction
    final_poly: MultiPoly
    trials: int

    def describe(self) -> str:
        point = ", ".join(f"{k}={format_rational(v)}" for k, v in sorted(self.assignment.items()))
        return (f"{point}; {self.survivor}={format_rational(self.survivor_value)} -> "
                f"{format_rational(self.value)}（第 {self.trials} 次采样）")


def _stage_inputs(stage: TowerStage, results: Dict[str, MultiPoly]) -> Tuple[MultiPoly, MultiPoly]:
    first = results[stage.first] if isinstance(stage.first, str) else stage.first
    second = results[stage.second] if isinstance(stage.second, str) else stage.second
    return first, second


def evaluate_tower(tower: Sequence[TowerStage], assignment: Dict[str, Fraction]) -> Optional[MultiPoly]:
    """
    在给定赋值下逐层计算结式

    Returns:
        最后一层结果；某层首项系数同时消失时返回 None
    """
    results: Dict[str, MultiPoly] = {}
    for stage in tower:
        generic = _stage_inputs(stage, results)
        first, second = (specialize(poly, assignment) for poly in generic)
        # 首项系数消失时特化与结式不可交换
        for before, after in zip(generic, (first, second)):
            if after.is_zero() or after.degree(stage.symbol) != before.degree(stage.symbol):
                return None
        if first.degree(stage.symbol) < 1 and second.degree(stage.symbol) < 1:
            return None
        results[stage.name] = resultant(first, second, stage.symbol)
    return results[tower[-1].name]


def specialize(poly: MultiPoly, assignment: Dict[str, Fraction]) -> MultiPoly:
    """只代入 poly 中出现的符号"""
    values = {k: v for k, v in assignment.items() if poly.contains(k)}
    return poly.partial_evaluate(values) if values else poly


def _free_symbols(tower: Sequence[TowerStage], survivor: str) -> List[str]:
    eliminated = {stage.symbol for stage in tower}
    names = set()
    for stage in tower:
        for side in (stage.first, stage.second):
            if isinstance(side, MultiPoly):
                names.update(side.symbol_names())
    return sorted(names - eliminated - {survivor})


def specialization_witness(tower: Sequence[TowerStage], survivor: str, plan: SamplePlan,
                           leading: Sequence[MultiPoly] = ()) -> SpecializationWitness:
    """
    用特化见证结式塔的最终结果非零

    Args:
        tower: 各层结式，最后一层给出关于 survivor 的多项式
        survivor: 保留的变量
        plan: 采样计划
        leading: 需在采样点处非零的首项系数

    Raises:
        ExhaustedTrials: 采样用尽仍未得到非零值
    """
    if not tower:
        raise ExhaustedTrials("结式塔为空", survivor)
    names = _free_symbols(tower, survivor)
    rng = plan.rng()
    forbidden = tuple(plan.forbidden) + tuple(leading)
    for trial in range(1, plan.trials + 1):
        assignment = sample_point(names, plan, rng)
        survivor_value = draw_rational(rng, plan.bound)
        if _violates(assignment, forbidden):
            continue
        final = evaluate_tower(tower, assignment)
        if final is None or final.is_zero():
            continue
        value = final.evaluate({survivor: survivor_value}) if final.contains(survivor) else final.constant_value()
        if value == 0:
            continue
        logger.debug(f"特化见证：第 {trial} 次采样成功")
        return SpecializationWitness(assignment, survivor, survivor_value, value, final, trial)
    raise ExhaustedTrials("采样用尽仍未找到非零见证", f"{plan.trials} 次, seed={plan.seed}")
