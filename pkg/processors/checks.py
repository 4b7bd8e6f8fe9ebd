#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
检查步骤 - 基准比对、零断言、组合断言、数值抽查、特化见证、模约化塔
"""

from typing import Any, Callable, Mapping, Optional, Sequence, Tuple

from algebra.elimination import check_combination, formal_degree_factor
from algebra.polynomial import MultiPoly
from algebra.text_format import format_poly
from core.base import SkipStep
from core.context import FixtureMatch, MatchOutcome, ReplayContext
from core.events import Events
from infrastructure.exceptions import ExhaustedTrials, StepFailure
from infrastructure.logger import LogManager
from services.numeric_oracle import (TowerStage, residual_plan, specialization_witness, specialize, witness_plan,
                                     zero_test)

from .operands import Operand, OperandStep, describe

logger = LogManager.get_logger("bicons.checks")

DIAGNOSTIC_TERMS = 12


def _preview(poly: MultiPoly, limit: int = DIAGNOSTIC_TERMS) -> str:
    """前若干项的文本"""
    if len(poly) <= limit:
        return format_poly(poly)
    head = MultiPoly(dict(poly.sorted_terms()[:limit]), poly.table)
    return f"{format_poly(head)} + …（共 {len(poly)} 项）"


def compare(expected: MultiPoly, actual: MultiPoly) -> Tuple[MatchOutcome, Optional[MultiPoly], Optional[MultiPoly]]:
    """
    比较计算结果与基准

    Returns:
        (结果, 规范化差, 余因子)；后两项只在不匹配时给出
    """
    if expected == actual:
        return MatchOutcome.EXACT, None, None
    normalized_expected = expected.normalize()
    normalized_actual = actual.normalize()
    if normalized_expected == normalized_actual:
        return MatchOutcome.UP_TO_UNIT_CONTENT, None, None
    difference = normalized_actual - normalized_expected
    cofactor = None
    if not expected.is_zero() and not actual.is_zero():
        cofactor = actual.try_divide(expected)
    return MatchOutcome.MISMATCH, difference, cofactor


class MatchFixture(OperandStep):
    """
    与基准比对

    strict 的不匹配记入账本但不终止流水线，最终裁定为 FixtureMismatch。
    """

    kind = "MatchFixture"

    def __init__(self, source: Operand, fixture_id: str, strict: bool = True,
                 label: Optional[str] = None, event_bus=None):
        super().__init__(None, [source], label or f"match:{fixture_id}", event_bus)
        self.source = source
        self.fixture_id = fixture_id
        self.strict = strict
        self._outcome: Optional[MatchOutcome] = None

    def process(self, context: ReplayContext) -> str:
        actual = self.poly(context, self.source)
        expected = context.fixture(self.fixture_id)
        outcome, difference, cofactor = compare(expected, actual)
        self._outcome = outcome
        match = FixtureMatch(
            fixture_id=self.fixture_id,
            step=self.name,
            outcome=outcome,
            strict=self.strict,
            difference=_preview(difference) if difference is not None else None,
            cofactor=format_poly(cofactor) if cofactor is not None else None,
            label=context.fixtures.label(self.fixture_id),
        )
        context.fixture_matches.append(match)
        if outcome is MatchOutcome.MISMATCH:
            shown = f"{self.fixture_id} {match.label}" if match.label else self.fixture_id
            logger.warning(f"{context.pipeline}: {describe(self.source)} 与基准 {shown} 不一致")
            context.add_warning(self.name, f"基准 {self.fixture_id} 不一致")
            self._emit_event(Events.FIXTURE_MISMATCHED, context.pipeline, self.fixture_id, match.difference)
        else:
            self._emit_event(Events.FIXTURE_MATCHED, context.pipeline, self.fixture_id, outcome.value)
        return f"{describe(self.source)} ~ {self.fixture_id}: {outcome.value}"

    def fixture_outcome(self) -> Tuple[Optional[str], Optional[str]]:
        return self.fixture_id, self._outcome.value if self._outcome is not None else None


class AssertZero(OperandStep):
    """断言表达式恒为零"""

    kind = "AssertZero"

    def __init__(self, source: Operand, message: str = "表达式应恒为零",
                 label: Optional[str] = None, event_bus=None):
        super().__init__(None, [source], label or f"zero:{describe(source)}", event_bus)
        self.source = source
        self.message = message

    def process(self, context: ReplayContext) -> str:
        value = self.poly(context, self.source)
        if not value.is_zero():
            raise StepFailure(self.message, describe(self.source), step_name=self.name,
                              diagnostic=_preview(value))
        return f"{describe(self.source)} = 0"


class AssertCombination(OperandStep):
    """断言 target = Σ multiplier·premise（相差单位容量）"""

    kind = "AssertCombination"

    def __init__(self, target: Operand, parts: Sequence[Tuple[Operand, Operand]],
                 label: Optional[str] = None, event_bus=None):
        operands = [target] + [op for pair in parts for op in pair]
        super().__init__(None, operands, label or f"combination:{describe(target)}", event_bus)
        self.expected = target
        self.parts = list(parts)

    def process(self, context: ReplayContext) -> str:
        target = self.poly(context, self.expected)
        parts = [(self.poly(context, m), self.poly(context, p)) for m, p in self.parts]
        if not check_combination(target, parts):
            residual = target
            for multiplier, premise in parts:
                residual = residual - multiplier * premise
            raise StepFailure("组合不成立", describe(self.expected), step_name=self.name,
                              diagnostic=_preview(residual.normalize()))
        return f"{describe(self.expected)} = " + " + ".join(f"({describe(m)})·{describe(p)}" for m, p in self.parts)


class SpecializeCheck(OperandStep):
    """
    随机有理点上的数值抽查

    expect_zero 为真时任一非零取值即失败；为假时要求找到非零见证。
    未给出 bound、trials 时取运行配置中的残差采样参数。
    """

    kind = "SpecializeCheck"

    def __init__(self, source: Operand, expect_zero: bool = True, bound: Optional[int] = None, trials: Optional[int] = None,
                 label: Optional[str] = None, event_bus=None):
        super().__init__(None, [source], label or f"spot:{describe(source)}", event_bus)
        self.source = source
        self.expect_zero = expect_zero
        self.bound = bound
        self.trials = trials

    def process(self, context: ReplayContext) -> str:
        value = self.poly(context, self.source)
        config = context.config
        bound = self.bound or (config.residual_bound if config is not None else 20)
        trials = self.trials or (config.residual_trials if config is not None else 16)
        result = zero_test(value, residual_plan(context.seed, bound, trials))
        if self.expect_zero and result.proved_nonzero:
            raise StepFailure("数值抽查发现非零值", describe(self.source), step_name=self.name,
                              diagnostic=result.describe())
        if not self.expect_zero and not result.proved_nonzero:
            raise StepFailure("数值抽查未找到非零见证", describe(self.source), step_name=self.name,
                              diagnostic=result.describe())
        return result.describe()


class TowerCheck(OperandStep):
    """
    调用模约化塔计算并把结果存入 context.artifacts

    场景参数不完整时跳过；computation 接收上下文并返回带 side_conditions 的结果。
    """

    kind = "TowerCheck"

    def __init__(self, target: str, computation: Callable[[ReplayContext], Any],
                 inputs: Sequence[str] = (), label: Optional[str] = None, event_bus=None):
        super().__init__(None, list(inputs), label or target, event_bus)
        self.artifact = target
        self.computation = computation

    def should_skip(self, context: ReplayContext) -> bool:
        return context.profile is None or not context.profile.is_concrete

    def process(self, context: ReplayContext) -> str:
        if self.should_skip(context):
            raise SkipStep("场景参数不完整")
        result = self.computation(context)
        context.artifacts[self.artifact] = result
        for condition in getattr(result, "side_conditions", []):
            self.record_condition(context, condition)
        for note in getattr(result, "notes", []):
            context.add_note(note)
        describe_result = getattr(result, "describe", None)
        return describe_result() if callable(describe_result) else str(result)



class WitnessCheck(OperandStep):
    """
    特化见证：first、second 关于 symbol 的结式在随机特化点上仍非零

    除 survivor 外的自由符号取随机有理数。给出 generic 时，把其中的系数符号
    按 coefficients 代入同一点上的取值，结果必须与直接计算的结式一致。
    generic 按形式次数 degrees 排布；特化前的多项式已经降次时（例如首项系数恒为零），
    直接结式先乘上降次因子再比较。
    """

    kind = "WitnessCheck"

    def __init__(self, first: Operand, second: Operand, symbol: str, survivor: str,
                 generic: Optional[Operand] = None, coefficients: Optional[Mapping[str, Operand]] = None,
                 degrees: Optional[Tuple[int, int]] = None,
                 label: Optional[str] = None, event_bus=None):
        self.coefficients = dict(coefficients or {})
        operands = [first, second, *([generic] if generic is not None else []), *self.coefficients.values()]
        super().__init__(None, operands, label or f"witness:{symbol}", event_bus)
        self.first = first
        self.second = second
        self.symbol = symbol
        self.survivor = survivor
        self.generic = generic
        self.degrees = degrees

    def process(self, context: ReplayContext) -> str:
        first, second = self.poly(context, self.first), self.poly(context, self.second)
        stage = TowerStage(self.symbol, first, second, self.symbol)
        config = context.config
        plan = (witness_plan(context.seed, config.witness_bound, config.witness_trials)
                if config is not None else witness_plan(context.seed))
        try:
            witness = specialization_witness([stage], self.survivor, plan)
        except ExhaustedTrials as e:
            raise StepFailure("特化后的结式始终为零", str(e), step_name=self.name) from e

        if self.generic is None:
            return witness.describe()
        values = {name: self.poly(context, op).partial_evaluate(witness.assignment)
                  for name, op in self.coefficients.items()}
        expected = self.poly(context, self.generic).substitute(values)
        direct = witness.final_poly
        note = ""
        if self.degrees is not None:
            m, n = self.degrees
            if (first.degree(self.symbol), second.degree(self.symbol)) != (m, n):
                factor = formal_degree_factor(specialize(first, witness.assignment),
                                              specialize(second, witness.assignment), self.symbol, m, n)
                direct = factor * direct
                note = f"；形式次数 ({m}, {n}) 降为 ({first.degree(self.symbol)}, {second.degree(self.symbol)})"
                logger.debug(f"{self.name}: 降次因子 {_preview(factor)}")
        difference = expected - direct
        if not difference.is_zero():
            raise StepFailure("通用结式的特化与直接结式不一致", describe(self.generic), step_name=self.name,
                              diagnostic=_preview(difference))
        return witness.describe() + note
