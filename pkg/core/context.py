#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
回放上下文 - 在流水线步骤之间传递中间结果
"""

import time
from dataclasses import dataclass, field
from enum import Enum
from typing import TYPE_CHECKING, Any, Dict, List, Optional, Union

from algebra.elimination import SideCondition
from algebra.polynomial import MultiPoly
from algebra.rational import RationalExpr
from algebra.symbols import SymbolTable
from algebra.text_format import format_poly
from infrastructure.exceptions import BudgetExceeded, ReplayToolError

if TYPE_CHECKING:
    from geometry.derivation import Derivation
    from geometry.scenario import ConstraintSet, ScenarioProfile
    from infrastructure.config import RunConfig

Value = Union[MultiPoly, RationalExpr]


class MatchOutcome(Enum):
    """基准比对结果"""
    EXACT = "Exact"
    UP_TO_UNIT_CONTENT = "UpToUnitContent"
    MISMATCH = "Mismatch"


@dataclass
class FixtureMatch:
    """一次基准比对"""
    fixture_id: str
    step: str
    outcome: MatchOutcome
    strict: bool = True
    difference: Optional[str] = None
    cofactor: Optional[str] = None
    label: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.outcome is not MatchOutcome.MISMATCH

    def to_dict(self) -> Dict[str, Any]:
        data = {
            'fixture': self.fixture_id,
            'step': self.step,
            'outcome': self.outcome.value,
            'strict': self.strict,
        }
        if self.difference is not None:
            data['difference'] = self.difference
        if self.cofactor is not None:
            data['cofactor'] = self.cofactor
        if self.label is not None:
            data['label'] = self.label
        return data


@dataclass
class StepRecord:
    """单个步骤的执行记录"""
    index: int
    name: str
    kind: str
    summary: str = ""
    terms: int = 0
    fixture: Optional[str] = None
    outcome: Optional[str] = None
    side_conditions: List[str] = field(default_factory=list)
    duration: float = 0.0

    def to_dict(self, include_timings: bool = False) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            'index': self.index,
            'name': self.name,
            'kind': self.kind,
            'summary': self.summary,
            'terms': self.terms,
        }
        if self.fixture is not None:
            data['fixture'] = self.fixture
            data['outcome'] = self.outcome
        if self.side_conditions:
            data['side_conditions'] = list(self.side_conditions)
        if include_timings:
            data['duration'] = round(self.duration, 3)
        return data


@dataclass
class StepFailureInfo:
    """首个失败步骤"""
    step_index: int
    step_name: str
    error_type: str
    message: str
    diagnostic: str = ""
    exit_code: int = 1

    def to_dict(self) -> Dict[str, Any]:
        return {
            'step_index': self.step_index,
            'step_name': self.step_name,
            'error_type': self.error_type,
            'message': self.message,
            'diagnostic': self.diagnostic,
        }


@dataclass
class ReplayContext:
    """
    回放上下文

    values 保存命名的中间结果；步骤只通过名称引用先前的结果。
    """

    # ============ 输入信息 ============
    pipeline: str = ""
    profile: Optional['ScenarioProfile'] = None
    table: Optional[SymbolTable] = None
    config: Optional['RunConfig'] = None
    fixtures: Any = None
    derivations: Dict[str, 'Derivation'] = field(default_factory=dict)
    constraints: Optional['ConstraintSet'] = None
    seed: int = 0

    # ============ 中间结果 ============
    values: Dict[str, Value] = field(default_factory=dict)
    artifacts: Dict[str, Any] = field(default_factory=dict)
    records: List[StepRecord] = field(default_factory=list)

    # ============ 账本 ============
    side_conditions: List[SideCondition] = field(default_factory=list)
    fixture_matches: List[FixtureMatch] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)
    certificate: Any = None
    failure: Optional[StepFailureInfo] = None

    # ============ 错误和警告 ============
    errors: List[str] = field(default_factory=list)
    warnings: List[str] = field(default_factory=list)

    # ============ 时间 ============
    start_time: float = field(default_factory=time.time)
    end_time: Optional[float] = None
    deadline: Optional[float] = None

    # ============ 中间结果 ============

    def set(self, name: str, value: Value) -> None:
        self.values[name] = value

    def get(self, name: str) -> Value:
        """
        Raises:
            ReplayToolError: 名称未定义
        """
        if name not in self.values:
            raise ReplayToolError("引用了未定义的中间结果", name)
        return self.values[name]

    def poly(self, name: str) -> MultiPoly:
        """
        Raises:
            ReplayToolError: 名称未定义或不是多项式
        """
        value = self.get(name)
        if isinstance(value, RationalExpr):
            if not value.is_polynomial():
                raise ReplayToolError("中间结果带分母", name)
            return value.numerator
        return value

    def fixture(self, fixture_id: str) -> MultiPoly:
        """按当前场景特化后的基准多项式"""
        poly = self.fixtures.get(fixture_id, self.table)
        return self.profile.specialize(poly) if self.profile is not None else poly

    # ============ 账本 ============

    def add_side_condition(self, condition: Optional[SideCondition]) -> Optional[SideCondition]:
        """登记非零假设（按规范文本去重）"""
        if condition is None:
            return None
        key = format_poly(condition.expr.normalize())
        for existing in self.side_conditions:
            if format_poly(existing.expr.normalize()) == key:
                return existing
        self.side_conditions.append(condition)
        return condition

    def add_note(self, note: str) -> None:
        self.notes.append(note)

    def add_error(self, step_name: str, error: str):
        self.errors.append(f"[{step_name}] {error}")

    def add_warning(self, step_name: str, warning: str):
        self.warnings.append(f"[{step_name}] {warning}")

    @property
    def has_errors(self) -> bool:
        return len(self.errors) > 0

    @property
    def strict_mismatches(self) -> List[FixtureMatch]:
        return [m for m in self.fixture_matches if m.strict and not m.passed]

    # ============ 时间 ============

    def check_deadline(self, step_name: str) -> None:
        """
        Raises:
            BudgetExceeded: 超出墙钟预算
        """
        if self.deadline is not None and time.time() > self.deadline:
            raise BudgetExceeded("流水线超出时间预算", f"{self.pipeline} @ {step_name}", step=step_name)

    @property
    def processing_time(self) -> float:
        """处理耗时（秒）"""
        if self.end_time:
            return self.end_time - self.start_time
        return time.time() - self.start_time

    def complete(self):
        """标记处理完成"""
        self.end_time = time.time()

    def to_dict(self) -> Dict[str, Any]:
        """调试用摘要"""
        return {
            'pipeline': self.pipeline,
            'profile': self.profile.label() if self.profile else None,
            'values': sorted(self.values),
            'steps': len(self.records),
            'side_conditions': [str(c) for c in self.side_conditions],
            'fixture_matches': [m.to_dict() for m in self.fixture_matches],
            'errors': self.errors,
            'warnings': self.warnings,
            'processing_time': self.processing_time,
        }

    @classmethod
    def create(cls, pipeline: str, profile: 'ScenarioProfile', table: SymbolTable,
               config: 'RunConfig' = None, fixtures: Any = None,
               derivations: Dict[str, 'Derivation'] = None,
               constraints: 'ConstraintSet' = None, seed: int = 0) -> 'ReplayContext':
        """
        创建回放上下文

        Args:
            pipeline: 流水线名称
            profile: 场景参数
            table: 共享符号表
            config: 运行配置（budget_secs 决定截止时间）
            fixtures: 基准存储
            derivations: 导子集合
            constraints: 约束集合
            seed: 随机种子
        """
        context = cls(pipeline=pipeline, profile=profile, table=table, config=config,
                      fixtures=fixtures, derivations=dict(derivations or {}),
                      constraints=constraints, seed=seed)
        if config is not None and config.budget_secs and config.budget_secs > 0:
            context.deadline = context.start_time + float(config.budget_secs)
        return context
