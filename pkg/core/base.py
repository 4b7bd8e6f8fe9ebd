#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
基础步骤接口
"""

from abc import ABC, abstractmethod
from typing import List, Optional, Sequence, Tuple

from algebra.elimination import SideCondition
from algebra.polynomial import MultiPoly

from .context import ReplayContext, Value
from .events import EventBus, Events, get_event_bus


class BaseStep(ABC):
    """
    流水线步骤

    子类实现 process：读取 inputs 指向的中间结果，
    把结果写入 target（若有），并返回一行摘要。
    """

    kind: str = "Step"

    def __init__(self, target: Optional[str] = None, inputs: Sequence[str] = (),
                 label: Optional[str] = None, event_bus: EventBus = None):
        self.target = target
        self.inputs = tuple(inputs)
        self._label = label
        self._event_bus = event_bus or get_event_bus()
        self._side_conditions: List[SideCondition] = []

    @property
    def name(self) -> str:
        """步骤名称，缺省为输出名"""
        return self._label or self.target or self.kind

    @property
    def description(self) -> str:
        return ""

    @abstractmethod
    def process(self, context: ReplayContext) -> str:
        """
        执行步骤

        Args:
            context: 回放上下文

        Returns:
            摘要文本
        """
        pass

    def can_process(self, context: ReplayContext) -> bool:
        """输入均已就绪"""
        return all(name in context.values for name in self.inputs)

    def should_skip(self, context: ReplayContext) -> bool:
        return False

    def fixture_outcome(self) -> Tuple[Optional[str], Optional[str]]:
        """(基准编号, 比对结果)，只有比对步骤返回非空"""
        return None, None

    # ============ 辅助 ============

    def store(self, context: ReplayContext, value: Value) -> Value:
        """写入 target"""
        if self.target:
            context.set(self.target, value)
        return value

    def record_condition(self, context: ReplayContext, condition: Optional[SideCondition]) -> None:
        """登记非零假设并广播"""
        registered = context.add_side_condition(condition)
        if condition is not None:
            self._side_conditions.append(condition)
        if registered is condition and condition is not None:
            self._emit_event(Events.SIDE_CONDITION, self.name, str(condition))

    def take_conditions(self) -> List[str]:
        """取出本步骤登记的假设文本"""
        texts = [str(c) for c in self._side_conditions]
        self._side_conditions = []
        return texts

    @staticmethod
    def term_count(value) -> int:
        if isinstance(value, MultiPoly):
            return len(value)
        numerator = getattr(value, "numerator", None)
        return len(numerator) if isinstance(numerator, MultiPoly) else 0

    # ============ 钩子 ============

    def before_process(self, context: ReplayContext) -> None:
        self._emit_event(Events.STEP_START, context.pipeline, self.name)

    def after_process(self, context: ReplayContext) -> None:
        self._emit_event(Events.STEP_COMPLETE, context.pipeline, self.name)

    def on_error(self, context: ReplayContext, error: Exception) -> None:
        context.add_error(self.name, str(error))
        self._emit_event(Events.STEP_ERROR, context.pipeline, self.name, str(error))

    def update_status(self, context: ReplayContext, message: str) -> None:
        self._emit_event(Events.STATUS_UPDATE, f"[{context.pipeline}:{self.name}] {message}")

    def _emit_event(self, event: str, *args) -> None:
        if self._event_bus:
            self._event_bus.emit(event, *args)

    def __repr__(self) -> str:
        return f"<{self.__class__.__name__} name='{self.name}'>"


class SkipStep(Exception):
    """抛出表示跳过当前步骤"""
    def __init__(self, reason: str = ""):
        self.reason = reason
        super().__init__(reason)


class StopPipeline(Exception):
    """抛出表示正常结束流水线（例如分支已得出结论）"""
    def __init__(self, reason: str = "", context: ReplayContext = None):
        self.reason = reason
        self.context = context
        super().__init__(reason)
