#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
回放流水线 - 按声明顺序执行步骤
"""

import time
from typing import Callable, List, Optional

from algebra.polynomial import DEFAULT_MAX_TERMS, term_guard
from infrastructure.exceptions import ConfigurationError, CriticalError, StepFailure
from infrastructure.logger import LogManager

from .base import BaseStep, SkipStep, StopPipeline
from .context import ReplayContext, StepFailureInfo, StepRecord
from .events import EventBus, Events, get_event_bus

logger = LogManager.get_logger("bicons.replay")


def exit_code_for(error: Exception) -> int:
    """异常类别 -> 退出码"""
    if isinstance(error, ConfigurationError):
        return 2
    if isinstance(error, CriticalError):
        return 3
    return 1


class Pipeline:
    """
    回放流水线

    步骤之间有数据依赖，因此严格按添加顺序执行；首个失败即停止。
    """

    def __init__(self, name: str = "", event_bus: EventBus = None):
        self.name = name
        self._steps: List[BaseStep] = []
        self._event_bus = event_bus or get_event_bus()
        self._on_error: Optional[Callable] = None

    def add_step(self, step: BaseStep) -> 'Pipeline':
        self._steps.append(step)
        return self

    def get_step(self, name: str) -> Optional[BaseStep]:
        for step in self._steps:
            if step.name == name:
                return step
        return None

    def on_error(self, callback: Callable) -> 'Pipeline':
        """
        设置错误回调

        Args:
            callback: (step_name, error) -> None
        """
        self._on_error = callback
        return self

    def execute(self, context: ReplayContext) -> ReplayContext:
        """
        执行流水线

        Args:
            context: 回放上下文

        Returns:
            同一上下文（failure 记录首个失败）
        """
        self._emit_event(Events.PIPELINE_START, context.pipeline, context.profile.label() if context.profile else "")
        limit = context.config.max_terms if context.config is not None else DEFAULT_MAX_TERMS
        logger.info(f"开始回放 {context.pipeline}（{len(self._steps)} 步）")

        for index, step in enumerate(self._steps):
            record = StepRecord(index=index, name=step.name, kind=step.kind)
            started = time.perf_counter()
            try:
                context.check_deadline(step.name)
                if not step.can_process(context):
                    missing = [n for n in step.inputs if n not in context.values]
                    raise StepFailure("步骤输入未就绪", ", ".join(missing), step_index=index, step_name=step.name)
                if step.should_skip(context):
                    self._emit_event(Events.STEP_SKIP, context.pipeline, step.name)
                    continue

                step.before_process(context)
                with term_guard(limit, f"{context.pipeline}:{step.name}"):
                    record.summary = step.process(context) or ""
                if step.target and step.target in context.values:
                    record.terms = step.term_count(context.values[step.target])
                step.after_process(context)
                logger.debug(f"[{step.kind}] {step.name}: {record.terms} 项")

            except SkipStep as e:
                record.summary = f"跳过: {e.reason}"
                self._emit_event(Events.STEP_SKIP, context.pipeline, step.name)

            except StopPipeline as e:
                record.summary = e.reason
                context.add_note(f"{step.name}: {e.reason}")
                self._finish_record(context, step, record, started)
                break

            except Exception as e:
                step.on_error(context, e)
                record.summary = f"失败: {e}"
                context.failure = StepFailureInfo(
                    step_index=index,
                    step_name=step.name,
                    error_type=type(e).__name__,
                    message=str(e),
                    diagnostic=getattr(e, "diagnostic", ""),
                    exit_code=exit_code_for(e),
                )
                level = logger.error if isinstance(e, CriticalError) else logger.warning
                level(f"{context.pipeline} 第 {index} 步 {step.name} 失败: {e}")
                if self._on_error:
                    try:
                        self._on_error(step.name, e)
                    except Exception:
                        pass
                self._emit_event(Events.PIPELINE_ERROR, context.pipeline, step.name, str(e))
                self._finish_record(context, step, record, started)
                break

            self._finish_record(context, step, record, started)

        context.complete()
        self._emit_event(Events.PIPELINE_COMPLETE, context.pipeline, context)
        return context

    @staticmethod
    def _finish_record(context: ReplayContext, step: BaseStep, record: StepRecord, started: float) -> None:
        record.duration = time.perf_counter() - started
        record.fixture, record.outcome = step.fixture_outcome()
        record.side_conditions = step.take_conditions()
        context.records.append(record)

    @property
    def steps(self) -> List[BaseStep]:
        return self._steps.copy()

    @property
    def step_count(self) -> int:
        return len(self._steps)

    def _emit_event(self, event: str, *args) -> None:
        if self._event_bus:
            self._event_bus.emit(event, *args)

    def __len__(self) -> int:
        return len(self._steps)

    def __iter__(self):
        return iter(self._steps)

    def __repr__(self) -> str:
        return f"<Pipeline {self.name} steps={len(self._steps)}>"


class PipelineBuilder:
    """流水线构建器"""

    def __init__(self, name: str = "", event_bus: EventBus = None):
        self._event_bus = event_bus or get_event_bus()
        self._pipeline = Pipeline(name, self._event_bus)

    @property
    def event_bus(self) -> EventBus:
        return self._event_bus

    def add(self, step: BaseStep) -> 'PipelineBuilder':
        self._pipeline.add_step(step)
        return self

    def add_all(self, *steps: BaseStep) -> 'PipelineBuilder':
        for step in steps:
            self._pipeline.add_step(step)
        return self

    def on_error(self, callback: Callable) -> 'PipelineBuilder':
        self._pipeline.on_error(callback)
        return self

    def build(self) -> Pipeline:
        return self._pipeline

    @classmethod
    def create(cls, name: str = "", event_bus: EventBus = None) -> 'PipelineBuilder':
        return cls(name, event_bus)
