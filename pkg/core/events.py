#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
事件系统 - 回放进度通知

步骤、流水线与运行器通过总线广播进度；命令行在 --verbose 下订阅并写日志。
多个工作线程共用同一条总线。
"""

import threading
import time
from collections import defaultdict, deque
from typing import Any, Callable, Deque, Dict, List, NamedTuple, Optional, Tuple

from infrastructure.logger import LogManager

logger = LogManager.get_logger("bicons.events")


class Events:
    """事件名称"""

    # ============ 运行 ============
    RUN_START = 'run:start'
    RUN_COMPLETE = 'run:complete'

    # ============ 流水线 ============
    PIPELINE_START = 'pipeline:start'
    PIPELINE_COMPLETE = 'pipeline:complete'
    PIPELINE_ERROR = 'pipeline:error'

    # ============ 步骤 ============
    STEP_START = 'step:start'
    STEP_COMPLETE = 'step:complete'
    STEP_ERROR = 'step:error'
    STEP_SKIP = 'step:skip'

    # ============ 基准与证书 ============
    FIXTURE_MATCHED = 'fixture:matched'
    FIXTURE_MISMATCHED = 'fixture:mismatched'
    SIDE_CONDITION = 'side_condition:recorded'
    CERTIFICATE_ISSUED = 'certificate:issued'

    STATUS_UPDATE = 'status:update'


class TraceEntry(NamedTuple):
    """总线记下的一次广播"""
    event: str
    args: Tuple[Any, ...]
    at: float


class EventBus:
    """
    发布/订阅总线

    监听器抛出的异常只写日志，不会中断回放；最近的广播保留在有界的轨迹里，
    便于测试和排查时查看某条流水线经历了哪些步骤。
    """

    def __init__(self, trace_size: int = 256):
        self._listeners: Dict[str, List[Callable[..., Any]]] = defaultdict(list)
        self._trace: Deque[TraceEntry] = deque(maxlen=trace_size)
        self._lock = threading.Lock()

    def on(self, event: str, callback: Callable[..., Any]) -> 'EventBus':
        with self._lock:
            self._listeners[event].append(callback)
        return self

    def emit(self, event: str, *args: Any) -> 'EventBus':
        with self._lock:
            self._trace.append(TraceEntry(event, args, time.monotonic()))
            listeners = list(self._listeners.get(event, ()))

        for callback in listeners:
            try:
                callback(*args)
            except Exception as e:
                logger.error(f"事件监听器出错 {event}: {e}")
        return self

    def trace(self, event: Optional[str] = None, pipeline: Optional[str] = None) -> List[TraceEntry]:
        """
        最近的广播

        Args:
            event: 只要这一种事件
            pipeline: 只要第一个参数为该流水线名的事件
        """
        with self._lock:
            entries = list(self._trace)
        if event is not None:
            entries = [e for e in entries if e.event == event]
        if pipeline is not None:
            entries = [e for e in entries if e.args and e.args[0] == pipeline]
        return entries

    def clear(self):
        with self._lock:
            self._listeners.clear()
            self._trace.clear()


_global_event_bus: Optional[EventBus] = None
_global_lock = threading.Lock()


def get_event_bus() -> EventBus:
    global _global_event_bus
    with _global_lock:
        if _global_event_bus is None:
            _global_event_bus = EventBus()
        return _global_event_bus


def set_event_bus(event_bus: Optional[EventBus]):
    """替换全局总线（测试里每个用例一条新总线）"""
    global _global_event_bus
    with _global_lock:
        _global_event_bus = event_bus
