#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
核心层 - 提供回放流水线和事件系统
"""

from .context import FixtureMatch, MatchOutcome, ReplayContext, StepFailureInfo, StepRecord
from .events import EventBus, Events, get_event_bus, set_event_bus
from .base import BaseStep, SkipStep, StopPipeline
from .pipeline import Pipeline, PipelineBuilder, exit_code_for

__all__ = [
    'FixtureMatch',
    'MatchOutcome',
    'ReplayContext',
    'StepFailureInfo',
    'StepRecord',
    'EventBus',
    'Events',
    'get_event_bus',
    'set_event_bus',
    'BaseStep',
    'SkipStep',
    'StopPipeline',
    'Pipeline',
    'PipelineBuilder',
    'exit_code_for',
]
