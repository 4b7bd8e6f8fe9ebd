#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
基础设施层 - 配置、日志、异常与通用工具
"""

from .config import PIPELINE_NAMES, ConfigManager, RunConfig
from .logger import Logger, LogManager
from .exceptions import (
    AlgebraError,
    ConfigurationError,
    CriticalError,
    ReplayToolError,
    ResourceGuardError,
    StepFailure,
)
from .utils import format_duration, format_rational, parse_rational

__all__ = [
    'PIPELINE_NAMES',
    'RunConfig',
    'ConfigManager',
    'Logger',
    'LogManager',
    'ReplayToolError',
    'CriticalError',
    'ConfigurationError',
    'AlgebraError',
    'ResourceGuardError',
    'StepFailure',
    'format_duration',
    'format_rational',
    'parse_rational',
]
