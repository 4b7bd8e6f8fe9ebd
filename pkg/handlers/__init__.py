#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
文件处理层 - 基准文件与报告文件
"""

from .fixture_store import DEFAULT_FIXTURES_PATH, FixtureStore
from .report_writer import ReportWriter

__all__ = [
    'DEFAULT_FIXTURES_PATH',
    'FixtureStore',
    'ReportWriter',
]
