#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
公共夹具
"""

import pytest

from algebra.symbols import SymbolTable
from algebra.text_format import parse_poly
from core.events import EventBus, set_event_bus
from handlers.fixture_store import FixtureStore


@pytest.fixture
def table():
    return SymbolTable.canonical()


@pytest.fixture
def P(table):
    """在共享符号表上解析多项式文本"""
    return lambda text: parse_poly(text, table)


@pytest.fixture(scope="session")
def fixtures():
    return FixtureStore.load()


@pytest.fixture(autouse=True)
def fresh_event_bus():
    """每个测试使用独立的事件总线"""
    bus = EventBus()
    set_event_bus(bus)
    yield bus
