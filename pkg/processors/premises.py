#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
前提与注释步骤
"""

from typing import Optional

from core.base import BaseStep
from core.context import ReplayContext

from .operands import Operand, OperandStep, describe


class Premise(OperandStep):
    """把基准、内联表达式或已有结果登记为命名前提"""

    kind = "Premise"

    def __init__(self, target: str, source: Operand, label: Optional[str] = None, event_bus=None):
        super().__init__(target, [source], label, event_bus)
        self.source = source

    def process(self, context: ReplayContext) -> str:
        self.store(context, self.value(context, self.source))
        return f"前提 {describe(self.source)}"


class Note(BaseStep):
    """向报告写入一条说明"""

    kind = "Note"

    def __init__(self, text: str, label: Optional[str] = None, event_bus=None):
        super().__init__(target=None, label=label or "note", event_bus=event_bus)
        self.text = text

    def process(self, context: ReplayContext) -> str:
        context.add_note(self.text)
        return self.text
