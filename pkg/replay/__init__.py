#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
回放层 - 证书、报告与各条证明流水线

流水线注册表在 replay.registry 中，需要时单独导入。
"""

from .certificate import Certificate, Verdict
from .report import RunReport, VerificationReport, aggregate_exit_code, resolve_verdict

__all__ = [
    'Certificate',
    'Verdict',
    'RunReport',
    'VerificationReport',
    'aggregate_exit_code',
    'resolve_verdict',
]
