#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
证书与裁定
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional

from infrastructure.exceptions import ReportFileError


class Verdict(Enum):
    """回放裁定"""
    FORCES_CONSTANCY = "ForcesConstancy"
    ESTABLISHED = "Established"
    FIXTURE_MISMATCH = "FixtureMismatch"
    INCONCLUSIVE = "Inconclusive"

    @property
    def accepted(self) -> bool:
        """退出码 0 所接受的裁定"""
        return self in (Verdict.FORCES_CONSTANCY, Verdict.ESTABLISHED)

    @classmethod
    def parse(cls, text: str) -> 'Verdict':
        for verdict in cls:
            if verdict.value == text:
                return verdict
        raise ReportFileError("未知的裁定", str(text))


@dataclass
class Certificate:
    """
    回放证书

    witness 为求值点与非零值，或符号形式的非零首项系数。
    """
    pipeline: str
    profile: str
    verdict: Verdict
    final_poly: str = ""
    witness: str = ""
    reason: str = ""
    side_conditions: List[str] = field(default_factory=list)

    def with_verdict(self, verdict: Verdict, reason: str) -> 'Certificate':
        """改写裁定（保留原证据）"""
        return Certificate(self.pipeline, self.profile, verdict, self.final_poly, self.witness,
                           reason, list(self.side_conditions))

    def to_dict(self) -> Dict[str, Any]:
        return {
            'pipeline': self.pipeline,
            'profile': self.profile,
            'verdict': self.verdict.value,
            'final_poly': self.final_poly,
            'witness': self.witness,
            'reason': self.reason,
            'side_conditions': list(self.side_conditions),
        }

    @classmethod
    def from_dict(cls, data: Optional[Dict[str, Any]]) -> Optional['Certificate']:
        """
        Raises:
            ReportFileError: 字段缺失
        """
        if data is None:
            return None
        try:
            return cls(
                pipeline=data['pipeline'],
                profile=data.get('profile', ''),
                verdict=Verdict.parse(data['verdict']),
                final_poly=data.get('final_poly', ''),
                witness=data.get('witness', ''),
                reason=data.get('reason', ''),
                side_conditions=list(data.get('side_conditions', [])),
            )
        except KeyError as e:
            raise ReportFileError("证书缺少字段", str(e)) from e
