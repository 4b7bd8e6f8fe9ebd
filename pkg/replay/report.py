#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
验证报告

同一场景与种子的报告逐字节相同：不含时间戳，耗时只在 include_timings 时输出。
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from core.context import ReplayContext
from infrastructure.exceptions import ReportFileError
from infrastructure.utils import format_duration

from .certificate import Certificate, Verdict

SCHEMA_VERSION = 1


def resolve_verdict(context: ReplayContext) -> Certificate:
    """
    最终裁定

    步骤失败 -> Inconclusive；否则严格基准不匹配 -> FixtureMismatch；
    否则取证书的裁定；没有证书 -> Inconclusive。
    """
    label = context.profile.label() if context.profile is not None else ""
    certificate: Optional[Certificate] = context.certificate
    if context.failure is not None:
        reason = f"第 {context.failure.step_index} 步 {context.failure.step_name} 失败: {context.failure.message}"
        if certificate is None:
            return Certificate(context.pipeline, label, Verdict.INCONCLUSIVE, reason=reason,
                               side_conditions=[str(c) for c in context.side_conditions])
        return certificate.with_verdict(Verdict.INCONCLUSIVE, reason)
    mismatches = context.strict_mismatches
    if mismatches:
        reason = "基准不匹配: " + ", ".join(
            f"{m.fixture_id} {m.label}" if m.label else m.fixture_id for m in mismatches)
        if certificate is None:
            return Certificate(context.pipeline, label, Verdict.FIXTURE_MISMATCH, reason=reason,
                               side_conditions=[str(c) for c in context.side_conditions])
        return certificate.with_verdict(Verdict.FIXTURE_MISMATCH, reason)
    if certificate is None:
        return Certificate(context.pipeline, label, Verdict.INCONCLUSIVE, reason="流水线没有签发证书",
                           side_conditions=[str(c) for c in context.side_conditions])
    return certificate


@dataclass
class VerificationReport:
    """单个 (流水线, 场景) 的验证报告"""
    pipeline: str
    profile: Dict[str, Any]
    seed: int
    plan: List[Dict[str, Any]] = field(default_factory=list)
    steps: List[Dict[str, Any]] = field(default_factory=list)
    side_conditions: List[Dict[str, str]] = field(default_factory=list)
    fixture_matches: List[Dict[str, Any]] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)
    certificate: Optional[Certificate] = None
    failure: Optional[Dict[str, Any]] = None
    exit_code: int = 0
    duration: Optional[float] = None
    schema: int = SCHEMA_VERSION

    @property
    def verdict(self) -> Verdict:
        return self.certificate.verdict if self.certificate is not None else Verdict.INCONCLUSIVE

    @property
    def status(self) -> str:
        return self.verdict.value

    @property
    def passed(self) -> bool:
        return self.exit_code == 0

    # ============ 构造 ============

    @classmethod
    def finalize(cls, context: ReplayContext, plan: List[Dict[str, Any]],
                 include_timings: bool = False) -> 'VerificationReport':
        """由执行完毕的上下文生成报告"""
        certificate = resolve_verdict(context)
        if context.failure is not None:
            exit_code = context.failure.exit_code
        else:
            exit_code = 0 if certificate.verdict.accepted else 1
        return cls(
            pipeline=context.pipeline,
            profile=context.profile.to_dict() if context.profile is not None else {},
            seed=context.seed,
            plan=list(plan),
            steps=[r.to_dict(include_timings) for r in context.records],
            side_conditions=[c.to_dict() for c in context.side_conditions],
            fixture_matches=[m.to_dict() for m in context.fixture_matches],
            notes=list(context.notes),
            certificate=certificate,
            failure=context.failure.to_dict() if context.failure is not None else None,
            exit_code=exit_code,
            duration=round(context.processing_time, 3) if include_timings else None,
        )

    # ============ 序列化 ============

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            'schema': self.schema,
            'pipeline': self.pipeline,
            'profile': self.profile,
            'seed': self.seed,
            'status': self.status,
            'exit_code': self.exit_code,
            'plan': self.plan,
            'steps': self.steps,
            'side_conditions': self.side_conditions,
            'fixture_matches': self.fixture_matches,
            'notes': self.notes,
            'certificate': self.certificate.to_dict() if self.certificate is not None else None,
            'failure': self.failure,
        }
        if self.duration is not None:
            data['duration'] = self.duration
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'VerificationReport':
        """
        Raises:
            ReportFileError: 版本不符或字段缺失
        """
        if not isinstance(data, dict):
            raise ReportFileError("报告必须是 JSON 对象")
        if data.get('schema') != SCHEMA_VERSION:
            raise ReportFileError("不支持的报告版本", str(data.get('schema')))
        try:
            return cls(
                pipeline=data['pipeline'],
                profile=data.get('profile') or {},
                seed=int(data.get('seed', 0)),
                plan=list(data.get('plan', [])),
                steps=list(data.get('steps', [])),
                side_conditions=list(data.get('side_conditions', [])),
                fixture_matches=list(data.get('fixture_matches', [])),
                notes=list(data.get('notes', [])),
                certificate=Certificate.from_dict(data.get('certificate')),
                failure=data.get('failure'),
                exit_code=int(data.get('exit_code', 1)),
                duration=data.get('duration'),
            )
        except (KeyError, TypeError, ValueError) as e:
            raise ReportFileError("报告字段无效", str(e)) from e

    # ============ 文本 ============

    def render_text(self) -> str:
        """人类可读的报告"""
        profile = self.certificate.profile if self.certificate is not None else ""
        lines = [
            f"== {self.pipeline} [{profile}] ==",
            f"裁定: {self.status}（退出码 {self.exit_code}，种子 {self.seed}）",
        ]
        if self.certificate is not None:
            if self.certificate.reason:
                lines.append(f"理由: {self.certificate.reason}")
            if self.certificate.witness:
                lines.append(f"见证: {self.certificate.witness}")
            if self.certificate.final_poly:
                final = self.certificate.final_poly
                lines.append(f"最终多项式: {final if len(final) <= 240 else final[:240] + ' …'}")
        lines.append(f"步骤 ({len(self.steps)}/{len(self.plan)}):")
        for step in self.steps:
            line = f"  [{step['index']:>3}] {step['kind']:<18} {step['name']}: {step.get('summary', '')}"
            if 'duration' in step:
                line += f"  ({format_duration(step['duration'])})"
            lines.append(line)
        mismatches = [m for m in self.fixture_matches if m.get('outcome') == 'Mismatch']
        lines.append(f"基准比对: {len(self.fixture_matches)} 次，不匹配 {len(mismatches)} 次")
        for match in mismatches:
            shown = f"{match['fixture']} {match['label']}" if match.get('label') else match['fixture']
            lines.append(f"  ✗ {shown}（{'严格' if match.get('strict') else '参考'}）"
                         f" 差: {match.get('difference', '')}")
            if match.get('cofactor'):
                lines.append(f"    余因子: {match['cofactor']}")
        if self.side_conditions:
            lines.append("附加条件:")
            lines.extend(f"  {c['expr']} ≠ 0  [{c['reason']}]" for c in self.side_conditions)
        if self.notes:
            lines.append("说明:")
            lines.extend(f"  - {note}" for note in self.notes)
        if self.failure is not None:
            lines.append(f"失败: 第 {self.failure['step_index']} 步 {self.failure['step_name']}"
                         f" {self.failure['error_type']}: {self.failure['message']}")
            if self.failure.get('diagnostic'):
                lines.append(f"  诊断: {self.failure['diagnostic']}")
        if self.duration is not None:
            lines.append(f"耗时: {format_duration(self.duration)}")
        return "\n".join(lines)


def aggregate_exit_code(codes: List[int]) -> int:
    """运行的退出码：3 > 2 > 1 > 0"""
    for code in (3, 2, 1):
        if code in codes:
            return code
    return 0


@dataclass
class RunReport:
    """一次运行的全部报告（按计划顺序）"""
    reports: List[VerificationReport] = field(default_factory=list)
    seed: int = 0
    schema: int = SCHEMA_VERSION

    @property
    def exit_code(self) -> int:
        return aggregate_exit_code([r.exit_code for r in self.reports])

    def failures(self) -> List[VerificationReport]:
        return [r for r in self.reports if not r.passed]

    def to_dict(self) -> Dict[str, Any]:
        return {
            'schema': self.schema,
            'seed': self.seed,
            'exit_code': self.exit_code,
            'reports': [r.to_dict() for r in self.reports],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'RunReport':
        """
        Raises:
            ReportFileError: 版本不符或字段缺失
        """
        if not isinstance(data, dict):
            raise ReportFileError("报告必须是 JSON 对象")
        if data.get('schema') != SCHEMA_VERSION:
            raise ReportFileError("不支持的报告版本", str(data.get('schema')))
        if 'reports' not in data:
            # 单条流水线报告
            return cls([VerificationReport.from_dict(data)], int(data.get('seed', 0)))
        reports = data['reports']
        if not isinstance(reports, list):
            raise ReportFileError("reports 必须是列表")
        return cls([VerificationReport.from_dict(r) for r in reports], int(data.get('seed', 0)))

    def render_text(self) -> str:
        passed = sum(1 for r in self.reports if r.passed)
        lines = [f"验证运行: {len(self.reports)} 项，通过 {passed} 项，退出码 {self.exit_code}（种子 {self.seed}）"]
        for report in self.reports:
            lines.append("")
            lines.append(report.render_text())
        failures = self.failures()
        if failures:
            lines.append("")
            lines.append("未通过:")
            for report in failures:
                profile = report.certificate.profile if report.certificate is not None else ""
                lines.append(f"  {report.pipeline} [{profile}]: {report.status}（退出码 {report.exit_code}）")
        return "\n".join(lines)
