#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
证书步骤

四种方式：
- constancy：最终多项式只含 λ₁（或 H）与常数参数且非零
- tower：模约化塔给出非零值
- contradiction：约去相异性因子后剩下非零常数
- established：引理的结论在已登记的假设下成立
"""

from typing import Optional, Sequence

from algebra.elimination import SideCondition, cancel_factor
from algebra.symbols import CONSTANT_PARAMETERS
from algebra.text_format import format_poly
from core.context import ReplayContext
from core.events import Events
from infrastructure.exceptions import IdenticallyZero, ReplayToolError, StepFailure
from infrastructure.logger import LogManager
from replay.certificate import Certificate, Verdict
from services.numeric_oracle import witness_plan, zero_test

from .operands import Operand, OperandStep, describe

logger = LogManager.get_logger("bicons.certify")

MODES = ("constancy", "tower", "contradiction", "established")


class Certify(OperandStep):
    """签发证书并写入 context.certificate"""

    kind = "Certify"

    def __init__(self, mode: str, source: Optional[Operand] = None, claim: str = "",
                 factors: Sequence[Operand] = (), artifact: Optional[str] = None, survivor: str = "lam1",
                 label: Optional[str] = None, event_bus=None):
        if mode not in MODES:
            raise ValueError(f"未知的证书方式: {mode}")
        operands = ([source] if source is not None else []) + list(factors)
        super().__init__(None, operands, label or "certify", event_bus)
        self.mode = mode
        self.source = source
        self.claim = claim
        self.factors = list(factors)
        self.artifact = artifact
        self.survivor = survivor

    def process(self, context: ReplayContext) -> str:
        handler = getattr(self, f"_{self.mode}")
        certificate = handler(context)
        certificate.side_conditions = [str(c) for c in context.side_conditions]
        context.certificate = certificate
        self._emit_event(Events.CERTIFICATE_ISSUED, context.pipeline, certificate.verdict.value)
        logger.info(f"{context.pipeline}: {certificate.verdict.value} {certificate.reason}")
        return f"{certificate.verdict.value}: {certificate.reason}"

    def _certificate(self, context: ReplayContext, verdict: Verdict, **kwargs) -> Certificate:
        label = context.profile.label() if context.profile is not None else ""
        return Certificate(pipeline=context.pipeline, profile=label, verdict=verdict, **kwargs)

    # ============ 各方式 ============

    def _constancy(self, context: ReplayContext) -> Certificate:
        final = self.poly(context, self.source)
        if final.is_zero():
            raise IdenticallyZero("最终多项式恒为零", describe(self.source))
        text = format_poly(final)
        extra = sorted(set(final.symbol_names()) - CONSTANT_PARAMETERS - {self.survivor})
        if extra:
            return self._certificate(context, Verdict.INCONCLUSIVE, final_poly=text,
                                     reason=f"最终多项式仍含 {', '.join(extra)}")
        degree = final.degree(self.survivor)
        leading = final.coefficient(self.survivor, max(degree, 0))
        self.record_condition(context, SideCondition.of(leading, f"{self.survivor} 的首项系数非零"))
        if leading.is_constant():
            witness = f"首项系数 {format_poly(leading)}"
        else:
            config = context.config
            plan = (witness_plan(context.seed, config.witness_bound, config.witness_trials)
                    if config is not None else witness_plan(context.seed))
            result = zero_test(leading, plan)
            if not result.proved_nonzero:
                raise IdenticallyZero("首项系数在采样点上均为零", format_poly(leading))
            witness = f"首项系数 {format_poly(leading)}; {result.describe()}"
        reason = (f"{self.survivor} 满足 {degree} 次非零多项式" if degree > 0
                  else "最终关系是非零常数")
        return self._certificate(context, Verdict.FORCES_CONSTANCY, final_poly=text, witness=witness,
                                 reason=reason)

    def _tower(self, context: ReplayContext) -> Certificate:
        result = context.artifacts.get(self.artifact)
        if result is None:
            return self._certificate(context, Verdict.INCONCLUSIVE,
                                     reason="场景参数不完整，只回放了符号链")
        if not result.nonzero:
            raise IdenticallyZero("模约化塔的值为零", result.describe())
        return self._certificate(context, Verdict.FORCES_CONSTANCY, final_poly=result.describe(),
                                 witness=f"{self.survivor}={result.sample} -> {result.value}",
                                 reason=f"{self.survivor} 满足非零多项式（模 p 见证）")

    def _contradiction(self, context: ReplayContext) -> Certificate:
        remaining = self.poly(context, self.source)
        for factor in self.factors:
            remaining, condition = cancel_factor(remaining, self.poly(context, factor), "相异性条件")
            self.record_condition(context, condition)
        if not remaining.is_constant() or remaining.is_zero():
            raise StepFailure("约去相异性因子后未得到非零常数", describe(self.source),
                              step_name=self.name, diagnostic=format_poly(remaining))
        return self._certificate(context, Verdict.ESTABLISHED, final_poly=format_poly(self.poly(context, self.source)),
                                 witness=f"余下常数 {format_poly(remaining)}", reason=self.claim)

    def _established(self, context: ReplayContext) -> Certificate:
        text = format_poly(self.poly(context, self.source)) if self.source is not None else ""
        if not self.claim:
            raise ReplayToolError("established 方式需要结论文本", self.name)
        return self._certificate(context, Verdict.ESTABLISHED, final_poly=text, reason=self.claim)
