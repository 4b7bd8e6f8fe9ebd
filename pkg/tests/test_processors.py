#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
回放步骤与流水线执行
"""

import pytest

from algebra.symbols import SymbolTable
from algebra.text_format import parse_poly
from core.context import MatchOutcome, ReplayContext
from core.events import Events, get_event_bus
from core.pipeline import PipelineBuilder, exit_code_for
from geometry.frames import standard_derivations
from geometry.scenario import CaseTag, ScenarioProfile, build_constraints
from handlers.fixture_store import FixtureStore
from infrastructure.config import RunConfig
from infrastructure.exceptions import (BudgetExceeded, ConfigurationError, ParseError, ResourceGuardError,
                                       StepFailure)
from processors import (AssertCombination, AssertZero, CancelFactor, Certify, Coefficient, Combine,
                        Differentiate, EliminateTrace, MatchFixture, Note, Premise, Resultant, Solve,
                        SpecializeCheck, StripMonomial, Substitute, TowerCheck, WitnessCheck, expr, fixture)
from replay.certificate import Verdict
from replay.report import VerificationReport

SEED = 20240611
STORE = FixtureStore({"toy.norm": "lam1^2 + p*lam_u^2 - beta"})


def replay(*steps, profile=None, config=None, store=STORE) -> ReplayContext:
    profile = profile or ScenarioProfile(CaseTag.FOUR_A)
    table = SymbolTable.canonical()
    pipeline = PipelineBuilder("toy").add_all(*steps).build()
    context = ReplayContext.create("toy", profile, table, config=config or RunConfig(), fixtures=store,
                                   derivations=standard_derivations(profile, table),
                                   constraints=build_constraints(profile, table), seed=SEED)
    return pipeline.execute(context)


def P(context: ReplayContext, text: str):
    return parse_poly(text, context.table)


def finalize(context: ReplayContext) -> VerificationReport:
    return VerificationReport.finalize(context, [])


# ============ 组合与改写 ============

class TestRewriting:

    def test_combine_with_divisor_records_condition(self):
        context = replay(
            Premise("square", expr("lam1^2 - lam_u^2")),
            Combine("sum", [(1, "square")], divisor=expr("lam1 - lam_u"), reason="主曲率互异"),
        )
        assert context.failure is None
        assert context.get("sum") == P(context, "lam1 + lam_u")
        assert [c.expr for c in context.side_conditions] == [P(context, "lam1 - lam_u")]
        assert context.records[1].side_conditions

    def test_combine_scale_and_normalize(self):
        context = replay(
            Premise("a", expr("lam1 + 2*lam_u")),
            Combine("scaled", [(expr("lam_v"), "a")], scale=3),
            Combine("normalized", [(-4, "a")], normalize=True),
        )
        assert context.get("scaled") == P(context, "3*lam1*lam_v + 6*lam_u*lam_v")
        assert context.get("normalized") == P(context, "lam1 + 2*lam_u")

    def test_solve_records_denominator(self):
        context = replay(
            Premise("relation", expr("lam_u*lam1 - 3")),
            Solve("solution", "relation", "lam1"),
        )
        assert context.get("solution").evaluate({"lam_u": 3}) == 1
        assert [c.expr for c in context.side_conditions] == [P(context, "lam_u")]

    def test_substitute_and_coefficient(self):
        context = replay(
            Premise("square", expr("lam1^2")),
            Substitute("shifted", "square", {"lam1": expr("lam_u + 1")}),
            Coefficient("linear", "shifted", "lam_u"),
            Coefficient("negated", "shifted", "lam_u", k=2, negate=True),
        )
        assert context.get("shifted") == P(context, "lam_u^2 + 2*lam_u + 1")
        assert context.get("linear") == 2
        assert context.get("negated") == -1

    def test_cancel_factor_and_strip_monomial(self):
        context = replay(
            Premise("product", expr("lam1^2*lam_u*(lam_v - lam_w)")),
            CancelFactor("quotient", "product", expr("lam_v - lam_w"), reason="主曲率互异"),
            StripMonomial("stripped", "quotient"),
        )
        assert context.get("quotient") == P(context, "lam1^2*lam_u")
        assert context.get("stripped") == 1
        assert len(context.side_conditions) == 2

    def test_eliminate_trace_uses_constraints(self):
        context = replay(
            Premise("norm", lambda ctx: ctx.constraints.norm),
            EliminateTrace("without_w", "norm", "lam_w"),
        )
        assert context.failure is None
        assert "lam_w" not in context.get("without_w").symbol_names()

    def test_differentiate_with_rewrite(self):
        context = replay(
            Premise("lam", expr("lam_u")),
            Differentiate("derivative", "lam", "e1", rewrites=[{"w_uu1": expr("lam1")}]),
        )
        assert context.get("derivative") == P(context, "(lam_u - lam1)*lam1")

    def test_unknown_derivation(self):
        context = replay(Premise("lam", expr("lam_u")), Differentiate("d", "lam", "e7"))
        assert context.failure.error_type == "ReplayToolError"
        assert context.failure.step_index == 1


# ============ 检查 ============

class TestChecks:

    def test_assert_zero_failure_stops_pipeline(self):
        context = replay(
            Premise("x", expr("lam1")),
            AssertZero("x", "应为零"),
            Note("不会执行"),
        )
        failure = context.failure
        assert (failure.step_index, failure.error_type, failure.exit_code) == (1, "StepFailure", 1)
        assert failure.diagnostic == "lam1"
        assert len(context.records) == 2
        assert context.notes == []
        report = finalize(context)
        assert report.verdict is Verdict.INCONCLUSIVE
        assert report.exit_code == 1

    def test_missing_input(self):
        context = replay(Combine("sum", [(1, "undefined")]))
        assert context.failure.error_type == "StepFailure"
        assert "undefined" in context.failure.message

    def test_assert_combination(self):
        context = replay(
            Premise("f", expr("lam1^2 - beta")),
            Premise("target", expr("lam_u*lam1^2 - lam_u*beta")),
            AssertCombination("target", [(expr("lam_u"), "f")]),
            AssertCombination("target", [(expr("lam_v"), "f")]),
        )
        assert context.failure.step_index == 3

    def test_specialize_check(self):
        context = replay(
            Premise("zero", expr("(lam1 - lam_u)^2 - lam1^2 + 2*lam1*lam_u - lam_u^2")),
            SpecializeCheck("zero"),
            Premise("nonzero", expr("lam1*lam_u + 1")),
            SpecializeCheck("nonzero", expect_zero=False),
            SpecializeCheck("nonzero"),
        )
        assert context.failure.step_index == 4
        assert "ProvedNonzero" in context.failure.diagnostic


class TestWitnessCheck:

    @staticmethod
    def steps(coefficients):
        return [
            Premise("f", expr("lam_u*lam_v + lam1")),
            Premise("g", expr("lam_v^2 - lam1*lam_w")),
            Coefficient("v0", "f", "lam_v", k=0),
            Coefficient("v1", "f", "lam_v", k=1),
            Coefficient("v2", "g", "lam_v", k=0),
            Coefficient("v3", "g", "lam_v", k=1),
            Coefficient("v4", "g", "lam_v", k=2),
            Resultant("generic", expr("v0 + v1*lam_v"), expr("v2 + v3*lam_v + v4*lam_v^2"), "lam_v"),
            WitnessCheck("f", "g", "lam_v", survivor="lam1", generic="generic", coefficients=coefficients),
        ]

    def test_generic_resultant_agrees_with_direct(self):
        context = replay(*self.steps({f"v{k}": f"v{k}" for k in range(5)}))
        assert context.failure is None
        assert "lam1=" in context.records[-1].summary

    def test_swapped_coefficients_are_detected(self):
        swapped = {"v0": "v1", "v1": "v0", "v2": "v2", "v3": "v3", "v4": "v4"}
        context = replay(*self.steps(swapped))
        assert context.failure.step_index == 8
        assert context.failure.error_type == "StepFailure"

    @staticmethod
    def dropped_degree_steps(degrees):
        """first 的二次项系数恒为零，通用结式仍按 (2, 2) 排布"""
        return [
            Premise("f", expr("lam_u*lam_v + lam1")),
            Premise("g", expr("2*lam_v^2 - lam1*lam_w")),
            Coefficient("v0", "f", "lam_v", k=0),
            Coefficient("v1", "f", "lam_v", k=1),
            Coefficient("v5", "f", "lam_v", k=2),
            Coefficient("v2", "g", "lam_v", k=0),
            Coefficient("v3", "g", "lam_v", k=1),
            Coefficient("v4", "g", "lam_v", k=2),
            Resultant("generic", expr("v0 + v1*lam_v + v5*lam_v^2"), expr("v2 + v3*lam_v + v4*lam_v^2"), "lam_v"),
            WitnessCheck("f", "g", "lam_v", survivor="lam1", generic="generic",
                         coefficients={f"v{k}": f"v{k}" for k in range(6)}, degrees=degrees),
        ]

    def test_dropped_leading_coefficient_uses_formal_degrees(self):
        context = replay(*self.dropped_degree_steps((2, 2)))
        assert context.failure is None
        assert "形式次数 (2, 2) 降为 (1, 2)" in context.records[-1].summary

    def test_dropped_leading_coefficient_without_degrees_fails(self):
        context = replay(*self.dropped_degree_steps(None))
        assert context.failure.step_index == 9
        assert context.failure.error_type == "StepFailure"

    def test_zero_resultant_exhausts_trials(self):
        context = replay(
            Premise("f", expr("lam_u*lam_v + lam1")),
            WitnessCheck("f", "f", "lam_v", survivor="lam1"),
        )
        assert context.failure.step_index == 1


class TestMatchFixture:

    def test_outcomes(self):
        context = replay(
            Premise("norm", fixture("toy.norm")),
            MatchFixture("norm", "toy.norm"),
            Combine("scaled", [(-2, "norm")]),
            MatchFixture("scaled", "toy.norm"),
        )
        outcomes = [m.outcome for m in context.fixture_matches]
        assert outcomes == [MatchOutcome.EXACT, MatchOutcome.UP_TO_UNIT_CONTENT]
        assert context.records[1].outcome == "Exact"

    def test_mismatch_continues_and_sets_verdict(self):
        context = replay(
            Premise("norm", expr("lam1^2 - beta")),
            MatchFixture("norm", "toy.norm"),
            Note("继续执行"),
            Certify("established", "norm", claim="玩具结论"),
        )
        assert context.failure is None
        assert context.notes == ["继续执行"]
        match = context.fixture_matches[0]
        assert match.outcome is MatchOutcome.MISMATCH
        assert match.difference is not None
        report = finalize(context)
        assert report.verdict is Verdict.FIXTURE_MISMATCH
        assert report.exit_code == 1

    def test_reference_mismatch_is_not_strict(self):
        context = replay(
            Premise("norm", expr("lam1^2 - beta")),
            MatchFixture("norm", "toy.norm", strict=False),
            Certify("established", "norm", claim="玩具结论"),
        )
        assert context.strict_mismatches == []
        assert finalize(context).verdict is Verdict.ESTABLISHED

    def test_unknown_fixture(self):
        context = replay(Premise("x", fixture("toy.missing")))
        assert context.failure.error_type == "UnknownFixture"

    def test_events(self):
        seen = []
        get_event_bus().on(Events.FIXTURE_MISMATCHED, lambda pipeline, fixture_id, diff: seen.append(fixture_id))
        replay(Premise("norm", expr("lam1")), MatchFixture("norm", "toy.norm"))
        assert seen == ["toy.norm"]


# ============ 证书 ============

class TestCertify:

    def test_constant_leading_coefficient(self):
        context = replay(Premise("final", expr("2*lam1^2 - beta")), Certify("constancy", "final"))
        certificate = context.certificate
        assert certificate.verdict is Verdict.FORCES_CONSTANCY
        assert certificate.witness == "首项系数 2"
        assert context.side_conditions == []
        assert finalize(context).exit_code == 0

    def test_symbolic_leading_coefficient(self):
        context = replay(Premise("final", expr("(n + 8)*lam1^2 - beta")), Certify("constancy", "final"))
        assert context.certificate.verdict is Verdict.FORCES_CONSTANCY
        assert "ProvedNonzero" in context.certificate.witness
        assert [c.expr for c in context.side_conditions] == [P(context, "n + 8")]

    def test_extra_symbols_are_inconclusive(self):
        context = replay(Premise("final", expr("lam1*lam_u - 1")), Certify("constancy", "final"))
        assert context.certificate.verdict is Verdict.INCONCLUSIVE
        assert "lam_u" in context.certificate.reason
        assert finalize(context).exit_code == 1

    def test_zero_final_polynomial(self):
        context = replay(Premise("final", expr("lam1 - lam1")), Certify("constancy", "final"))
        assert context.failure.error_type == "IdenticallyZero"
        assert finalize(context).verdict is Verdict.INCONCLUSIVE

    def test_contradiction(self):
        context = replay(
            Premise("det", expr("3*(lam_u - lam_v)*(lam_v - lam_w)")),
            Certify("contradiction", "det", claim="方程组只有零解",
                    factors=[expr("lam_u - lam_v"), expr("lam_v - lam_w")]),
        )
        assert context.certificate.verdict is Verdict.ESTABLISHED
        assert context.certificate.witness == "余下常数 3"
        assert len(context.side_conditions) == 2

    def test_contradiction_needs_constant_remainder(self):
        context = replay(
            Premise("det", expr("lam1*(lam_u - lam_v)")),
            Certify("contradiction", "det", claim="c", factors=[expr("lam_u - lam_v")]),
        )
        assert context.failure.error_type == "StepFailure"

    def test_established_requires_claim(self):
        context = replay(Premise("x", expr("lam1")), Certify("established", "x"))
        assert context.failure.error_type == "ReplayToolError"

    def test_unknown_mode(self):
        with pytest.raises(ValueError):
            Certify("proof")

    def test_tower_skipped_for_symbolic_profile(self):
        context = replay(
            TowerCheck("tower", lambda ctx: 1 / 0),
            Certify("tower", artifact="tower"),
        )
        assert context.failure is None
        assert "tower" not in context.artifacts
        assert context.certificate.verdict is Verdict.INCONCLUSIVE

    def test_certificate_carries_side_conditions(self):
        context = replay(
            Premise("relation", expr("lam_u*lam1 - 3")),
            Solve("solution", "relation", "lam1"),
            Premise("final", expr("lam1^2 - 7")),
            Certify("constancy", "final"),
        )
        assert context.certificate.side_conditions == [str(context.side_conditions[0])]


# ============ 资源保护与退出码 ============

class TestGuards:

    def test_term_limit_gives_exit_three(self):
        context = replay(
            Premise("big", expr("(lam1 + lam_u + lam_v + lam_w + 1)^3")),
            config=RunConfig(max_terms=10),
        )
        assert context.failure.error_type == "ResourceGuardError"
        assert context.failure.exit_code == 3
        assert finalize(context).exit_code == 3

    def test_deadline(self):
        context = ReplayContext.create("toy", ScenarioProfile(CaseTag.TWO), SymbolTable.canonical(),
                                       config=RunConfig(budget_secs=10))
        context.deadline = context.start_time - 1
        with pytest.raises(BudgetExceeded):
            context.check_deadline("step")

    @pytest.mark.parametrize("error, code", [
        (StepFailure("x"), 1),
        (ParseError("x"), 2),
        (ConfigurationError("x"), 2),
        (ResourceGuardError("x"), 3),
        (BudgetExceeded("x"), 3),
        (ValueError("x"), 1),
    ])
    def test_exit_code_for(self, error, code):
        assert exit_code_for(error) == code
