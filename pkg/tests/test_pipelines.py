#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
端到端回放：作业展开、各流水线的裁定、注入错误基准
"""

from fractions import Fraction

import pytest

from core.events import Events
from geometry.scenario import CaseTag, ScenarioProfile, default_profiles
from infrastructure.config import RunConfig
from infrastructure.exceptions import ConfigurationError
from pipeline_factory import ReplayJob, ReplayRunner, plan_jobs
from replay.certificate import Verdict
from replay.registry import PIPELINES, fixture_usage, get_pipeline


def run(fixtures, *pipelines, **overrides):
    config = RunConfig(pipelines=list(pipelines), **overrides)
    return ReplayRunner(config, fixtures).run()


# ============ 作业展开 ============

class TestPlanJobs:

    def test_default_matrix(self):
        jobs = plan_jobs(RunConfig())
        assert len(jobs) == 29
        assert [job.index for job in jobs] == list(range(29))
        assert jobs[0].pipeline == "lemma4_1"
        assert jobs[-1].pipeline == "case3"

    def test_command_line_profile(self):
        config = RunConfig(pipelines=["case1A"], multiplicities=[1, 2, 3], curvature="-1", norm="7")
        jobs = plan_jobs(config)
        assert len(jobs) == 1
        assert jobs[0].profile == ScenarioProfile(CaseTag.FOUR_A, (1, 2, 3), Fraction(-1), Fraction(7))

    def test_explicit_profiles_follow_case_tag(self):
        config = RunConfig(pipelines=["case1A", "case3"], profiles=[
            {"case_tag": "FourA", "multiplicities": [1, 1, 1], "curvature": "0", "norm": "7"},
            {"case_tag": "Two", "norm": "5", "dimension": 4},
        ])
        jobs = plan_jobs(config)
        assert [(job.pipeline, job.profile.case_tag) for job in jobs] == [
            ("case1A", CaseTag.FOUR_A), ("case3", CaseTag.TWO)]

    def test_no_jobs(self):
        config = RunConfig(pipelines=["case3"], profiles=[{"case_tag": "FourA"}])
        with pytest.raises(ConfigurationError):
            plan_jobs(config)

    def test_unknown_pipeline(self):
        with pytest.raises(ConfigurationError):
            plan_jobs(RunConfig(pipelines=["case4"]))
        with pytest.raises(ConfigurationError):
            get_pipeline("case4")


class TestRegistry:

    def test_fixture_usage_refers_to_stored_fixtures(self, fixtures):
        usage = fixture_usage()
        assert set(usage) <= set(fixtures.ids())
        assert usage["case3.constraint"] == ["case3"]
        assert all(users for users in usage.values())

    @pytest.mark.parametrize("name", sorted(PIPELINES))
    def test_pipelines_end_with_certificate(self, name):
        spec = PIPELINES[name]
        for profile in default_profiles(name):
            steps = spec.build(profile)
            assert steps[-1].kind == "Certify"
            assert all(step.kind != "Certify" for step in steps[:-1])


# ============ 符号流水线 ============

class TestSymbolicPipelines:

    @pytest.mark.parametrize("pipeline, verdict", [
        ("lemma4_1", Verdict.ESTABLISHED),
        ("lemma4_2a", Verdict.ESTABLISHED),
        ("lemma4_2b", Verdict.ESTABLISHED),
        ("case3", Verdict.FORCES_CONSTANCY),
    ])
    def test_verdict(self, fixtures, pipeline, verdict):
        result = run(fixtures, pipeline)
        report = result.reports[0]
        assert report.failure is None, report.render_text()
        assert report.verdict is verdict
        assert result.exit_code == 0
        assert len(report.steps) == len(report.plan)
        assert all(m["outcome"] != "Mismatch" for m in report.fixture_matches)

    def test_case3_certificate(self, fixtures):
        report = run(fixtures, "case3").reports[0]
        assert report.certificate.final_poly
        assert "lam1" in report.certificate.final_poly
        assert any("ρ" in note for note in report.notes)

    def test_lemma41_records_distinctness(self, fixtures):
        report = run(fixtures, "lemma4_1").reports[0]
        conditions = {c["expr"] for c in report.side_conditions}
        assert "lam_u - lam_v" in conditions or "lam_v - lam_u" in conditions
        assert report.certificate.witness.startswith("余下常数")

    def test_lemma41_eliminations_match_without_spurious_factors(self, fixtures):
        report = run(fixtures, "lemma4_1").reports[0]
        outcomes = {m["fixture"]: m["outcome"] for m in report.fixture_matches}
        for fixture_id in ("lemma41.equal_connection_e1", "lemma41.eu_uu1_free", "lemma41.eu_a1_free",
                           "lemma41.g_combination", "lemma41.norm_difference", "lemma41.eu_lam_u_forced"):
            assert outcomes[fixture_id] != "Mismatch", fixture_id

    def test_certificate_event_traced(self, fixtures, fresh_event_bus):
        run(fixtures, "case3")
        issued = fresh_event_bus.trace(Events.CERTIFICATE_ISSUED, pipeline="case3")
        assert [entry.args for entry in issued] == [("case3", "ForcesConstancy")]
        assert fresh_event_bus.trace(Events.RUN_COMPLETE)[-1].args == (0,)

    def test_reports_follow_job_order_with_workers(self, fixtures):
        result = run(fixtures, "case3", "lemma4_2a", workers=2)
        assert [r.pipeline for r in result.reports] == ["case3", "lemma4_2a"]
        assert result.exit_code == 0


# ============ 错误注入 ============

class TestInjectedFailures:

    def test_wrong_fixture_gives_mismatch(self, fixtures):
        broken = fixtures.with_override("case3.constraint", "lam1^2 - beta")
        result = run(broken, "case3")
        report = result.reports[0]
        assert report.verdict is Verdict.FIXTURE_MISMATCH
        assert report.exit_code == result.exit_code == 1
        mismatch = [m for m in report.fixture_matches if m["outcome"] == "Mismatch"]
        assert [m["fixture"] for m in mismatch] == ["case3.constraint"]
        assert "difference" in mismatch[0]

    def test_mismatch_carries_fixture_label(self, fixtures):
        broken = fixtures.with_override("case3.trace", "n*lam + 3*lam1")
        report = run(broken, "case3").reports[0]
        assert report.verdict is Verdict.FIXTURE_MISMATCH
        mismatch = [m for m in report.fixture_matches if m["outcome"] == "Mismatch"]
        assert [(m["fixture"], m["label"]) for m in mismatch] == [("case3.trace", "(e:d80)")]
        assert "case3.trace (e:d80)" in report.render_text()
        assert "(e:d80)" in report.certificate.reason

    def test_wrong_premise_fails_downstream(self, fixtures):
        broken = fixtures.with_override("lemma42.codazzi_relation", "w_vu_w + w_uv_w")
        report = run(broken, "lemma4_2a").reports[0]
        assert report.verdict is not Verdict.ESTABLISHED
        assert report.exit_code == 1

    def test_profile_mismatch_is_a_setup_failure(self, fixtures):
        runner = ReplayRunner(RunConfig(), fixtures)
        report = runner.run_job(ReplayJob(0, "case3", ScenarioProfile(CaseTag.FOUR_A)))
        assert report.failure["step_index"] == -1
        assert report.failure["error_type"] == "ProfileError"
        assert report.exit_code == 2

    def test_term_limit(self, fixtures):
        report = run(fixtures, "lemma4_1", max_terms=5).reports[0]
        assert report.failure["error_type"] == "ResourceGuardError"
        assert report.exit_code == 3


# ============ 具体参数（耗时） ============

@pytest.mark.slow
class TestConcretePipelines:

    @pytest.mark.parametrize("pipeline", ["case1A", "case1B", "case2"])
    def test_default_matrix(self, fixtures, pipeline):
        result = run(fixtures, pipeline)
        for report in result.reports:
            assert report.failure is None, report.render_text()
            assert report.verdict is Verdict.FORCES_CONSTANCY, report.render_text()
        assert result.exit_code == 0

    def test_case1a_equal_multiplicities_drop_quintic_degree(self, fixtures):
        report = run(fixtures, "case1A", multiplicities=[1, 1, 1], curvature="1").reports[0]
        assert report.failure is None, report.render_text()
        assert report.verdict is Verdict.FORCES_CONSTANCY
        witness = [step for step in report.steps if step["kind"] == "WitnessCheck"]
        assert witness and "形式次数 (5, 2)" in witness[0]["summary"]

    @pytest.mark.parametrize("case2, curvature", [([5, 2], "1"), ([6, 3], "0"), ([6, 3], "-1")])
    def test_case2_general_displays(self, fixtures, case2, curvature):
        report = run(fixtures, "case2", case2=case2, curvature=curvature).reports[0]
        assert report.failure is None, report.render_text()
        checked = {m["fixture"]: m for m in report.fixture_matches}
        for fixture_id in ("case2.gauss_connection", "case2.gauss_display", "case2.riccati_u_display"):
            assert checked[fixture_id]["outcome"] != "Mismatch", report.render_text()
        assert "case2.final_display" not in checked

    def test_case2_display_profile_matches_every_display(self, fixtures):
        report = run(fixtures, "case2", case2=[4, 2], curvature="0").reports[0]
        assert report.verdict is Verdict.FORCES_CONSTANCY, report.render_text()
        displays = [m for m in report.fixture_matches if m["fixture"].endswith("_display")]
        assert len(displays) == 5
        assert all(m["outcome"] != "Mismatch" for m in displays), report.render_text()
