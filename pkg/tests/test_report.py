#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
报告的确定性、读写与退出码汇总
"""

import json

import pytest

from handlers.fixture_store import FixtureStore
from handlers.report_writer import ReportWriter
from infrastructure.config import RunConfig
from infrastructure.exceptions import FixtureFileError, ReportFileError
from pipeline_factory import ReplayRunner
from replay.certificate import Certificate, Verdict
from replay.report import RunReport, VerificationReport, aggregate_exit_code


@pytest.fixture
def case3_run(fixtures) -> RunReport:
    return ReplayRunner(RunConfig(pipelines=["case3"]), fixtures).run()


class TestDeterminism:

    def test_repeated_runs_render_identically(self, fixtures, case3_run):
        again = ReplayRunner(RunConfig(pipelines=["case3"]), fixtures).run()
        writer = ReportWriter("json")
        assert writer.render(case3_run) == writer.render(again)

    def test_no_timings_by_default(self, case3_run):
        data = case3_run.to_dict()
        report = data["reports"][0]
        assert "duration" not in report
        assert all("duration" not in step for step in report["steps"])

    def test_timings_on_request(self, fixtures):
        run = ReplayRunner(RunConfig(pipelines=["case3"], include_timings=True), fixtures).run()
        report = run.reports[0]
        assert report.duration is not None
        assert all("duration" in step for step in report.steps)


class TestReadWrite:

    def test_json_round_trip(self, tmp_path, case3_run):
        path = str(tmp_path / "nested" / "report.json")
        writer = ReportWriter("text")
        assert writer.write(case3_run, path, "json") == path
        loaded = ReportWriter.load(path)
        assert loaded.to_dict() == case3_run.to_dict()
        assert loaded.exit_code == 0
        assert loaded.reports[0].verdict is Verdict.FORCES_CONSTANCY

    def test_text_rendering(self, case3_run):
        text = ReportWriter("text").render(case3_run)
        assert "ForcesConstancy" in text
        assert "case3" in text
        assert text.endswith("\n")

    def test_json_is_sorted(self, case3_run):
        data = json.loads(ReportWriter("json").render(case3_run))
        assert list(data) == sorted(data)
        assert data["schema"] == 1

    def test_single_report_document(self, case3_run):
        single = case3_run.reports[0].to_dict()
        run = RunReport.from_dict(single)
        assert len(run.reports) == 1
        assert run.reports[0].pipeline == "case3"

    def test_missing_file(self, tmp_path):
        with pytest.raises(ReportFileError):
            ReportWriter.load(str(tmp_path / "absent.json"))

    def test_not_json(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{not json", encoding="utf-8")
        with pytest.raises(ReportFileError):
            ReportWriter.load(str(path))

    def test_wrong_schema(self, case3_run):
        data = case3_run.to_dict()
        data["schema"] = 99
        with pytest.raises(ReportFileError):
            RunReport.from_dict(data)

    def test_unknown_verdict(self, case3_run):
        data = case3_run.reports[0].to_dict()
        data["certificate"]["verdict"] = "Proved"
        with pytest.raises(ReportFileError):
            VerificationReport.from_dict(data)

    def test_unknown_format(self):
        with pytest.raises(ReportFileError):
            ReportWriter("xml")


class TestFixtureFile:

    def test_entries_with_labels(self, tmp_path):
        path = tmp_path / "fixtures.json"
        path.write_text(json.dumps({"symbols": ["lam1"], "fixtures": {
            "plain": "lam1 - 1",
            "labelled": {"text": "lam1^2 - 1", "label": "(e:d1)"},
        }}), encoding="utf-8")
        store = FixtureStore.load(str(path))
        assert store.text("labelled") == "lam1^2 - 1"
        assert store.label("labelled") == "(e:d1)"
        assert store.label("plain") is None
        assert store.with_override("labelled", "lam1").label("labelled") == "(e:d1)"

    def test_invalid_entry(self, tmp_path):
        path = tmp_path / "fixtures.json"
        path.write_text(json.dumps({"fixtures": {"broken": {"label": "(e:d1)"}}}), encoding="utf-8")
        with pytest.raises(FixtureFileError):
            FixtureStore.load(str(path))

    def test_shipped_labels(self, fixtures):
        assert fixtures.label("lemma41.g_combination") == "(e:n1)"
        assert fixtures.label("lemma41.norm_without_w") == "(e:d22)"
        assert fixtures.label("case1a.uu1_square_relation") is None


class TestExitCodes:

    @pytest.mark.parametrize("codes, expected", [
        ([], 0),
        ([0, 0], 0),
        ([0, 1], 1),
        ([1, 2, 0], 2),
        ([2, 3, 1], 3),
    ])
    def test_aggregate(self, codes, expected):
        assert aggregate_exit_code(codes) == expected

    def test_failures_listed(self):
        passed = VerificationReport("case3", {}, 1, exit_code=0,
                                    certificate=Certificate("case3", "Two", Verdict.FORCES_CONSTANCY))
        failed = VerificationReport("case2", {}, 1, exit_code=1,
                                    certificate=Certificate("case2", "Three", Verdict.INCONCLUSIVE))
        run = RunReport([passed, failed], seed=1)
        assert run.exit_code == 1
        assert run.failures() == [failed]
        assert "Inconclusive" in run.render_text()
