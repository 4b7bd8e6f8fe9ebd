#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
命令行：退出码与输出
"""

import json

import pytest
from typer.testing import CliRunner

from main import app


@pytest.fixture
def cli():
    return CliRunner()


class TestResultantCommand:

    @pytest.mark.parametrize("f, g, expected", [
        ("x - a", "x - b", "a - b"),
        ("x^2 - 1", "x^2 - 4", "9"),
        ("x^2 + 1", "3", "9"),
    ])
    def test_values(self, cli, f, g, expected):
        result = cli.invoke(app, ["resultant", f, g, "x"])
        assert result.exit_code == 0
        assert result.stdout.strip() == expected

    def test_normalized_unless_raw(self, cli):
        normalized = cli.invoke(app, ["resultant", "2*x - 2*a", "x - b", "x"])
        raw = cli.invoke(app, ["resultant", "2*x - 2*a", "x - b", "x", "--raw"])
        assert normalized.stdout.strip() == "a - b"
        assert raw.stdout.strip() == "2*a - 2*b"

    def test_parse_error(self, cli):
        result = cli.invoke(app, ["resultant", "x +* 1", "x", "x"])
        assert result.exit_code == 2

    def test_both_constant(self, cli):
        result = cli.invoke(app, ["resultant", "2", "3", "x"])
        assert result.exit_code == 2


class TestVerifyCommand:

    def test_case3(self, cli):
        result = cli.invoke(app, ["verify", "case3"])
        assert result.exit_code == 0
        assert "ForcesConstancy" in result.stdout

    def test_invalid_multiplicities(self, cli):
        result = cli.invoke(app, ["verify", "--pipeline", "case1A", "--multiplicities", "0,1,1"])
        assert result.exit_code == 2

    def test_malformed_multiplicities(self, cli):
        result = cli.invoke(app, ["verify", "case1A", "--multiplicities", "1,x,1"])
        assert result.exit_code == 2

    def test_unknown_pipeline(self, cli):
        result = cli.invoke(app, ["verify", "case9"])
        assert result.exit_code == 2

    def test_missing_fixture_file(self, cli, tmp_path):
        result = cli.invoke(app, ["verify", "case3", "--fixtures", str(tmp_path / "none.json")])
        assert result.exit_code == 2

    def test_term_limit(self, cli):
        result = cli.invoke(app, ["verify", "lemma4_1", "--max-terms", "5"])
        assert result.exit_code == 3

    def test_json_output_and_report(self, cli, tmp_path):
        out = tmp_path / "run.json"
        result = cli.invoke(app, ["verify", "case3", "--format", "json", "--out", str(out)])
        assert result.exit_code == 0
        data = json.loads(result.stdout)
        assert data["exit_code"] == 0
        assert json.loads(out.read_text(encoding="utf-8")) == data

        rendered = cli.invoke(app, ["report", str(out)])
        assert rendered.exit_code == 0
        assert "ForcesConstancy" in rendered.stdout


class TestOtherCommands:

    def test_report_missing_file(self, cli, tmp_path):
        result = cli.invoke(app, ["report", str(tmp_path / "absent.json")])
        assert result.exit_code == 2

    def test_fixtures_listing(self, cli):
        result = cli.invoke(app, ["fixtures"])
        assert result.exit_code == 0
        lines = result.stdout.splitlines()
        assert "case3.constraint\tcase3" in lines
        assert "elimination.generic_resultant\tcase1A\t(e:n18)" in lines
        assert "case2.gauss_connection\tcase2\t(e:d71)" in lines
