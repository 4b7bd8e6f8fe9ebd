#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
命令行入口

verify 执行证明回放，resultant 计算单个结式，report 重新渲染已保存的报告，
fixtures 列出基准及其使用者。
"""

import logging
import os
import sys
from typing import List, Optional

import typer

# 添加当前目录到Python路径
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from algebra.elimination import resultant as compute_resultant  # noqa: E402
from algebra.symbols import SymbolTable  # noqa: E402
from algebra.text_format import format_poly, parse_poly  # noqa: E402
from core.events import Events, get_event_bus  # noqa: E402
from handlers.fixture_store import FixtureStore  # noqa: E402
from handlers.report_writer import ReportWriter  # noqa: E402
from infrastructure.config import ConfigManager, RunConfig  # noqa: E402
from infrastructure.exceptions import (  # noqa: E402
    AlgebraError,
    ConfigurationError,
    CriticalError,
    ReplayToolError,
    ReportFileError,
)
from infrastructure.logger import LogManager  # noqa: E402

app = typer.Typer(add_completion=False, help="双守恒超曲面证明回放工具")


def _split_ints(text: Optional[str], option: str) -> Optional[List[int]]:
    if text is None:
        return None
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        _fail(f"{option} 需要逗号分隔的整数: {text}", 2)


def _fail(message: str, code: int) -> None:
    typer.echo(f"错误: {message}", err=True)
    raise typer.Exit(code=code)


def _setup_logging(config: RunConfig, verbose: bool) -> None:
    level = logging.DEBUG if verbose else getattr(logging, str(config.log_level).upper(), logging.INFO)
    LogManager.configure(log_dir=config.log_dir or None, level=level, console=verbose)
    bus = get_event_bus()
    root = LogManager.get_logger()
    bus.on(Events.CERTIFICATE_ISSUED, lambda pipeline, verdict: root.info(f"{pipeline}: {verdict}"))
    bus.on(Events.STEP_ERROR, lambda pipeline, step, error: root.warning(f"{pipeline}/{step}: {error}"))


@app.command()
def verify(
    targets: List[str] = typer.Argument(None, help="流水线名称或 all"),
    pipeline: List[str] = typer.Option(None, "--pipeline", "-p", help="流水线名称，可重复"),
    multiplicities: Optional[str] = typer.Option(None, help="重数 p,q,r"),
    curvature: Optional[str] = typer.Option(None, help="空间形式曲率 c"),
    norm: Optional[str] = typer.Option(None, help="第二基本形式范数 β"),
    case2: Optional[str] = typer.Option(None, "--case2", help="情形 2 的 n,p"),
    dimension: Optional[int] = typer.Option(None, help="情形 3 的维数 n"),
    seed: Optional[int] = typer.Option(None, help="随机种子"),
    output_format: Optional[str] = typer.Option(None, "--format", help="text 或 json"),
    max_terms: Optional[int] = typer.Option(None, "--max-terms", help="单个多项式的项数上限"),
    budget_secs: Optional[float] = typer.Option(None, "--budget-secs", help="每条流水线的时间预算（秒）"),
    fixtures: Optional[str] = typer.Option(None, "--fixtures", help="基准文件路径"),
    config_file: Optional[str] = typer.Option(None, "--config", help="JSON 配置文件"),
    out: Optional[str] = typer.Option(None, "--out", help="把 JSON 报告写入该文件"),
    workers: Optional[int] = typer.Option(None, help="并行作业数"),
    include_timings: bool = typer.Option(False, "--include-timings", help="报告中包含耗时"),
    log_dir: Optional[str] = typer.Option(None, "--log-dir", help="日志目录"),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="调试日志输出到标准错误"),
):
    """执行证明回放并输出报告"""
    from pipeline_factory import ReplayRunner

    try:
        manager = ConfigManager(config_file)
        manager.load_config()
        manager.apply_environment()
        selected = list(targets or []) + list(pipeline or [])
        config = manager.update_config(
            pipelines=selected or None,
            multiplicities=_split_ints(multiplicities, "--multiplicities"),
            curvature=curvature,
            norm=norm,
            case2=_split_ints(case2, "--case2"),
            dimension=dimension,
            seed=seed,
            output_format=output_format,
            max_terms=max_terms,
            budget_secs=budget_secs,
            fixtures_path=fixtures,
            workers=workers,
            include_timings=include_timings or None,
            log_dir=log_dir,
        )
        errors = manager.validate()
        if errors:
            _fail("; ".join(errors), 2)
        _setup_logging(config, verbose)
        writer = ReportWriter(config.output_format)
        run = ReplayRunner(config).run()
    except ConfigurationError as e:
        _fail(str(e), 2)
    except CriticalError as e:
        _fail(str(e), 3)

    typer.echo(writer.render(run), nl=False)
    if out:
        try:
            writer.write(run, out, "json")
        except ReportFileError as e:
            _fail(str(e), 1)
    raise typer.Exit(code=run.exit_code)


@app.command()
def resultant(
    f: str = typer.Argument(..., help="第一个多项式"),
    g: str = typer.Argument(..., help="第二个多项式"),
    var: str = typer.Argument(..., help="消元变量"),
    raw: bool = typer.Option(False, "--raw", help="不做规范化"),
):
    """计算 Res_var(f, g)"""
    try:
        table = SymbolTable()
        first = parse_poly(f, table)
        second = parse_poly(g, table)
        table.register(var)
        value = compute_resultant(first, second, var)
    except (ConfigurationError, AlgebraError) as e:
        _fail(str(e), 2)
    if not raw and not value.is_constant():
        value = value.normalize()
    typer.echo(format_poly(value))


@app.command()
def report(
    path: str = typer.Argument(..., help="verify --out 写出的 JSON 报告"),
    output_format: str = typer.Option("text", "--format", help="text 或 json"),
):
    """重新渲染已保存的报告"""
    try:
        writer = ReportWriter(output_format)
        run = ReportWriter.load(path)
    except ReportFileError as e:
        _fail(str(e), 2)
    typer.echo(writer.render(run), nl=False)


@app.command("fixtures")
def list_fixtures(
    fixtures: Optional[str] = typer.Option(None, "--fixtures", help="基准文件路径"),
):
    """列出基准编号、引用它们的流水线与出处标签"""
    from replay.registry import fixture_usage

    try:
        store = FixtureStore.load(fixtures)
        usage = fixture_usage()
    except ReplayToolError as e:
        _fail(str(e), 2)
    for fixture_id in store.ids():
        users = usage.get(fixture_id, [])
        line = f"{fixture_id}\t{', '.join(users) if users else '-'}"
        label = store.label(fixture_id)
        typer.echo(f"{line}\t{label}" if label else line)
    unknown = sorted(set(usage) - set(store.ids()))
    if unknown:
        _fail("流水线引用了不存在的基准: " + ", ".join(unknown), 2)


def main():
    app()


if __name__ == "__main__":
    main()
