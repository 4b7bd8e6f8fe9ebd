#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
回放流水线工厂

把运行配置展开为 (流水线, 场景) 作业，为每个作业建立上下文与步骤列表，
在有界线程池中执行并汇总报告。
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, List, Optional

from core.context import ReplayContext, StepFailureInfo
from core.events import EventBus, Events, get_event_bus
from core.pipeline import Pipeline, PipelineBuilder, exit_code_for
from geometry.frames import standard_derivations
from geometry.scenario import ScenarioProfile, build_constraints, default_profiles, profile_for
from handlers.fixture_store import FixtureStore
from infrastructure.config import RunConfig
from infrastructure.exceptions import ConfigurationError, ProfileError, ReplayToolError
from infrastructure.logger import LogManager
from replay.registry import get_pipeline
from replay.report import RunReport, VerificationReport

logger = LogManager.get_logger("bicons.runner")


@dataclass(frozen=True)
class ReplayJob:
    """一次 (流水线, 场景) 回放"""
    index: int
    pipeline: str
    profile: ScenarioProfile

    def label(self) -> str:
        return f"{self.pipeline} [{self.profile.label()}]"


def _has_profile_overrides(config: RunConfig) -> bool:
    return any(value is not None for value in (
        config.multiplicities, config.curvature, config.norm, config.case2, config.dimension))


def plan_jobs(config: RunConfig) -> List[ReplayJob]:
    """
    展开作业列表

    优先级：profiles 显式列表 > 命令行场景参数 > 默认场景矩阵。
    显式列表中的场景只分配给情形标签相符的流水线。

    Raises:
        ConfigurationError: 未知流水线或场景参数非法
    """
    jobs: List[ReplayJob] = []
    explicit = [ScenarioProfile.from_dict(data) for data in config.profiles]
    for name in config.selected_pipelines():
        spec = get_pipeline(name)
        if explicit:
            profiles = [p for p in explicit if p.case_tag is spec.case]
        elif _has_profile_overrides(config):
            profiles = [profile_for(name, config.multiplicities, config.curvature, config.norm,
                                    config.case2, config.dimension)]
        else:
            profiles = default_profiles(name)
        for profile in profiles:
            jobs.append(ReplayJob(len(jobs), name, profile))
    if not jobs:
        raise ConfigurationError("没有可执行的作业", ", ".join(config.pipelines))
    return jobs


class PipelineFactory:
    """
    流水线工厂

    每个作业使用独立的符号表、导子与步骤实例，作业之间不共享可变状态。
    """

    def __init__(self, config: RunConfig, fixtures: FixtureStore, event_bus: EventBus = None):
        self.config = config
        self.fixtures = fixtures
        self.event_bus = event_bus or get_event_bus()

    def create_pipeline(self, job: ReplayJob) -> Pipeline:
        """
        Raises:
            ProfileError: 场景的情形标签与流水线不符
        """
        spec = get_pipeline(job.pipeline)
        if job.profile.case_tag is not spec.case:
            raise ProfileError(f"{job.pipeline} 需要情形 {spec.case.value}", job.profile.label())
        builder = PipelineBuilder(job.pipeline, self.event_bus)
        builder.add_all(*spec.build(job.profile))
        return builder.build()

    def create_context(self, job: ReplayJob) -> ReplayContext:
        table = self.fixtures.new_table()
        return ReplayContext.create(
            pipeline=job.pipeline,
            profile=job.profile,
            table=table,
            config=self.config,
            fixtures=self.fixtures,
            derivations=standard_derivations(job.profile, table),
            constraints=build_constraints(job.profile, table),
            seed=self.config.seed,
        )

    def bare_context(self, job: ReplayJob) -> ReplayContext:
        """准备阶段失败时用于承载失败信息的上下文"""
        return ReplayContext.create(job.pipeline, job.profile, self.fixtures.new_table(),
                                    config=self.config, fixtures=self.fixtures, seed=self.config.seed)


def plan_of(pipeline: Pipeline) -> List[dict]:
    return [{'index': i, 'name': step.name, 'kind': step.kind} for i, step in enumerate(pipeline.steps)]


class ReplayRunner:
    """
    回放运行器

    作业在最多 workers 个线程中执行；报告按作业顺序汇总，与完成顺序无关。
    """

    def __init__(self, config: RunConfig, fixtures: Optional[FixtureStore] = None,
                 event_bus: EventBus = None):
        self.config = config
        self.fixtures = fixtures or FixtureStore.load(config.fixtures_path or None)
        self.event_bus = event_bus or get_event_bus()
        self.factory = PipelineFactory(config, self.fixtures, self.event_bus)
        self._on_report: Optional[Callable[[VerificationReport], None]] = None

    def on_report(self, callback: Callable[[VerificationReport], None]) -> 'ReplayRunner':
        """每完成一个作业回调一次（在工作线程中调用）"""
        self._on_report = callback
        return self

    def run_job(self, job: ReplayJob) -> VerificationReport:
        logger.info(f"开始 {job.label()}")
        plan: List[dict] = []
        try:
            pipeline = self.factory.create_pipeline(job)
            context = self.factory.create_context(job)
            plan = plan_of(pipeline)
            context = pipeline.execute(context)
        except ReplayToolError as e:
            context = self.factory.bare_context(job)
            context.failure = StepFailureInfo(step_index=-1, step_name="setup", error_type=type(e).__name__,
                                              message=str(e), exit_code=exit_code_for(e))
            context.complete()
            logger.error(f"{job.label()} 准备失败: {e}")
        report = VerificationReport.finalize(context, plan, self.config.include_timings)
        logger.info(f"完成 {job.label()}: {report.status}")
        if self._on_report is not None:
            self._on_report(report)
        return report

    def run(self, jobs: Optional[List[ReplayJob]] = None) -> RunReport:
        """
        执行全部作业

        Raises:
            ConfigurationError: 作业展开失败
        """
        jobs = plan_jobs(self.config) if jobs is None else jobs
        self.event_bus.emit(Events.RUN_START, len(jobs))
        workers = max(1, min(self.config.workers, len(jobs)))
        if workers == 1:
            reports = [self.run_job(job) for job in jobs]
        else:
            with ThreadPoolExecutor(max_workers=workers, thread_name_prefix="replay") as executor:
                reports = list(executor.map(self.run_job, jobs))
        run = RunReport(reports, self.config.seed)
        self.event_bus.emit(Events.RUN_COMPLETE, run.exit_code)
        return run
