#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
流水线注册表

名称 -> (情形, 说明, 步骤构造函数)。步骤构造函数接收场景参数并返回步骤列表。
"""

from dataclasses import dataclass
from typing import Any, Callable, Dict, Iterable, List, Set

from core.base import BaseStep
from geometry.scenario import PIPELINE_CASES, CaseTag, ScenarioProfile, default_profiles
from infrastructure.exceptions import ConfigurationError
from processors.operands import FixtureRef

from . import case1a, case1b, case2, case3, lemma41, lemma42


@dataclass(frozen=True)
class PipelineSpec:
    name: str
    case: CaseTag
    title: str
    build: Callable[[ScenarioProfile], List[BaseStep]]


def _spec(name: str, title: str, build: Callable[[ScenarioProfile], List[BaseStep]]) -> PipelineSpec:
    return PipelineSpec(name, PIPELINE_CASES[name], title, build)


PIPELINES: Dict[str, PipelineSpec] = {
    spec.name: spec for spec in (
        _spec("lemma4_1", "四主曲率：切向联络系数为零", lemma41.build_steps),
        _spec("lemma4_2a", "四主曲率：a₁ ≠ 0 时混合联络系数为零", lemma42.build_curvature_steps),
        _spec("lemma4_2b", "四主曲率：a₁ = 0 时联络为仿射形式", lemma42.build_affine_steps),
        _spec("case1A", "情形 1 子情形 A 的结式塔", case1a.build_steps),
        _spec("case1B", "情形 1 子情形 B 的结式塔", case1b.build_steps),
        _spec("case2", "情形 2：三个主曲率", case2.build_steps),
        _spec("case3", "情形 3：两个主曲率", case3.build_steps),
    )
}


def get_pipeline(name: str) -> PipelineSpec:
    """
    Raises:
        ConfigurationError: 未知流水线
    """
    spec = PIPELINES.get(name)
    if spec is None:
        raise ConfigurationError("未知流水线", f"{name}（可选: {', '.join(PIPELINES)}）")
    return spec


def _collect(value: Any, found: Set[str]) -> None:
    if isinstance(value, FixtureRef):
        found.add(value.fixture_id)
    elif isinstance(value, dict):
        for item in value.values():
            _collect(item, found)
    elif isinstance(value, (list, tuple)):
        for item in value:
            _collect(item, found)


def step_fixtures(steps: Iterable[BaseStep]) -> Set[str]:
    """步骤列表中出现的基准编号（比对目标与基准前提）"""
    found: Set[str] = set()
    for step in steps:
        fixture_id = getattr(step, "fixture_id", None)
        if isinstance(fixture_id, str):
            found.add(fixture_id)
        for value in vars(step).values():
            _collect(value, found)
    return found


def fixture_usage() -> Dict[str, List[str]]:
    """
    基准编号 -> 使用它的流水线

    按各流水线的默认场景静态展开步骤列表；由场景参数产生的前提不计入。
    """
    usage: Dict[str, List[str]] = {}
    for name, spec in PIPELINES.items():
        found: Set[str] = set()
        for profile in default_profiles(name):
            found |= step_fixtures(spec.build(profile))
        for fixture_id in found:
            usage.setdefault(fixture_id, []).append(name)
    return {key: usage[key] for key in sorted(usage)}
