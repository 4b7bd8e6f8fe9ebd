#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
配置管理模块

优先级：默认值 < 配置文件 < 环境变量（前缀 BICONS_） < 命令行参数
"""

import json
import os
from dataclasses import asdict, dataclass, field, fields
from typing import Any, Dict, List, Optional

from .exceptions import ConfigurationError

ENV_PREFIX = "BICONS_"

PIPELINE_NAMES = (
    "lemma4_1", "lemma4_2a", "lemma4_2b", "case1A", "case1B", "case2", "case3",
)


@dataclass
class RunConfig:
    """回放运行配置"""

    # ============ 流水线选择 ============
    pipelines: List[str] = field(default_factory=lambda: ["all"])
    profiles: List[Dict[str, Any]] = field(default_factory=list)

    # ============ 场景参数 ============
    multiplicities: Optional[List[int]] = None
    curvature: Optional[str] = None
    norm: Optional[str] = None
    case2: Optional[List[int]] = None
    dimension: Optional[int] = None

    # ============ 随机采样 ============
    seed: int = 20240611
    residual_bound: int = 20
    residual_trials: int = 16
    witness_bound: int = 50
    witness_trials: int = 64

    # ============ 资源保护 ============
    max_terms: int = 5_000_000
    budget_secs: float = 1800.0
    workers: int = 1

    # ============ 输出 ============
    output_format: str = "text"  # text, json
    include_timings: bool = False
    fixtures_path: str = ""
    log_dir: str = ""
    log_level: str = "INFO"

    def to_dict(self) -> dict:
        """转换为字典"""
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> 'RunConfig':
        """从字典创建，忽略未知字段"""
        valid_fields = {f.name for f in fields(cls)}
        filtered_data = {k: v for k, v in data.items() if k in valid_fields}
        return cls(**filtered_data)

    def selected_pipelines(self) -> List[str]:
        """展开 "all" 后的流水线列表（保持给定顺序并去重）"""
        selected: List[str] = []
        for name in self.pipelines:
            names = PIPELINE_NAMES if name == "all" else (name,)
            for item in names:
                if item not in selected:
                    selected.append(item)
        return selected


def _split_ints(text: str) -> List[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError as e:
        raise ConfigurationError("整数列表格式错误", text) from e


# 环境变量名 -> (字段名, 转换函数)
_ENV_FIELDS = {
    "SEED": ("seed", int),
    "MAX_TERMS": ("max_terms", int),
    "BUDGET_SECS": ("budget_secs", float),
    "WORKERS": ("workers", int),
    "FORMAT": ("output_format", str),
    "FIXTURES": ("fixtures_path", str),
    "LOG_DIR": ("log_dir", str),
    "LOG_LEVEL": ("log_level", str),
    "PIPELINES": ("pipelines", lambda s: [p.strip() for p in s.split(",") if p.strip()]),
    "MULTIPLICITIES": ("multiplicities", _split_ints),
    "CURVATURE": ("curvature", str),
    "NORM": ("norm", str),
}


class ConfigManager:
    """配置管理器"""

    def __init__(self, config_file: Optional[str] = None):
        self.config_file = config_file
        self.config = RunConfig()

    def load_config(self) -> RunConfig:
        """
        加载配置文件（若指定）

        Raises:
            ConfigurationError: 文件不存在或不是合法 JSON 对象
        """
        if self.config_file:
            if not os.path.exists(self.config_file):
                raise ConfigurationError("配置文件不存在", self.config_file)
            try:
                with open(self.config_file, 'r', encoding='utf-8') as f:
                    data = json.load(f)
            except (OSError, json.JSONDecodeError) as e:
                raise ConfigurationError("加载配置失败", str(e)) from e
            if not isinstance(data, dict):
                raise ConfigurationError("配置文件顶层必须是对象", self.config_file)
            self.config = RunConfig.from_dict(data)
        return self.config

    def apply_environment(self, environ: Optional[Dict[str, str]] = None) -> RunConfig:
        """
        应用 BICONS_ 前缀的环境变量覆盖

        Args:
            environ: 环境变量字典，默认 os.environ
        """
        environ = os.environ if environ is None else environ
        for suffix, (name, convert) in _ENV_FIELDS.items():
            raw = environ.get(ENV_PREFIX + suffix)
            if raw is None or raw == "":
                continue
            try:
                setattr(self.config, name, convert(raw))
            except ValueError as e:
                raise ConfigurationError(f"环境变量 {ENV_PREFIX + suffix} 无效", raw) from e
        return self.config

    def update_config(self, **kwargs) -> RunConfig:
        """更新配置，值为 None 的参数被忽略"""
        for key, value in kwargs.items():
            if value is not None and hasattr(self.config, key):
                setattr(self.config, key, value)
        return self.config

    def save_config(self, path: Optional[str] = None) -> bool:
        """保存配置"""
        target = path or self.config_file
        if not target:
            return False
        try:
            with open(target, 'w', encoding='utf-8') as f:
                json.dump(self.config.to_dict(), f, ensure_ascii=False, indent=2)
            return True
        except OSError:
            return False

    def validate(self) -> List[str]:
        """验证配置，返回错误信息列表"""
        errors = []
        config = self.config

        if not config.pipelines:
            errors.append("至少需要一条流水线")
        for name in config.pipelines:
            if name != "all" and name not in PIPELINE_NAMES:
                errors.append(f"未知流水线: {name}")

        if config.max_terms <= 0:
            errors.append("项数上限必须为正")
        if config.budget_secs <= 0:
            errors.append("时间预算必须为正")
        if config.workers < 1:
            errors.append("工作线程数至少为 1")
        if config.residual_bound < 2 or config.witness_bound < 2:
            errors.append("采样范围至少为 2")
        if config.residual_trials < 1 or config.witness_trials < 1:
            errors.append("采样次数至少为 1")
        if config.output_format not in ("text", "json"):
            errors.append(f"未知输出格式: {config.output_format}")

        if config.multiplicities is not None:
            if len(config.multiplicities) != 3:
                errors.append("重数必须是 p,q,r 三个整数")
            elif any(m < 1 for m in config.multiplicities):
                errors.append("重数必须不小于 1")
        if config.case2 is not None:
            if len(config.case2) != 2:
                errors.append("case2 参数必须是 n,p 两个整数")
            else:
                n, p = config.case2
                if p < 1 or n - p - 1 < 1:
                    errors.append("case2 需要 p >= 1 且 n - p - 1 >= 1")
        if config.dimension is not None and config.dimension < 2:
            errors.append("维数 n 必须不小于 2")

        return errors
