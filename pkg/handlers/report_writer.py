#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
报告读写 - JSON 与文本

JSON 使用排序后的键与固定缩进，同一运行重复写出逐字节相同。
"""

import json
import os
import threading
from typing import Optional

from infrastructure.exceptions import ReportFileError
from infrastructure.logger import LogManager
from infrastructure.utils import ensure_directory
from replay.report import RunReport

logger = LogManager.get_logger("bicons.reports")

FORMATS = ("text", "json")


class ReportWriter:
    """
    报告写出器

    多个工作线程共享一个实例时写文件串行进行。
    """

    def __init__(self, output_format: str = "text"):
        if output_format not in FORMATS:
            raise ReportFileError("未知的报告格式", output_format)
        self.output_format = output_format
        self._lock = threading.Lock()

    def render(self, run: RunReport, output_format: Optional[str] = None) -> str:
        fmt = output_format or self.output_format
        if fmt == "json":
            return json.dumps(run.to_dict(), ensure_ascii=False, indent=2, sort_keys=True) + "\n"
        if fmt == "text":
            return run.render_text() + "\n"
        raise ReportFileError("未知的报告格式", fmt)

    def write(self, run: RunReport, path: str, output_format: Optional[str] = None) -> str:
        """
        写出报告文件

        Returns:
            写出的路径

        Raises:
            ReportFileError: 无法写入
        """
        content = self.render(run, output_format)
        with self._lock:
            try:
                ensure_directory(path)
                with open(path, 'w', encoding='utf-8', newline='\n') as f:
                    f.write(content)
            except OSError as e:
                raise ReportFileError("无法写入报告", f"{path}: {e}") from e
        logger.info(f"报告已写出: {path}")
        return path

    @staticmethod
    def load(path: str) -> RunReport:
        """
        读取 JSON 报告

        Raises:
            ReportFileError: 文件不存在、不是 JSON 或版本不符
        """
        if not os.path.isfile(path):
            raise ReportFileError("报告文件不存在", path)
        try:
            with open(path, 'r', encoding='utf-8') as f:
                data = json.load(f)
        except (OSError, json.JSONDecodeError) as e:
            raise ReportFileError("无法读取报告", f"{path}: {e}") from e
        return RunReport.from_dict(data)
