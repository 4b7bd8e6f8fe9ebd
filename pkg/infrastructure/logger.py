#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
日志管理模块

根日志器名为 "bicons"，各模块通过 LogManager.get_logger("bicons.xxx") 取得子日志器；
子日志器自身不挂处理器，记录向上传播给根日志器。根日志器的处理器由命令行在
每次调用时通过 LogManager.configure 重新安装，重复调用不会叠加。

默认只写入内存里的有界缓冲，不碰标准输出（报告占用标准输出）。
"""

import logging
import sys
import threading
from collections import deque
from datetime import datetime
from pathlib import Path
from typing import Deque, Dict, List, Optional

ROOT_LOGGER = "bicons"
LOG_FORMAT = '[%(asctime)s] [%(levelname)s] [%(threadName)s] %(message)s'
DATE_FORMAT = '%Y-%m-%d %H:%M:%S'


class MemoryHandler(logging.Handler):
    """保留最近若干行格式化后的日志"""

    def __init__(self, capacity: int = 1000):
        super().__init__()
        self.lines: Deque[str] = deque(maxlen=capacity)

    def emit(self, record: logging.LogRecord) -> None:
        try:
            self.lines.append(self.format(record))
        except Exception:
            self.handleError(record)


class Logger:
    """
    日志器包装

    Args:
        name: logging 中的日志器名称
    """

    def __init__(self, name: str = ROOT_LOGGER):
        self.name = name
        self.logger = logging.getLogger(name)

    def info(self, message: str):
        self.logger.info(message)

    def error(self, message: str):
        self.logger.error(message)

    def warning(self, message: str):
        self.logger.warning(message)

    def debug(self, message: str):
        self.logger.debug(message)

    def exception(self, message: str):
        """记录异常日志（包含堆栈信息）"""
        self.logger.exception(message)


class LogManager:
    """
    日志管理器

    按名称缓存 Logger；根日志器的处理器统一在这里安装和替换。
    """

    _loggers: Dict[str, Logger] = {}
    _handlers: List[logging.Handler] = []
    _memory: Optional[MemoryHandler] = None
    _log_file: Optional[Path] = None
    _lock = threading.Lock()

    @classmethod
    def get_logger(cls, name: Optional[str] = None) -> Logger:
        key = name or ROOT_LOGGER
        with cls._lock:
            if key not in cls._loggers:
                cls._loggers[key] = Logger(key)
            cls._ensure_memory()
            return cls._loggers[key]

    @classmethod
    def configure(cls, log_dir: Optional[str] = None, level: int = logging.INFO,
                  console: bool = False) -> Logger:
        """
        安装根日志器的处理器（由命令行调用）

        Args:
            log_dir: 日志目录，为空时不写文件
            level: 日志级别
            console: 是否同时输出到标准错误

        Returns:
            根 Logger
        """
        formatter = logging.Formatter(LOG_FORMAT, datefmt=DATE_FORMAT)
        handlers: List[logging.Handler] = []
        log_file = None

        if log_dir:
            log_path = Path(log_dir)
            log_path.mkdir(parents=True, exist_ok=True)
            log_file = log_path / f"replay_{datetime.now().strftime('%Y%m%d')}.log"
            file_handler = logging.FileHandler(log_file, encoding='utf-8', mode='a')
            file_handler.setLevel(logging.DEBUG)
            handlers.append(file_handler)

        if console:
            console_handler = logging.StreamHandler(sys.stderr)
            console_handler.setLevel(level)
            handlers.append(console_handler)

        for handler in handlers:
            handler.setFormatter(formatter)

        with cls._lock:
            cls._install(handlers, level)
            cls._log_file = log_file
            root = cls._loggers.setdefault(ROOT_LOGGER, Logger(ROOT_LOGGER))
        return root

    @classmethod
    def _ensure_memory(cls) -> MemoryHandler:
        root = logging.getLogger(ROOT_LOGGER)
        if cls._memory is None:
            cls._memory = MemoryHandler()
            cls._memory.setFormatter(logging.Formatter(LOG_FORMAT, datefmt=DATE_FORMAT))
        if cls._memory not in root.handlers:
            root.addHandler(cls._memory)
            root.propagate = False
        return cls._memory

    @classmethod
    def _install(cls, handlers: List[logging.Handler], level: int) -> None:
        root = logging.getLogger(ROOT_LOGGER)
        # 根日志器上的处理器全部由这里管理，包括其他途径挂上的
        for old in list(root.handlers):
            root.removeHandler(old)
            if old is not cls._memory:
                old.close()

        cls._handlers = [cls._ensure_memory(), *handlers]
        for handler in cls._handlers:
            root.addHandler(handler)
        root.setLevel(level)
        root.propagate = False

    @classmethod
    def recent_logs(cls, lines: int = 100) -> List[str]:
        """内存缓冲中最近的日志行"""
        if cls._memory is None:
            return []
        return list(cls._memory.lines)[-lines:]

    @classmethod
    def log_file(cls) -> str:
        """当前日志文件路径，未启用文件日志时为空串"""
        return str(cls._log_file) if cls._log_file else ""
