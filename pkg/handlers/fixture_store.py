#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
基准存储 - 读取 fixtures.json

文件格式：{"symbols": [...规范注册顺序...], "fixtures": {编号: 规范文本}}
条目也可以写成 {"text": 规范文本, "label": 出处标签}，标签只用于报告。
"""

import json
import os
import threading
from typing import Any, Dict, List, Optional, Set, Tuple

from algebra.polynomial import MultiPoly
from algebra.symbols import SymbolTable
from algebra.text_format import parse_poly
from infrastructure.exceptions import FixtureFileError, ParseError, UnknownFixture
from infrastructure.logger import LogManager

logger = LogManager.get_logger("bicons.fixtures")

DEFAULT_FIXTURES_PATH = os.path.join(
    os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "data", "fixtures.json")


def _split_entries(entries: Dict[str, Any], path: str) -> Tuple[Dict[str, str], Dict[str, str]]:
    """
    拆出文本与标签

    Raises:
        FixtureFileError: 条目既不是字符串也不是带 text 的对象
    """
    texts: Dict[str, str] = {}
    labels: Dict[str, str] = {}
    for fixture_id, entry in entries.items():
        if isinstance(entry, str):
            texts[fixture_id] = entry
        elif isinstance(entry, dict) and isinstance(entry.get("text"), str):
            texts[fixture_id] = entry["text"]
            if entry.get("label"):
                labels[fixture_id] = str(entry["label"])
        else:
            raise FixtureFileError(f"基准 {fixture_id} 的条目格式无效", path)
    return texts, labels


class FixtureStore:
    """
    基准存储

    解析结果按 (符号表, 编号) 缓存；记录被访问过的编号以便统计覆盖率。
    """

    def __init__(self, texts: Dict[str, str], symbols: List[str] = None, path: str = "",
                 labels: Optional[Dict[str, str]] = None):
        self._texts = dict(texts)
        self._labels = dict(labels or {})
        self.symbols = list(symbols or [])
        self.path = path
        self._cache: Dict[Tuple[int, str], MultiPoly] = {}
        self._touched: Set[str] = set()
        self._lock = threading.Lock()

    @classmethod
    def load(cls, path: Optional[str] = None) -> 'FixtureStore':
        """
        从文件加载

        Args:
            path: 文件路径，缺省为仓库自带的 data/fixtures.json

        Raises:
            FixtureFileError: 文件不存在或格式错误
        """
        path = path or DEFAULT_FIXTURES_PATH
        if not os.path.isfile(path):
            raise FixtureFileError("基准文件不存在", path)
        try:
            with open(path, 'r', encoding='utf-8') as f:
                data = json.load(f)
        except (OSError, json.JSONDecodeError) as e:
            raise FixtureFileError("无法读取基准文件", f"{path}: {e}") from e
        if not isinstance(data, dict) or not isinstance(data.get("fixtures"), dict):
            raise FixtureFileError("基准文件缺少 fixtures 映射", path)
        texts, labels = _split_entries(data["fixtures"], path)
        logger.debug(f"已加载 {len(texts)} 条基准（{len(labels)} 条带标签）: {path}")
        return cls(texts, data.get("symbols", []), path, labels)

    def new_table(self) -> SymbolTable:
        """按文件声明的符号顺序建立符号表"""
        return SymbolTable(self.symbols)

    # ============ 查询 ============

    def ids(self) -> List[str]:
        return sorted(self._texts)

    def has(self, fixture_id: str) -> bool:
        return fixture_id in self._texts

    def text(self, fixture_id: str) -> str:
        """
        Raises:
            UnknownFixture: 编号不存在
        """
        if fixture_id not in self._texts:
            raise UnknownFixture("未知的基准编号", fixture_id)
        return self._texts[fixture_id]

    def label(self, fixture_id: str) -> Optional[str]:
        """出处标签，没有时为 None"""
        return self._labels.get(fixture_id)

    def get(self, fixture_id: str, table: SymbolTable) -> MultiPoly:
        """
        解析后的基准多项式

        Raises:
            UnknownFixture: 编号不存在
            FixtureFileError: 文本无法解析
        """
        text = self.text(fixture_id)
        key = (id(table), fixture_id)
        with self._lock:
            self._touched.add(fixture_id)
            cached = self._cache.get(key)
        if cached is not None and cached.table is table:
            return cached
        try:
            poly = parse_poly(text, table)
        except ParseError as e:
            raise FixtureFileError(f"基准 {fixture_id} 无法解析", str(e)) from e
        with self._lock:
            self._cache[key] = poly
        return poly

    def touched(self) -> List[str]:
        with self._lock:
            return sorted(self._touched)

    def untouched(self) -> List[str]:
        touched = set(self.touched())
        return [i for i in self.ids() if i not in touched]

    def with_override(self, fixture_id: str, text: str) -> 'FixtureStore':
        """替换单条基准的副本（用于注入错误基准）"""
        texts = dict(self._texts)
        texts[fixture_id] = text
        return FixtureStore(texts, self.symbols, self.path, self._labels)

    def __len__(self) -> int:
        return len(self._texts)

    def __contains__(self, fixture_id: object) -> bool:
        return fixture_id in self._texts
