#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
符号表模块

符号编号按注册顺序稠密分配；规范注册顺序与基准文件一致，
从而保证规范文本输出逐字节可复现。
"""

import re
import threading
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Optional, Tuple

from infrastructure.logger import LogManager

logger = LogManager.get_logger("bicons.algebra")

NAME_PATTERN = re.compile(r'[A-Za-z_][A-Za-z0-9_]*\Z')

# 与 data/fixtures.json 中 "symbols" 一致的规范顺序
CANONICAL_SYMBOLS: Tuple[str, ...] = (
    "lam1", "lam_u", "lam_v", "lam_w",
    "w_uu1", "w_vv1", "w_ww1", "w_vv_u", "w_ww_u",
    "w_uv_w", "w_vu_w", "w_uw_v", "w_wu_v", "w_vw_u", "w_wv_u",
    "a1", "alpha", "phi", "beta", "c", "p", "q", "r", "n", "mu",
    "lam", "L", "H", "rho",
    "e1_lam1", "e1e1_lam1",
    "eu_lam_u", "eu_lam_v", "eu_lam_w", "eu_a1",
    "eu_w_uu1", "eu_w_vv1", "eu_w_ww1",
    "v0", "v1", "v2", "v3", "v4", "v5", "v6",
    "v7", "v8", "v9", "v10", "v11", "v12", "v13",
    "e1_alpha", "e1_phi", "e1_lam_u", "e1_mu",
)

# 在所有导子下取零的常数参数
CONSTANT_PARAMETERS = frozenset({"n", "p", "q", "r", "c", "beta"})


@dataclass(frozen=True)
class Symbol:
    """不定元"""
    id: int
    name: str

    def __str__(self) -> str:
        return self.name


def alias_name(derivation: str, base: str) -> str:
    """
    不透明导数别名的命名规则

    e1 作用于 e1_lam1 得到 e1e1_lam1，其余情况为 "<导子>_<符号>"。
    """
    if base.startswith(f"{derivation}_"):
        return f"{derivation}{base}"
    return f"{derivation}_{base}"


class SymbolTable:
    """
    符号注册表

    注册是幂等的；别名创建加锁，可被并发流水线共享。
    """

    def __init__(self, names: Iterable[str] = ()):
        self._symbols: List[Symbol] = []
        self._by_name: Dict[str, Symbol] = {}
        self._aliases: Dict[Tuple[str, int], Symbol] = {}
        self._lock = threading.RLock()
        for name in names:
            self.register(name)

    @classmethod
    def canonical(cls) -> 'SymbolTable':
        """按规范顺序预注册全部符号的新表"""
        return cls(CANONICAL_SYMBOLS)

    def register(self, name: str) -> Symbol:
        """
        注册符号（已存在时直接返回）

        Raises:
            ValueError: 名称不合法
        """
        existing = self._by_name.get(name)
        if existing is not None:
            return existing
        if not NAME_PATTERN.match(name):
            raise ValueError(f"非法符号名: {name!r}")
        with self._lock:
            existing = self._by_name.get(name)
            if existing is not None:
                return existing
            symbol = Symbol(len(self._symbols), name)
            self._symbols.append(symbol)
            self._by_name[name] = symbol
            return symbol

    def alias(self, derivation: str, base: Symbol) -> Symbol:
        """
        获取（必要时创建）不透明导数别名

        Args:
            derivation: 导子名称，例如 "e1"、"eu"
            base: 被求导的符号

        Returns:
            别名符号，每个 (导子, 符号) 对唯一
        """
        key = (derivation, base.id)
        with self._lock:
            found = self._aliases.get(key)
            if found is not None:
                return found
            name = alias_name(derivation, base.name)
            created = name not in self._by_name
            symbol = self.register(name)
            self._aliases[key] = symbol
        if created:
            logger.info(f"新建不透明导数符号 {name} = {derivation}({base.name})")
        else:
            logger.debug(f"使用不透明导数符号 {name} = {derivation}({base.name})")
        return symbol

    def aliases(self) -> Dict[Tuple[str, str], Symbol]:
        """已使用的别名：(导子, 原符号名) -> 别名"""
        with self._lock:
            return {(d, self._symbols[i].name): s for (d, i), s in self._aliases.items()}

    def get(self, name: str) -> Optional[Symbol]:
        return self._by_name.get(name)

    def __getitem__(self, name: str) -> Symbol:
        symbol = self._by_name.get(name)
        if symbol is None:
            raise KeyError(name)
        return symbol

    def by_id(self, symbol_id: int) -> Symbol:
        return self._symbols[symbol_id]

    def name_of(self, symbol_id: int) -> str:
        return self._symbols[symbol_id].name

    def names(self) -> List[str]:
        return [s.name for s in self._symbols]

    def __contains__(self, name: object) -> bool:
        return name in self._by_name

    def __len__(self) -> int:
        return len(self._symbols)

    def __iter__(self) -> Iterator[Symbol]:
        return iter(list(self._symbols))

    def __repr__(self) -> str:
        return f"<SymbolTable size={len(self)}>"


_default_table: Optional[SymbolTable] = None
_default_lock = threading.Lock()


def default_table() -> SymbolTable:
    """进程内共享的规范符号表"""
    global _default_table
    with _default_lock:
        if _default_table is None:
            _default_table = SymbolTable.canonical()
        return _default_table
