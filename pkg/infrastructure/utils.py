#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
工具函数模块
"""

import os
import re
from fractions import Fraction
from typing import Optional, Union

from .exceptions import ConfigurationError

RationalLike = Union[int, Fraction, str]

_RATIONAL_PATTERN = re.compile(r'\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*\Z')


def parse_rational(text: RationalLike) -> Fraction:
    """
    解析有理数文本（"3"、"-1/2"）

    Args:
        text: 文本或数值

    Returns:
        Fraction

    Raises:
        ConfigurationError: 格式错误或分母为零
    """
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    match = _RATIONAL_PATTERN.match(str(text))
    if not match:
        raise ConfigurationError("有理数格式错误", str(text))
    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) else 1
    if denominator == 0:
        raise ConfigurationError("分母不能为零", str(text))
    return Fraction(numerator, denominator)


def parse_optional_rational(text: Optional[RationalLike]) -> Optional[Fraction]:
    """None 保持为 None（表示符号参数）"""
    return None if text is None else parse_rational(text)


def format_rational(value: Fraction) -> str:
    """将有理数格式化为 a 或 a/b"""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_duration(seconds: float) -> str:
    """
    格式化耗时

    Args:
        seconds: 秒数

    Returns:
        例如 "850ms"、"12.3s"、"2m05s"
    """
    if seconds < 1:
        return f"{seconds * 1000:.0f}ms"
    if seconds < 60:
        return f"{seconds:.1f}s"
    minutes, rest = divmod(int(round(seconds)), 60)
    return f"{minutes}m{rest:02d}s"


def ensure_directory(path: str) -> str:
    """确保文件所在目录存在，返回原路径"""
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    return path
