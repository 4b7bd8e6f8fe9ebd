#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
多项式规范文本的打印与解析

规范文本：项按分次字典序降序，因子按符号编号排列，显式 "^" 幂与 "*" 乘积，
非常数项省略系数 1，有理系数写作 a/b，零多项式写作 "0"。
"""

import re
from fractions import Fraction
from typing import List, Optional, Tuple

from infrastructure.exceptions import ParseError
from .polynomial import MultiPoly
from .symbols import SymbolTable


def _format_coefficient(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_poly(poly: MultiPoly) -> str:
    """
    规范文本输出

    Args:
        poly: 多项式

    Returns:
        规范文本，与基准文件中的写法逐字节一致
    """
    if poly.is_zero():
        return "0"
    table = poly.table
    pieces: List[str] = []
    for index, (e, c) in enumerate(poly.sorted_terms()):
        value = Fraction(c)
        negative = value < 0
        if negative:
            value = -value
        factors = []
        for symbol_id, power in enumerate(e):
            if power == 1:
                factors.append(table.name_of(symbol_id))
            elif power:
                factors.append(f"{table.name_of(symbol_id)}^{power}")
        coefficient = _format_coefficient(value)
        if not factors:
            body = coefficient
        elif coefficient == "1":
            body = "*".join(factors)
        else:
            body = coefficient + "*" + "*".join(factors)
        if index == 0:
            pieces.append(("-" if negative else "") + body)
        else:
            pieces.append((" - " if negative else " + ") + body)
    return "".join(pieces)


# ============ 解析 ============

_TOKEN = re.compile(r'\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))')

Token = Tuple[str, str, int]  # (类别, 文本, 位置)


def _tokenize(text: str) -> List[Token]:
    tokens: List[Token] = []
    position = 0
    length = len(text)
    while position < length:
        match = _TOKEN.match(text, position)
        if match is None:
            break
        number, name, other = match.groups()
        start = match.start(match.lastindex) if match.lastindex else position
        if number is not None:
            tokens.append(("num", number, start))
        elif name is not None:
            tokens.append(("name", name, start))
        elif other is not None:
            if other not in "+-*/^()":
                raise ParseError("无法识别的字符", f"{other!r} 位于 {start}", position=start)
            tokens.append(("op", other, start))
        position = match.end()
    return tokens


class _Parser:
    """递归下降解析器：支持括号、一元负号、隐式乘法、除以常数与非负整数幂"""

    def __init__(self, text: str, table: SymbolTable):
        self.text = text
        self.table = table
        self.tokens = _tokenize(text)
        self.index = 0

    def _peek(self) -> Optional[Token]:
        return self.tokens[self.index] if self.index < len(self.tokens) else None

    def _next(self) -> Token:
        token = self._peek()
        if token is None:
            raise ParseError("表达式意外结束", self.text, position=len(self.text))
        self.index += 1
        return token

    def _error(self, message: str, token: Optional[Token]) -> ParseError:
        position = token[2] if token else len(self.text)
        return ParseError(message, f"位置 {position}: {self.text}", position=position)

    def parse(self) -> MultiPoly:
        if not self.tokens:
            raise ParseError("空表达式", repr(self.text), position=0)
        result = self._expr()
        token = self._peek()
        if token is not None:
            raise self._error("多余的输入", token)
        return result

    def _expr(self) -> MultiPoly:
        result = self._term()
        while True:
            token = self._peek()
            if token is None or token[0] != "op" or token[1] not in "+-":
                return result
            self._next()
            right = self._term()
            result = result + right if token[1] == "+" else result - right

    def _starts_factor(self, token: Optional[Token]) -> bool:
        if token is None:
            return False
        return token[0] in ("num", "name") or token[1] == "("

    def _term(self) -> MultiPoly:
        result = self._unary()
        while True:
            token = self._peek()
            if token is not None and token[0] == "op" and token[1] == "*":
                self._next()
                result = result * self._unary()
            elif token is not None and token[0] == "op" and token[1] == "/":
                self._next()
                divisor = self._unary()
                if not divisor.is_constant() or divisor.is_zero():
                    raise self._error("只能除以非零常数", token)
                result = result.scale(Fraction(1) / divisor.constant_value())
            elif self._starts_factor(token):
                result = result * self._unary()
            else:
                return result

    def _unary(self) -> MultiPoly:
        token = self._peek()
        if token is not None and token[0] == "op" and token[1] in "+-":
            self._next()
            operand = self._unary()
            return -operand if token[1] == "-" else operand
        return self._power()

    def _power(self) -> MultiPoly:
        base = self._atom()
        token = self._peek()
        if token is not None and token[0] == "op" and token[1] == "^":
            self._next()
            exponent = self._next()
            if exponent[0] != "num":
                raise self._error("指数必须是非负整数", exponent)
            base = base ** int(exponent[1])
        return base

    def _atom(self) -> MultiPoly:
        token = self._next()
        kind, text, _ = token
        if kind == "num":
            return MultiPoly.constant(self.table, int(text))
        if kind == "name":
            try:
                return MultiPoly.variable(self.table, text)
            except ValueError as e:
                raise self._error(str(e), token) from e
        if text == "(":
            inner = self._expr()
            closing = self._peek()
            if closing is None or closing[1] != ")":
                raise self._error("缺少右括号", closing)
            self._next()
            return inner
        raise self._error(f"意外的符号 {text!r}", token)


def parse_poly(text: str, table: SymbolTable) -> MultiPoly:
    """
    解析多项式文本，未知标识符自动注册到 table

    Raises:
        ParseError: 语法错误
    """
    return _Parser(text, table).parse()
