#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
代数层 - 精确多项式运算、有理式与消元
"""

from .symbols import CANONICAL_SYMBOLS, CONSTANT_PARAMETERS, Symbol, SymbolTable, default_table
from .polynomial import MultiPoly, term_guard
from .gcd import cofactors, poly_gcd
from .rational import RationalExpr, substitute_rational
from .text_format import format_poly, parse_poly
from .elimination import (
    EliminationStep,
    SideCondition,
    SylvesterMatrix,
    cancel_factor,
    check_combination,
    clear_denominators,
    dependency_determinant,
    determinant,
    eliminate_linear,
    formal_degree_factor,
    resultant,
    resultant_step,
    solve_linear,
    substitute_linear,
    sylvester_matrix,
)
from .reductions import strip_monomial_content, symmetric_reduce

__all__ = [
    'CANONICAL_SYMBOLS',
    'CONSTANT_PARAMETERS',
    'Symbol',
    'SymbolTable',
    'default_table',
    'MultiPoly',
    'term_guard',
    'cofactors',
    'poly_gcd',
    'RationalExpr',
    'substitute_rational',
    'format_poly',
    'parse_poly',
    'EliminationStep',
    'SideCondition',
    'SylvesterMatrix',
    'cancel_factor',
    'check_combination',
    'clear_denominators',
    'dependency_determinant',
    'determinant',
    'eliminate_linear',
    'formal_degree_factor',
    'resultant',
    'resultant_step',
    'solve_linear',
    'substitute_linear',
    'sylvester_matrix',
    'strip_monomial_content',
    'symmetric_reduce',
]
