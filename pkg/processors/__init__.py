#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
处理器层 - 证明回放的步骤族

每个步骤读取上下文中已命名的结果，写回一个新结果或一次检查记录。
"""

from .operands import ExprRef, FixtureRef, OperandStep, expr, fixture
from .premises import Note, Premise
from .combination import (
    CancelFactor,
    ClearDenominators,
    Coefficient,
    Combine,
    Solve,
    Specialize,
    StripMonomial,
    Substitute,
    SymmetricReduce,
)
from .differentiation import Differentiate
from .elimination import DependencyDet, EliminateLinear, EliminateTrace, Resultant
from .checks import AssertCombination, AssertZero, MatchFixture, SpecializeCheck, TowerCheck, WitnessCheck
from .certify import Certify

__all__ = [
    'ExprRef',
    'FixtureRef',
    'OperandStep',
    'expr',
    'fixture',
    'Note',
    'Premise',
    'CancelFactor',
    'ClearDenominators',
    'Coefficient',
    'Combine',
    'Solve',
    'Specialize',
    'StripMonomial',
    'Substitute',
    'SymmetricReduce',
    'Differentiate',
    'DependencyDet',
    'EliminateLinear',
    'EliminateTrace',
    'Resultant',
    'AssertCombination',
    'AssertZero',
    'MatchFixture',
    'SpecializeCheck',
    'TowerCheck',
    'WitnessCheck',
    'Certify',
]
