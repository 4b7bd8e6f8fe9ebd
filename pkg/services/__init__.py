#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
服务层 - 数值预言机与情形 1 的结式塔
"""

from .numeric_oracle import (
    SamplePlan,
    SpecializationWitness,
    TowerStage,
    ZeroTestResult,
    gcd_oracle,
    residual_plan,
    specialization_witness,
    witness_plan,
    zero_test,
)
from .modular_tower import TowerResult, case1a_final, case1b_final

__all__ = [
    'SamplePlan',
    'SpecializationWitness',
    'TowerStage',
    'ZeroTestResult',
    'gcd_oracle',
    'residual_plan',
    'specialization_witness',
    'witness_plan',
    'zero_test',
    'TowerResult',
    'case1a_final',
    'case1b_final',
]
