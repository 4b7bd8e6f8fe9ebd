#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
几何层 - 标架导子与场景设定
"""

from .derivation import Derivation, Rule, RuleKind, check_leibniz, constant_rules
from .frames import affine_connection, codazzi_rewrites, connection_rewrites, standard_derivations
from .scenario import (
    PIPELINE_CASES,
    CaseTag,
    ConstraintSet,
    ScenarioProfile,
    build_constraints,
    default_profiles,
    eliminate_by_trace,
    profile_for,
    scalar_curvature,
    scalar_curvature_identity,
)

__all__ = [
    'Derivation',
    'Rule',
    'RuleKind',
    'check_leibniz',
    'constant_rules',
    'affine_connection',
    'codazzi_rewrites',
    'connection_rewrites',
    'standard_derivations',
    'PIPELINE_CASES',
    'CaseTag',
    'ConstraintSet',
    'ScenarioProfile',
    'build_constraints',
    'default_profiles',
    'eliminate_by_trace',
    'profile_for',
    'scalar_curvature',
    'scalar_curvature_identity',
]
