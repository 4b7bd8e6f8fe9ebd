#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
场景参数、约束与默认矩阵
"""

from fractions import Fraction

import pytest

from algebra.text_format import format_poly
from geometry.scenario import (
    PIPELINE_CASES,
    CaseTag,
    ScenarioProfile,
    build_constraints,
    default_profiles,
    eliminate_by_trace,
    profile_for,
    scalar_curvature,
    scalar_curvature_identity,
)
from infrastructure.exceptions import ConfigurationError, NotLinearInTarget, ProfileError


class TestProfileValidation:

    @pytest.mark.parametrize("kwargs", [
        dict(case_tag=CaseTag.FOUR_A, multiplicities=(0, 1, 1)),
        dict(case_tag=CaseTag.FOUR_B, multiplicities=(1, 1)),
        dict(case_tag=CaseTag.THREE, multiplicities=(2, 1)),
        dict(case_tag=CaseTag.TWO, multiplicities=(1,)),
        dict(case_tag=CaseTag.TWO, dimension=1),
        dict(case_tag=CaseTag.THREE, multiplicities=(2,), dimension=3),
        dict(case_tag=CaseTag.FOUR_A, multiplicities=(1, 1, 1), dimension=5),
    ])
    def test_invalid_profiles(self, kwargs):
        with pytest.raises(ProfileError):
            ScenarioProfile(**kwargs)

    def test_case_tag_parse(self):
        assert CaseTag.parse("foura") is CaseTag.FOUR_A
        assert CaseTag.parse("Three") is CaseTag.THREE
        with pytest.raises(ProfileError):
            CaseTag.parse("Five")

    def test_dimension_is_derived_from_multiplicities(self):
        profile = ScenarioProfile(CaseTag.FOUR_A, multiplicities=(1, 2, 3))
        assert profile.n == 7
        assert ScenarioProfile(CaseTag.THREE).n is None

    def test_is_concrete(self):
        assert not ScenarioProfile(CaseTag.FOUR_A).is_concrete
        assert ScenarioProfile(CaseTag.FOUR_A, (1, 1, 1), Fraction(0), Fraction(7)).is_concrete
        assert not ScenarioProfile(CaseTag.TWO, norm=Fraction(7), curvature=Fraction(1)).is_concrete
        assert ScenarioProfile(CaseTag.TWO, norm=Fraction(7), curvature=Fraction(1), dimension=4).is_concrete


class TestProfileData:

    def test_label(self):
        profile = ScenarioProfile(CaseTag.FOUR_A, (1, 2, 3), Fraction(-1, 2), Fraction(7))
        assert profile.label() == "FourA mult=1,2,3 c=-1/2 beta=7"
        assert ScenarioProfile(CaseTag.TWO).label() == "Two"

    def test_assignment(self):
        profile = ScenarioProfile(CaseTag.FOUR_B, (2, 1, 1), Fraction(1), Fraction(7))
        assert profile.assignment() == {"p": 2, "q": 1, "r": 1, "c": 1, "beta": 7, "n": 5}

    def test_dict_round_trip(self):
        profile = ScenarioProfile(CaseTag.THREE, (2,), Fraction(-1), Fraction(7, 2), dimension=5)
        data = profile.to_dict()
        assert data == {"case_tag": "Three", "multiplicities": [2], "curvature": "-1",
                        "norm": "7/2", "dimension": 5}
        assert ScenarioProfile.from_dict(data) == profile

    def test_from_dict_errors(self):
        with pytest.raises(ProfileError):
            ScenarioProfile.from_dict({"multiplicities": [1, 1, 1]})
        with pytest.raises(ProfileError):
            ScenarioProfile.from_dict({"case_tag": "FourA", "multiplicities": ["x", 1, 1]})
        with pytest.raises(ConfigurationError):
            ScenarioProfile.from_dict({"case_tag": "FourA", "curvature": "1/0"})

    def test_specialize(self, P):
        profile = ScenarioProfile(CaseTag.FOUR_A, (1, 1, 1), Fraction(0), Fraction(7))
        assert profile.specialize(P("p*lam_u - beta + n + c*lam1")) == P("lam_u - 3")

    def test_dimension_poly(self, table):
        assert format_poly(ScenarioProfile(CaseTag.FOUR_A).dimension_poly(table)) == "p + q + r + 1"
        assert format_poly(ScenarioProfile(CaseTag.TWO).dimension_poly(table)) == "n"
        assert ScenarioProfile(CaseTag.TWO, dimension=6).dimension_poly(table) == 6


class TestConstraints:

    def test_four_curvature_symbolic(self, table, P):
        constraints = build_constraints(ScenarioProfile(CaseTag.FOUR_A), table)
        assert constraints.trace == P("p*lam_u + q*lam_v + r*lam_w + 3*lam1")
        assert constraints.norm == P("lam1^2 + p*lam_u^2 + q*lam_v^2 + r*lam_w^2 - beta")
        assert constraints.extras == [P("n - p - q - r - 1")]

    def test_four_curvature_concrete(self, table, P):
        profile = ScenarioProfile(CaseTag.FOUR_A, (1, 1, 1), Fraction(1), Fraction(7))
        constraints = build_constraints(profile, table)
        assert constraints.trace == P("lam_u + lam_v + lam_w + 3*lam1")
        assert constraints.norm == P("lam1^2 + lam_u^2 + lam_v^2 + lam_w^2 - 7")
        assert constraints.extras == []

    def test_eliminate_by_trace(self, table, P):
        constraints = build_constraints(ScenarioProfile(CaseTag.TWO), table)
        result = eliminate_by_trace(constraints.norm, "lam", constraints)
        assert result == P("(n + 8)*lam1^2 - (n - 1)*beta").normalize()

    def test_eliminate_by_trace_matches_fixture(self, fixtures):
        table = fixtures.new_table()
        constraints = build_constraints(ScenarioProfile(CaseTag.TWO), table)
        assert constraints.trace == fixtures.get("case3.trace", table)
        result = eliminate_by_trace(constraints.norm, "lam", constraints)
        assert result == fixtures.get("case3.constraint", table)
        specialized = ScenarioProfile(CaseTag.TWO, norm=Fraction(7))
        concrete = build_constraints(specialized, table)
        assert eliminate_by_trace(concrete.norm, "lam", concrete) == specialized.specialize(result)

    def test_eliminate_by_trace_needs_linear_target(self, table):
        constraints = build_constraints(ScenarioProfile(CaseTag.TWO), table)
        with pytest.raises(NotLinearInTarget):
            eliminate_by_trace(constraints.norm, "lam_u", constraints)


class TestScalarCurvature:

    def test_value(self):
        assert scalar_curvature(4, 1, 0, 5) == 17
        assert scalar_curvature(3, Fraction(-1), Fraction(1, 3), 2) == -3

    def test_identity_vanishes_at_value(self, table):
        identity = scalar_curvature_identity(table)
        point = {"n": 4, "c": 1, "H": 0, "beta": 5, "rho": 17}
        assert identity.evaluate(point) == 0

    def test_dimension_bound(self):
        with pytest.raises(ProfileError):
            scalar_curvature(1, 0, 0, 0)


class TestDefaults:

    @pytest.mark.parametrize("pipeline, count", [
        ("lemma4_1", 1), ("lemma4_2a", 1), ("lemma4_2b", 1),
        ("case1A", 9), ("case1B", 9), ("case2", 7), ("case3", 1),
    ])
    def test_counts(self, pipeline, count):
        profiles = default_profiles(pipeline)
        assert len(profiles) == count
        assert all(p.case_tag is PIPELINE_CASES[pipeline] for p in profiles)

    def test_case1_matrix(self):
        profiles = default_profiles("case1A")
        assert {p.multiplicities for p in profiles} == {(1, 1, 1), (2, 1, 1), (1, 2, 3)}
        assert {p.curvature for p in profiles} == {-1, 0, 1}
        assert all(p.norm == 7 and p.is_concrete for p in profiles)

    def test_case2_matrix(self):
        profiles = default_profiles("case2")
        assert {(p.dimension, p.multiplicities) for p in profiles} == {(5, (2,)), (6, (3,)), (4, (2,))}
        assert [p.curvature for p in profiles if p.dimension == 4] == [0]

    def test_case3_default(self):
        assert default_profiles("case3") == [ScenarioProfile(CaseTag.TWO, norm=Fraction(7))]

    def test_unknown_pipeline(self):
        with pytest.raises(ProfileError):
            default_profiles("case4")


class TestProfileFor:

    def test_four_curvature(self):
        profile = profile_for("case1A", multiplicities=[1, 2, 3], curvature="-1/2", norm="7")
        assert profile == ScenarioProfile(CaseTag.FOUR_A, (1, 2, 3), Fraction(-1, 2), Fraction(7))

    def test_case2_pair(self):
        profile = profile_for("case2", case2=[5, 2], curvature="1")
        assert profile.dimension == 5
        assert profile.multiplicities == (2,)

    def test_case2_pair_needs_two_values(self):
        with pytest.raises(ProfileError):
            profile_for("case2", case2=[5])

    def test_case3_dimension(self):
        assert profile_for("case3", dimension=4).n == 4

    def test_invalid_multiplicities(self):
        with pytest.raises(ProfileError):
            profile_for("case1A", multiplicities=[0, 1, 1])
