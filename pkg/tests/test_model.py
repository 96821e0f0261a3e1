from fractions import Fraction

import pytest

from conftest import CAP, TENT, W, make_instance
from tetherpath.errors import (InstanceError, NonAlternating, NonMonotoneTime,
                               SpeedMismatch, TetherTooShort)
from tetherpath.exact import RootBudget
from tetherpath.model import (LOWER, UPPER, Instance, TurnPoint, build_corridor,
                              effective_budget, mirror_corridor, validate_instance)


def points(reflex):
    return [p.point for p in reflex]


class TestEffectiveBudget:
    def test_zero_separation(self):
        assert effective_budget(2, 0) == 2

    def test_pythagorean(self):
        assert effective_budget(5, 3) == 4

    def test_too_short(self):
        with pytest.raises(TetherTooShort):
            effective_budget(1, 2)

    def test_equal_lengths_rejected(self):
        with pytest.raises(TetherTooShort):
            effective_budget(3, 3)

    def test_irrational_budget_kept_symbolic(self):
        budget = effective_budget(2, 1)
        assert isinstance(budget, RootBudget)
        assert budget.squared == 3
        assert budget > Fraction(17, 10)
        assert budget < Fraction(18, 10)


class TestValidation:
    def test_valid_instances(self):
        for instance in (TENT, W, CAP):
            validate_instance(instance)

    def test_speed_mismatch(self):
        with pytest.raises(SpeedMismatch):
            validate_instance(make_instance(1, 1, [(0, 0), (2, 3)]))

    def test_non_alternating(self):
        with pytest.raises(NonAlternating):
            validate_instance(make_instance(1, 1, [(0, 0), (1, 1), (2, 2)]))

    def test_non_monotone_time(self):
        with pytest.raises(NonMonotoneTime):
            validate_instance(make_instance(1, 1, [(0, 0), (0, 0)]))

    def test_single_turn_point(self):
        with pytest.raises(InstanceError):
            validate_instance(make_instance(1, 1, [(0, 0)]))

    def test_errors_are_value_errors(self):
        with pytest.raises(ValueError):
            validate_instance(make_instance(0, 1, [(0, 0), (1, 0)]))


class TestCorridor:
    def test_tent_chains(self):
        corridor = build_corridor(TENT)
        assert corridor.lower_points() == [(0, -1), (3, 2), (6, -1)]
        assert corridor.upper_points() == [(0, 1), (3, 4), (6, 1)]

    def test_band_width(self):
        corridor = build_corridor(W)
        assert all(u - l == 2 for l, u in zip(corridor.lower, corridor.upper))
        assert corridor.upper_at(Fraction(9, 2)) - corridor.lower_at(Fraction(9, 2)) == 2

    def test_tent_reflex(self):
        corridor = build_corridor(TENT)
        assert points(corridor.lower_reflex) == [(3, 2)]
        assert points(corridor.upper_reflex) == [(0, 1), (6, 1)]

    def test_w_reflex(self):
        corridor = build_corridor(W)
        assert points(corridor.lower_reflex) == [(3, 2), (8, 3)]
        assert points(corridor.upper_reflex) == [(0, 1), (5, 2), (10, 3)]

    def test_cap_endpoint_peaks(self):
        corridor = build_corridor(CAP)
        assert points(corridor.lower_reflex) == [(0, 2), (6, 2)]
        assert points(corridor.upper_reflex) == [(3, 1)]

    def test_reflex_points_match_vertices(self):
        corridor = build_corridor(W)
        for p in corridor.lower_reflex:
            assert p.chain == LOWER
            assert (corridor.ts[p.vertex_index], corridor.lower[p.vertex_index]) == p.point
        for p in corridor.upper_reflex:
            assert p.chain == UPPER
            assert (corridor.ts[p.vertex_index], corridor.upper[p.vertex_index]) == p.point

    def test_mirror_twice_is_identity(self):
        corridor = build_corridor(W)
        assert mirror_corridor(mirror_corridor(corridor)) == corridor

    def test_mirror_keeps_reflex_order(self):
        mirrored = mirror_corridor(build_corridor(W))
        assert points(mirrored.lower_reflex) == [(-8, 3), (-3, 2)]
        ts = [p.t for p in mirrored.upper_reflex]
        assert ts == sorted(ts)

    def test_vertex_range_is_open(self):
        corridor = build_corridor(W)
        assert list(corridor.vertex_range(Fraction(3), Fraction(8))) == [2]

    def test_irrational_budget_rounds_down(self, caplog):
        instance = Instance(Fraction(1), effective_budget(2, 1),
                            (TurnPoint(Fraction(0), Fraction(0)), TurnPoint(Fraction(1), Fraction(1))),
                            Fraction(2), Fraction(1))
        with caplog.at_level('WARNING', logger='tetherpath'):
            corridor = build_corridor(instance)
        assert corridor.budget * corridor.budget <= 3
        assert 'rounded down' in caplog.text
