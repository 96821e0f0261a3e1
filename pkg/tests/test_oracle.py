from fractions import Fraction

import pytest

from conftest import FLAT, TENT
from tetherpath.errors import InfeasibleSlope, SpanMismatch
from tetherpath.minlink import BetaPath, build_min_link_path
from tetherpath.minslope import min_slope_linear
from tetherpath.oracle import (check_distance, check_feasible, min_link_oracle,
                               min_slope_oracle, reachable_states)

F = Fraction


def shifted(path, dy):
    return BetaPath(path.beta, (path.start[0], path.start[1] + dy),
                    tuple((t, y + dy) for t, y in path.turns), (path.end[0], path.end[1] + dy))


@pytest.fixture
def tent_path(tent):
    return build_min_link_path(tent, min_slope_linear(tent))


class TestCheckFeasible:
    def test_greedy_path(self, tent, tent_path):
        assert check_feasible(tent, tent_path)

    def test_shifted_path(self, tent, tent_path):
        assert not check_feasible(tent, shifted(tent_path, F(1, 2)))

    def test_horizontal_too_high(self, flat):
        assert not check_feasible(flat, BetaPath(F(0), (F(0), F(3)), (), (F(6), F(3))))

    def test_span_mismatch(self, tent):
        with pytest.raises(SpanMismatch):
            check_feasible(tent, BetaPath(F(0), (F(0), F(1)), (), (F(5), F(1))))


class TestCheckDistance:
    def test_greedy_path_touches_budget(self, tent_path):
        assert check_distance(TENT, tent_path)
        assert max(abs(TENT.height_at(t) - tent_path.y_at(t)) for t in (0, 3, 6)) == 1

    def test_shifted_path(self, tent_path):
        assert not check_distance(TENT, shifted(tent_path, F(1, 2)))

    def test_drone_path_itself(self):
        turns = tuple((p.t, p.h) for p in TENT.turns)
        path = BetaPath(TENT.alpha, turns[0], turns[1:-1], turns[-1])
        assert check_distance(TENT, path)

    def test_agrees_with_corridor_check(self, flat):
        for y in (F(1), F(3, 2), F(2), F(5, 2)):
            path = BetaPath(F(0), (F(0), y), (), (F(6), y))
            assert check_distance(FLAT, path) == check_feasible(flat, path)


class TestMinLinkOracle:
    def test_tent(self, tent):
        assert min_link_oracle(tent, F(1, 3)) == 2

    def test_w(self, w_corridor):
        assert min_link_oracle(w_corridor, F(1, 3)) == 4

    def test_flat_horizontal(self, flat):
        assert min_link_oracle(flat, 0) == 1

    def test_rise(self, rise):
        assert min_link_oracle(rise, F(1, 4)) == 1

    def test_infeasible_slope(self, tent):
        with pytest.raises(InfeasibleSlope):
            min_link_oracle(tent, F(1, 4))

    def test_states_stay_in_band(self, w_corridor):
        for state in reachable_states(w_corridor, F(1, 3)):
            assert state.t == w_corridor.t_end
            for lo, hi in state.intervals:
                assert 0 <= lo <= hi <= 2 * w_corridor.budget


class TestMinSlopeOracle:
    def test_tent(self, tent):
        assert min_slope_oracle(tent) == F(1, 3)

    def test_cap(self, cap):
        assert min_slope_oracle(cap) == F(1, 3)

    def test_flat(self, flat):
        assert min_slope_oracle(flat) == 0
