from fractions import Fraction

import pytest

from tetherpath.generator import GenConfig, gen_instance
from tetherpath.minslope import (BACKWARD, FORWARD, build_mccs, mcc_candidates, mcc_min_slope,
                                 min_slope_bruteforce, min_slope_linear)
from tetherpath.model import build_corridor

SOLVERS = [min_slope_bruteforce, min_slope_linear]


def witness_points(solution):
    return (solution.witness.lower.point, solution.witness.upper.point)


def chain_points(mccs):
    return [[p.point for p in mcc.vertices] for mcc in mccs]


@pytest.mark.parametrize('solver', SOLVERS)
class TestMinSlope:
    def test_tent(self, solver, tent):
        solution = solver(tent)
        assert solution.beta_star == Fraction(1, 3)
        assert witness_points(solution) == ((3, 2), (0, 1))

    def test_flat(self, solver, flat):
        solution = solver(flat)
        assert solution.beta_star == 0
        assert solution.witness is None

    def test_w_tie_broken_lexicographically(self, solver, w_corridor):
        solution = solver(w_corridor)
        assert solution.beta_star == Fraction(1, 3)
        assert witness_points(solution) == ((3, 2), (0, 1))

    def test_cap_endpoint_pair(self, solver, cap):
        solution = solver(cap)
        assert solution.beta_star == Fraction(1, 3)
        assert witness_points(solution) == ((0, 2), (3, 1))

    def test_rise(self, solver, rise):
        solution = solver(rise)
        assert solution.beta_star == Fraction(1, 4)
        assert witness_points(solution) == ((4, Fraction(5, 2)), (0, Fraction(3, 2)))


def test_methods_are_labelled(tent):
    assert min_slope_linear(tent).method == 'linear'
    assert min_slope_bruteforce(tent).method == 'bruteforce'


class TestMccs:
    def test_w_forward_blocked(self, w_corridor):
        mccs = build_mccs(w_corridor, FORWARD)
        assert chain_points(mccs) == [[(3, 2)], [(8, 3)]]
        assert [m.anchor_index for m in mccs] == [0, 1]

    def test_rise_forward_single_chain(self, rise):
        mccs = build_mccs(rise, FORWARD)
        assert chain_points(mccs) == [[(4, Fraction(5, 2)), (9, Fraction(7, 2))]]
        assert mccs[0].u_table[0].point == (6, Fraction(7, 2))

    def test_backward_chains_in_original_coordinates(self, w_corridor):
        mccs = build_mccs(w_corridor, BACKWARD)
        assert all(m.direction == BACKWARD for m in mccs)
        covered = sorted(p.point for m in mccs for p in m.vertices)
        assert covered == [(3, 2), (8, 3)]

    def test_unknown_direction(self, tent):
        with pytest.raises(ValueError):
            build_mccs(tent, 'sideways')

    def test_tent_forward_candidate(self, tent):
        [mcc] = build_mccs(tent, FORWARD)
        pair = mcc_min_slope(tent, mcc)
        assert (pair.lower.point, pair.upper.point) == ((3, 2), (6, 1))
        assert pair.slope == Fraction(1, 3)

    def test_rise_backward_candidate(self, rise):
        [mcc] = build_mccs(rise, BACKWARD)
        pair = mcc_min_slope(rise, mcc)
        assert (pair.lower.point, pair.upper.point) == ((4, Fraction(5, 2)), (0, Fraction(3, 2)))
        assert pair.slope == Fraction(1, 4)

    def test_flat_has_no_candidates(self, flat):
        for direction in (FORWARD, BACKWARD):
            for mcc in build_mccs(flat, direction):
                assert mcc_min_slope(flat, mcc) is None

    def test_w_backward_candidates(self, w_corridor):
        pairs = sorted((p.lower.point, p.upper.point) for p in mcc_candidates(w_corridor)
                       if p.slope == Fraction(1, 3))
        assert ((3, 2), (0, 1)) in pairs
        assert ((8, 3), (5, 2)) in pairs


@pytest.mark.parametrize('seed', [1, 4, 9])
def test_beta_star_is_the_steepest_chain_candidate(seed):
    corridor = build_corridor(gen_instance(GenConfig(600, seed=seed)))
    solution = min_slope_linear(corridor)
    assert solution.beta_star == max((p.slope for p in mcc_candidates(corridor)),
                                     default=Fraction(0))
    assert solution.beta_star == min_slope_bruteforce(corridor).beta_star
