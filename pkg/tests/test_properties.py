"""
Property-based tests over seeded random instances.

The linear solvers are compared with the brute-force solver and the exact
oracles; paths are checked against both feasibility formulations.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tetherpath.generator import GenConfig, gen_instance
from tetherpath.minlink import (BetaPath, build_min_link_path, check_path_shape, passes_through,
                                path_metrics, segment_supports, steepen_path)
from tetherpath.minslope import (BACKWARD, FORWARD, build_mccs, mcc_candidates,
                                 min_slope_bruteforce, min_slope_linear)
from tetherpath.model import build_corridor
from tetherpath.oracle import check_distance, check_feasible, min_link_oracle, min_slope_oracle
from tetherpath.predicates import feasible_slope, overlapping_pairs, pair_visible

F = Fraction


def instances(max_n: int):
    return st.builds(
        lambda n, seed, budget, alpha: gen_instance(GenConfig(n, alpha, budget, seed)),
        st.integers(1, max_n),
        st.integers(0, 2 ** 32),
        st.sampled_from([F(1, 2), F(1), F(3, 2), F(2)]),
        st.sampled_from([F(1), F(2), F(1, 2)]),
    )


# positions in 1000ths of an interval, ten per instance
steps = st.lists(st.integers(0, 999), min_size=10, max_size=10)


def solved(instance):
    corridor = build_corridor(instance)
    solution = min_slope_linear(corridor)
    return corridor, solution, build_min_link_path(corridor, solution)


@pytest.mark.property_based
@given(instances(200))
@settings(max_examples=100, deadline=None)
def test_min_slope_solvers_agree(instance):
    """Linear, brute-force and threshold-search answers coincide."""
    corridor = build_corridor(instance)
    linear = min_slope_linear(corridor)
    brute = min_slope_bruteforce(corridor)
    assert linear.beta_star == brute.beta_star == min_slope_oracle(corridor)
    assert linear.witness == brute.witness
    assert 0 <= linear.beta_star < corridor.alpha
    if linear.witness is not None:
        assert pair_visible(corridor, linear.witness.lower, linear.witness.upper)


@pytest.mark.property_based
@given(instances(200), steps, steps)
@settings(max_examples=60, deadline=None)
def test_min_slope_is_the_threshold(instance, above, below):
    corridor = build_corridor(instance)
    beta = min_slope_linear(corridor).beta_star
    assert feasible_slope(corridor, beta)
    for k in above:
        assert feasible_slope(corridor, beta + (corridor.alpha - beta) * F(k, 1000))
    if beta > 0:
        for k in below:
            assert not feasible_slope(corridor, beta * F(k, 1000))


@pytest.mark.property_based
@given(instances(40))
@settings(max_examples=60, deadline=None)
def test_hidden_pair_has_a_steeper_pair_inside(instance):
    """An overlapping pair that cannot see itself is beaten inside its span."""
    corridor = build_corridor(instance)
    pairs = list(overlapping_pairs(corridor))
    for pair in pairs:
        if pair_visible(corridor, pair.lower, pair.upper):
            continue
        t0, t1 = sorted((pair.lower.t, pair.upper.t))
        assert any(other.slope > pair.slope
                   and t0 <= other.lower.t <= t1 and t0 <= other.upper.t <= t1
                   for other in pairs)


@pytest.mark.property_based
@given(instances(200))
@settings(max_examples=100, deadline=None)
def test_greedy_path_is_valid(instance):
    corridor, solution, path = solved(instance)
    assert check_path_shape(path, corridor.t_start, corridor.t_end) == []
    assert check_feasible(corridor, path)
    assert check_distance(instance, path)
    assert all(segment_supports(corridor, path))
    if solution.witness is not None:
        assert passes_through(path, solution.witness.lower.point)
        assert passes_through(path, solution.witness.upper.point)


@pytest.mark.property_based
@given(instances(40))
@settings(max_examples=40, deadline=None)
def test_greedy_path_has_fewest_links(instance):
    corridor, solution, path = solved(instance)
    assert path.links == min_link_oracle(corridor, solution.beta_star)


@pytest.mark.property_based
@given(instances(40), st.lists(st.integers(1, 1000), min_size=5, max_size=5))
@settings(max_examples=40, deadline=None)
def test_length_grows_with_slope(instance, ks):
    corridor, solution, path = solved(instance)
    span = corridor.t_end - corridor.t_start
    base = path_metrics(path).length_squared
    assert base == span * span * (1 + solution.beta_star ** 2)
    for k in ks:
        beta = solution.beta_star + (corridor.alpha - solution.beta_star) * F(k, 1000)
        steep = steepen_path(corridor, path, beta)
        assert check_path_shape(steep, corridor.t_start, corridor.t_end) == []
        assert check_feasible(corridor, steep)
        assert path_metrics(steep).length_squared == span * span * (1 + beta * beta)
        assert path_metrics(steep).length_squared > base


@pytest.mark.property_based
@given(instances(200))
@settings(max_examples=60, deadline=None)
def test_chain_candidates_are_bounded(instance):
    corridor = build_corridor(instance)
    beta = min_slope_linear(corridor).beta_star
    candidates = mcc_candidates(corridor)
    for pair in candidates:
        assert pair.upper.y < pair.lower.y
        assert pair.slope <= beta
    steepest = [p for p in candidates if p.slope == beta]
    assert bool(steepest) == (beta > 0)
    assert all(pair_visible(corridor, p.lower, p.upper) for p in steepest)


@pytest.mark.property_based
@given(instances(200))
@settings(max_examples=60, deadline=None)
def test_chains_partition_and_are_convex(instance):
    corridor = build_corridor(instance)
    lower_indices = {p.vertex_index for p in corridor.lower_reflex}
    for direction in (FORWARD, BACKWARD):
        mccs = build_mccs(corridor, direction)
        covered = sorted(p.vertex_index for m in mccs for p in m.vertices)
        assert len(covered) == len(set(covered))
        assert set(covered) <= lower_indices
        for mcc in mccs:
            pts = sorted(p.point for p in mcc.vertices)
            for (t0, y0), (t1, y1), (t2, y2) in zip(pts, pts[1:], pts[2:]):
                assert (t1 - t0) * (y2 - y0) - (y1 - y0) * (t2 - t0) < 0


@pytest.mark.property_based
@given(instances(40), st.sampled_from([F(-1), F(-1, 2), F(0), F(1, 3), F(1)]))
@settings(max_examples=60, deadline=None)
def test_feasibility_formulations_agree(instance, dy):
    corridor, _, path = solved(instance)
    moved = BetaPath(path.beta, (path.start[0], path.start[1] + dy),
                     tuple((t, y + dy) for t, y in path.turns), (path.end[0], path.end[1] + dy))
    assert check_feasible(corridor, moved) == check_distance(instance, moved)


@pytest.mark.property_based
@given(st.integers(1, 30), st.integers(0, 2 ** 32))
@settings(max_examples=40, deadline=None)
def test_generator_is_deterministic(n, seed):
    assert gen_instance(GenConfig(n, seed=seed)) == gen_instance(GenConfig(n, seed=seed))
