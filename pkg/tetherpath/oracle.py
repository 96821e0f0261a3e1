"""
Oracle Module
Independent reference checks for small corridors: path feasibility, tether
distance, minimum link count and minimum slope.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Tuple

from . import config
from .errors import CapExceeded, InfeasibleSlope, SpanMismatch
from .minlink import BetaPath
from .model import Corridor, Instance, interpolate_sorted
from .predicates import feasible_slope, overlapping_pairs

logger = logging.getLogger(__name__)

Interval = Tuple[Fraction, Fraction]


@dataclass(frozen=True)
class ReachState:
    """
    Heights reachable at time t with exactly ``link_budget`` links whose last
    link has the given sign.

    Intervals are closed, disjoint and sorted, stored as heights above the
    lower chain.
    """

    link_budget: int
    sign: int
    t: Fraction
    intervals: Tuple[Interval, ...]


def _check_span(t_start: Fraction, t_end: Fraction, path: BetaPath) -> None:
    if path.start[0] != t_start or path.end[0] != t_end:
        raise SpanMismatch(
            f"Path covers [{path.start[0]}, {path.end[0]}], expected [{t_start}, {t_end}]")


def check_feasible(corridor: Corridor, path: BetaPath) -> bool:
    """
    Check that a path stays inside the closed corridor.

    Both the path and the chains are piecewise linear, so checking every
    corridor vertex time and every path vertex time is exact. The times are
    merged once and every polyline is walked in order.
    """
    _check_span(corridor.t_start, corridor.t_end, path)
    path_ts = [p[0] for p in path.vertices]
    times = sorted(set(corridor.ts) | set(path_ts))
    heights = interpolate_sorted(path_ts, [p[1] for p in path.vertices], times)
    lows = interpolate_sorted(corridor.ts, corridor.lower, times)
    highs = interpolate_sorted(corridor.ts, corridor.upper, times)
    for t, y, low, high in zip(times, heights, lows, highs):
        if y < low or y > high:
            logger.debug("Path height %s at t=%s leaves the corridor", y, t)
            return False
    return True


def check_distance(instance: Instance, path: BetaPath) -> bool:
    """
    Check the tether constraint on the drone and ground positions directly.

    Returns:
        bool: True iff |h(t) - y(t)| never exceeds the vertical budget
    """
    _check_span(instance.t_start, instance.t_end, path)
    path_ts = [p[0] for p in path.vertices]
    drone_ts = [p.t for p in instance.turns]
    times = sorted(set(drone_ts) | set(path_ts))
    drone = interpolate_sorted(drone_ts, [p.h for p in instance.turns], times)
    ground = interpolate_sorted(path_ts, [p[1] for p in path.vertices], times)
    budget = instance.vertical_budget
    return all(budget >= abs(h - y) for h, y in zip(drone, ground))


def _merge(intervals: List[Interval]) -> List[Interval]:
    out: List[Interval] = []
    for lo, hi in sorted(intervals):
        if out and lo <= out[-1][1]:
            out[-1] = (out[-1][0], max(out[-1][1], hi))
        else:
            out.append((lo, hi))
    return out


def _move(intervals: List[Interval], low_shift: Fraction, high_shift: Fraction,
          width: Fraction) -> List[Interval]:
    out = []
    for lo, hi in intervals:
        lo, hi = max(lo + low_shift, Fraction(0)), min(hi + high_shift, width)
        if lo <= hi:
            out.append((lo, hi))
    return out


def reachable_states(corridor: Corridor, beta: Fraction) -> List[ReachState]:
    """
    Propagate reachable heights strip by strip up to the link cap.

    Heights are measured above the lower chain. Inside a strip the lower
    chain moves at +alpha or -alpha, and a path moves at +/-beta with
    beta <= alpha, so the relative height is monotone and only the entry and
    exit heights need clipping. A strip reached with one or two turns can
    exit anywhere between the all-down and all-up extremes.

    Returns:
        List[ReachState]: Non-empty states at the last corridor time
    """
    beta = Fraction(beta)
    alpha = corridor.alpha
    width = 2 * corridor.budget
    cap = 2 * corridor.n + 2
    states: Dict[Tuple[int, int], List[Interval]] = {
        (1, 1): [(Fraction(0), width)],
        (1, -1): [(Fraction(0), width)],
    }
    for k in range(1, len(corridor.ts)):
        dt = corridor.ts[k] - corridor.ts[k - 1]
        rising = corridor.lower[k] > corridor.lower[k - 1]
        chain_rate = alpha if rising else -alpha
        turn_low = (-beta - chain_rate) * dt
        turn_high = (beta - chain_rate) * dt
        nxt: Dict[Tuple[int, int], List[Interval]] = {}
        for links in range(1, cap + 1):
            for sign in (1, -1):
                parts: List[Interval] = []
                stay = states.get((links, sign))
                if stay:
                    shift = (sign * beta - chain_rate) * dt
                    parts += _move(stay, shift, shift, width)
                for source in ((links - 1, -sign), (links - 2, sign)):
                    if states.get(source):
                        parts += _move(states[source], turn_low, turn_high, width)
                if parts:
                    nxt[(links, sign)] = _merge(parts)
        states = nxt
        for intervals in states.values():
            assert all(0 <= lo <= hi <= width for lo, hi in intervals)
            assert all(a[1] < b[0] for a, b in zip(intervals, intervals[1:]))
    return [ReachState(links, sign, corridor.t_end, tuple(intervals))
            for (links, sign), intervals in sorted(states.items())]


def min_link_oracle(corridor: Corridor, beta: Fraction) -> int:
    """
    Exact minimum number of links of a feasible +/-beta path.

    Args:
        corridor (Corridor): A small corridor
        beta: Slope magnitude for which the corridor is traversable

    Returns:
        int: The least link count reaching the end of the corridor
    """
    beta = Fraction(beta)
    if not feasible_slope(corridor, beta):
        raise InfeasibleSlope(f"beta={beta} cannot traverse the corridor")
    if corridor.n > config.ORACLE_MAX_SEGMENTS:
        logger.warning("Min-link oracle on %d segments; intended for at most %d",
                       corridor.n, config.ORACLE_MAX_SEGMENTS)
    if beta == 0:
        return 1
    states = reachable_states(corridor, beta)
    if not states:
        raise CapExceeded(f"No path within {2 * corridor.n + 2} links")
    best = min(state.link_budget for state in states)
    logger.debug("Min-link oracle: %d links at beta=%s", best, beta)
    return best


def min_slope_oracle(corridor: Corridor) -> Fraction:
    """
    Least candidate slope passing the funnel test.

    Candidates are 0 and the slopes of all overlapping reflex pairs;
    feasibility is monotone in the slope, so the least feasible candidate is
    found by bisection.
    """
    slopes = {Fraction(0)} | {p.slope for p in overlapping_pairs(corridor)}
    candidates = sorted(beta for beta in slopes if beta <= corridor.alpha)
    lo, hi = 0, len(candidates)
    while lo < hi:
        mid = (lo + hi) // 2
        if feasible_slope(corridor, candidates[mid]):
            hi = mid
        else:
            lo = mid + 1
    if lo == len(candidates):
        raise InfeasibleSlope("No candidate slope traverses the corridor")
    return candidates[lo]
