"""
Model Module
Instance representation, validation, corridor construction and reflex points.

All coordinates are exact rationals. A corridor is the band of points within
vertical distance L of the drone's space-time path; its lower and upper chains
are that path shifted down and up by L.
"""

import logging
from bisect import bisect_left, bisect_right
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from . import config
from .errors import (InstanceError, NonAlternating, NonMonotoneTime,
                     SpeedMismatch, TetherTooShort)
from .exact import RootBudget, rational_sqrt

logger = logging.getLogger(__name__)

LOWER = 'lower'
UPPER = 'upper'

Budget = Union[Fraction, RootBudget]
Point = Tuple[Fraction, Fraction]


@dataclass(frozen=True)
class TurnPoint:
    """A vertex (t, h) of the drone's space-time path."""

    t: Fraction
    h: Fraction


@dataclass(frozen=True)
class Instance:
    """
    The drone's constant-speed zig-zag path and the tether geometry.

    ``vertical_budget`` is either given directly or derived from
    ``tether_length`` and ``line_separation`` with :func:`effective_budget`.
    """

    alpha: Fraction
    vertical_budget: Budget
    turns: Tuple[TurnPoint, ...]
    tether_length: Optional[Fraction] = None
    line_separation: Optional[Fraction] = None

    @property
    def n(self) -> int:
        """Number of drone segments."""
        return len(self.turns) - 1

    @property
    def t_start(self) -> Fraction:
        return self.turns[0].t

    @property
    def t_end(self) -> Fraction:
        return self.turns[-1].t

    def height_at(self, t: Fraction) -> Fraction:
        """Drone position on the ground line at time t."""
        ts = [p.t for p in self.turns]
        hs = [p.h for p in self.turns]
        return interpolate(ts, hs, t)


@dataclass(frozen=True)
class ReflexPoint:
    """A reflex vertex of one corridor chain."""

    chain: str
    vertex_index: int
    t: Fraction
    y: Fraction

    @property
    def point(self) -> Point:
        return (self.t, self.y)


@dataclass(frozen=True)
class Corridor:
    """
    The alpha-corridor: lower and upper chains sharing the drone's turn times.

    ``ts``, ``lower`` and ``upper`` are parallel tuples; the reflex lists are
    ordered by t.
    """

    alpha: Fraction
    budget: Fraction
    ts: Tuple[Fraction, ...]
    lower: Tuple[Fraction, ...]
    upper: Tuple[Fraction, ...]
    lower_reflex: Tuple[ReflexPoint, ...] = field(default=())
    upper_reflex: Tuple[ReflexPoint, ...] = field(default=())

    @property
    def n(self) -> int:
        return len(self.ts) - 1

    @property
    def t_start(self) -> Fraction:
        return self.ts[0]

    @property
    def t_end(self) -> Fraction:
        return self.ts[-1]

    def lower_at(self, t: Fraction) -> Fraction:
        return interpolate(self.ts, self.lower, t)

    def upper_at(self, t: Fraction) -> Fraction:
        return interpolate(self.ts, self.upper, t)

    def lower_points(self) -> List[Point]:
        return list(zip(self.ts, self.lower))

    def upper_points(self) -> List[Point]:
        return list(zip(self.ts, self.upper))

    def vertex_range(self, t_from: Fraction, t_to: Fraction) -> range:
        """Indices of the chain vertices with t_from < t < t_to."""
        return range(bisect_right(self.ts, t_from), bisect_left(self.ts, t_to))


def interpolate(ts, ys, t: Fraction) -> Fraction:
    """Evaluate the polyline (ts, ys) at t, which must lie in [ts[0], ts[-1]]."""
    if t < ts[0] or t > ts[-1]:
        raise ValueError(f"t={t} outside [{ts[0]}, {ts[-1]}]")
    k = bisect_right(ts, t)
    if k >= len(ts):
        return ys[-1]
    t0, t1 = ts[k - 1], ts[k]
    if t == t0:
        return ys[k - 1]
    return ys[k - 1] + (ys[k] - ys[k - 1]) * (t - t0) / (t1 - t0)


def interpolate_sorted(ts, ys, times: Sequence[Fraction]) -> List[Fraction]:
    """
    Evaluate the polyline (ts, ys) at every time of a sorted sequence.

    One merge walk over both sequences, so the cost is linear in their
    combined length.
    """
    if times and (times[0] < ts[0] or times[-1] > ts[-1]):
        raise ValueError(f"times [{times[0]}, {times[-1]}] outside [{ts[0]}, {ts[-1]}]")
    out = []
    k = 0
    for t in times:
        while k + 1 < len(ts) and ts[k + 1] <= t:
            k += 1
        if k + 1 == len(ts) or t == ts[k]:
            out.append(ys[k])
        else:
            out.append(ys[k] + (ys[k + 1] - ys[k]) * (t - ts[k]) / (ts[k + 1] - ts[k]))
    return out


def effective_budget(tether_length, line_separation) -> Budget:
    """
    Project the tether length onto the ground line.

    Args:
        tether_length: Tether length L
        line_separation: Perpendicular distance d between the two lines

    Returns:
        The vertical budget sqrt(L^2 - d^2), as a Fraction when it is
        rational and as a RootBudget otherwise.
    """
    tether_length = Fraction(tether_length)
    line_separation = Fraction(line_separation)
    if line_separation < 0:
        raise TetherTooShort(f"Negative line separation: {line_separation}")
    if line_separation >= tether_length:
        raise TetherTooShort(
            f"Tether length {tether_length} does not exceed line separation {line_separation}")
    squared = tether_length * tether_length - line_separation * line_separation
    root = rational_sqrt(squared)
    if root is not None:
        return root
    return RootBudget(squared)


def validate_instance(instance: Instance) -> None:
    """
    Check the Instance invariants.

    Raises:
        InstanceError: Too few turns or a non-positive alpha / budget
        NonMonotoneTime: Turn times are not strictly increasing
        SpeedMismatch: A segment is not travelled at speed alpha
        NonAlternating: Two consecutive segments share a direction
    """
    if len(instance.turns) < 2:
        raise InstanceError("An instance needs at least two turn points")
    if instance.alpha <= 0:
        raise InstanceError(f"alpha must be positive, got {instance.alpha}")
    if not instance.vertical_budget > 0:
        raise InstanceError(f"vertical budget must be positive, got {instance.vertical_budget}")

    previous_sign = 0
    for i, (a, b) in enumerate(zip(instance.turns, instance.turns[1:])):
        dt = b.t - a.t
        if dt <= 0:
            raise NonMonotoneTime(f"Turn {i + 1} at t={b.t} does not follow t={a.t}")
        dh = b.h - a.h
        if abs(dh) != instance.alpha * dt:
            raise SpeedMismatch(
                f"Segment {i}: |dh|={abs(dh)} but alpha*dt={instance.alpha * dt}")
        sign = 1 if dh > 0 else -1
        if sign == previous_sign:
            raise NonAlternating(f"Segments {i - 1} and {i} move in the same direction")
        previous_sign = sign


def rational_budget(budget: Budget) -> Fraction:
    """Budget used for corridor geometry (conservatively rounded if irrational)."""
    if isinstance(budget, RootBudget):
        rounded = budget.lower_bound(config.BUDGET_DENOMINATOR)
        logger.warning("Irrational vertical budget %r rounded down to %s", budget, rounded)
        return rounded
    return Fraction(budget)


def build_corridor(instance: Instance) -> Corridor:
    """
    Build the corridor of an instance.

    Args:
        instance (Instance): A drone path

    Returns:
        Corridor: Lower/upper chains with classified reflex points
    """
    validate_instance(instance)
    budget = rational_budget(instance.vertical_budget)
    ts = tuple(p.t for p in instance.turns)
    lower = tuple(p.h - budget for p in instance.turns)
    upper = tuple(p.h + budget for p in instance.turns)
    corridor = Corridor(instance.alpha, budget, ts, lower, upper)
    lower_reflex, upper_reflex = reflex_points(corridor)
    logger.debug("Corridor with %d segments, %d lower and %d upper reflex points",
                 corridor.n, len(lower_reflex), len(upper_reflex))
    return Corridor(instance.alpha, budget, ts, lower, upper, lower_reflex, upper_reflex)


def reflex_points(corridor: Corridor) -> Tuple[Tuple[ReflexPoint, ...], Tuple[ReflexPoint, ...]]:
    """
    Classify the reflex vertices of both chains.

    Lower reflex points are the peaks of the lower chain and upper reflex
    points the valleys of the upper chain. A chain endpoint counts when it is
    a one-sided extremum toward the interior.

    Returns:
        (lower list, upper list), both ordered by t
    """
    ts, lo, hi = corridor.ts, corridor.lower, corridor.upper
    last = len(ts) - 1
    lower_out, upper_out = [], []
    for i in range(len(ts)):
        rising_in = i > 0 and lo[i] > lo[i - 1]
        falling_out = i < last and lo[i + 1] < lo[i]
        if i == 0:
            is_peak = falling_out
            is_valley = not falling_out
        elif i == last:
            is_peak = rising_in
            is_valley = not rising_in
        else:
            is_peak = rising_in and falling_out
            is_valley = not rising_in and not falling_out
        if is_peak:
            lower_out.append(ReflexPoint(LOWER, i, ts[i], lo[i]))
        if is_valley:
            upper_out.append(ReflexPoint(UPPER, i, ts[i], hi[i]))
    return tuple(lower_out), tuple(upper_out)


def mirror_corridor(corridor: Corridor) -> Corridor:
    """
    Reflect a corridor in time (t -> -t).

    Vertex i of the mirror is vertex n - i of the original; reflex lists are
    re-ordered by the mirrored time.
    """
    last = corridor.n
    ts = tuple(-t for t in reversed(corridor.ts))
    lower = tuple(reversed(corridor.lower))
    upper = tuple(reversed(corridor.upper))
    lower_reflex = tuple(mirror_reflex(p, last) for p in reversed(corridor.lower_reflex))
    upper_reflex = tuple(mirror_reflex(p, last) for p in reversed(corridor.upper_reflex))
    return Corridor(corridor.alpha, corridor.budget, ts, lower, upper, lower_reflex, upper_reflex)


def mirror_reflex(point: ReflexPoint, last_index: int) -> ReflexPoint:
    """Map a reflex point between a corridor and its time mirror."""
    return ReflexPoint(point.chain, last_index - point.vertex_index, -point.t, point.y)
