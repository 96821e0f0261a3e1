"""
Predicates Module
Exact geometric kernel: overlap, visibility and slope of reflex pairs, and the
funnel test deciding whether a slope magnitude can traverse a corridor.

The corridor is treated as a closed region everywhere: touching a chain,
including at a reflex vertex, is allowed.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import ChainMismatch, SlopeOutOfRange, VerticalPair
from .model import LOWER, UPPER, Corridor, ReflexPoint


@dataclass(frozen=True)
class PairSlope:
    """An overlapping (lower, upper) reflex pair and its absolute slope."""

    lower: ReflexPoint
    upper: ReflexPoint
    slope: Fraction

    def sort_key(self):
        """Tie-break key shared by every solver: (lower.t, upper.t)."""
        return (self.lower.t, self.upper.t)


def _check_chains(l: ReflexPoint, u: ReflexPoint) -> None:
    if l.chain != LOWER or u.chain != UPPER:
        raise ChainMismatch(f"Expected (lower, upper) points, got ({l.chain}, {u.chain})")


def pair_overlaps(l: ReflexPoint, u: ReflexPoint) -> bool:
    """
    Check whether the upper point lies strictly below the lower point.

    Args:
        l: Reflex point of the lower chain
        u: Reflex point of the upper chain

    Returns:
        bool: True iff u.y < l.y
    """
    _check_chains(l, u)
    return u.y < l.y


def pair_slope(a: ReflexPoint, b: ReflexPoint) -> Fraction:
    """Absolute slope of the segment joining two points."""
    if a.t == b.t:
        raise VerticalPair(f"Points share t={a.t}")
    return abs(a.y - b.y) / abs(a.t - b.t)


def make_pair(l: ReflexPoint, u: ReflexPoint) -> PairSlope:
    """Build a PairSlope after checking the chains."""
    _check_chains(l, u)
    return PairSlope(l, u, pair_slope(l, u))


def segment_inside(corridor: Corridor, a, b) -> bool:
    """
    Check that the closed segment between two points lies in the corridor.

    Both bounds are piecewise linear, so testing the segment endpoints and the
    chain vertices strictly between them is exact.

    Args:
        corridor: The corridor
        a, b: (t, y) points with t inside the corridor's span
    """
    (ta, ya), (tb, yb) = sorted([tuple(a), tuple(b)])
    if ta == tb:
        low, high = min(ya, yb), max(ya, yb)
        return corridor.lower_at(ta) <= low and high <= corridor.upper_at(ta)
    for t, y in ((ta, ya), (tb, yb)):
        if not corridor.lower_at(t) <= y <= corridor.upper_at(t):
            return False
    slope = (yb - ya) / (tb - ta)
    for k in corridor.vertex_range(ta, tb):
        y = ya + slope * (corridor.ts[k] - ta)
        if y < corridor.lower[k] or y > corridor.upper[k]:
            return False
    return True


def pair_visible(corridor: Corridor, l: ReflexPoint, u: ReflexPoint) -> bool:
    """
    Check whether the segment between two reflex points stays in the corridor.

    Args:
        corridor: The corridor both points belong to
        l: Lower reflex point
        u: Upper reflex point

    Returns:
        bool: True iff the closed segment lies in the closed corridor
    """
    return segment_inside(corridor, l.point, u.point)


def feasible_slope(corridor: Corridor, beta: Fraction) -> bool:
    """
    Decide whether some path with slopes +beta/-beta traverses the corridor.

    Propagates the reachable height interval left to right: the top grows at
    rate +beta, the bottom falls at rate -beta, and both are clipped to the
    chains at every vertex. Each strip between vertices is convex, so the
    interval cannot empty between vertices without emptying at one.

    Args:
        corridor: The corridor
        beta: Slope magnitude, 0 <= beta <= alpha

    Returns:
        bool: True iff the interval never empties
    """
    beta = Fraction(beta)
    if beta < 0 or beta > corridor.alpha:
        raise SlopeOutOfRange(f"beta={beta} outside [0, {corridor.alpha}]")
    lo, hi = corridor.lower[0], corridor.upper[0]
    for k in range(1, len(corridor.ts)):
        step = beta * (corridor.ts[k] - corridor.ts[k - 1])
        lo = max(lo - step, corridor.lower[k])
        hi = min(hi + step, corridor.upper[k])
        if lo > hi:
            return False
    return True


def overlapping_pairs(corridor: Corridor):
    """Yield every overlapping (lower, upper) reflex pair as a PairSlope."""
    for l in corridor.lower_reflex:
        for u in corridor.upper_reflex:
            if u.y < l.y:
                yield PairSlope(l, u, pair_slope(l, u))
