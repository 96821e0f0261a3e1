"""
Minimum Slope Module
Solves the Min-Slope Problem: the least slope magnitude beta* for which a
+/-beta path traverses the corridor.

beta* is the largest slope over all overlapping (lower, upper) reflex pairs,
or 0 when no pair overlaps. Two solvers are provided:

- ``min_slope_bruteforce`` enumerates every pair (quadratic).
- ``min_slope_linear`` decomposes the lower reflex points into Maximum Convex
  Chains (MCCs) in each time direction, takes the steepest pair each chain
  supports, and resolves the witness in one more pass (linear).
"""

import logging
from bisect import bisect_left, bisect_right
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .model import Corridor, ReflexPoint, mirror_corridor, mirror_reflex
from .predicates import PairSlope, make_pair, pair_slope

logger = logging.getLogger(__name__)

FORWARD = 'forward'
BACKWARD = 'backward'
BRUTEFORCE = 'bruteforce'
LINEAR = 'linear'

Point = Tuple[Fraction, Fraction]


@dataclass(frozen=True)
class Mcc:
    """
    A Maximum Convex Chain of lower reflex points.

    ``vertices`` are listed in sweep order (left to right for forward chains,
    right to left for backward ones). Indices refer to the corridor's
    ``lower_reflex`` list. ``u_table`` maps a chain index to the upper reflex
    point with the lowest signed slope seen from it while the chain grew.
    """

    anchor_index: int
    vertices: Tuple[ReflexPoint, ...]
    end_index: int
    u_table: Dict[int, ReflexPoint] = field(default_factory=dict)
    direction: str = FORWARD


@dataclass(frozen=True)
class SlopeSolution:
    """Result of a min-slope solver."""

    beta_star: Fraction
    witness: Optional[PairSlope]
    method: str


def _cross(o: Point, a: Point, b: Point) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def min_slope_bruteforce(corridor: Corridor) -> SlopeSolution:
    """
    Quadratic scan over every (lower, upper) reflex pair.

    Args:
        corridor (Corridor): The corridor

    Returns:
        SlopeSolution: Largest overlapping pair slope, ties broken by the
        smallest (lower.t, upper.t)
    """
    best = Fraction(0)
    witness = None
    for l in corridor.lower_reflex:
        for u in corridor.upper_reflex:
            if u.y >= l.y:
                continue
            slope = pair_slope(l, u)
            key = (l.t, u.t)
            if slope > best or (slope == best and witness is not None and key < witness.sort_key()):
                best = slope
                witness = PairSlope(l, u, slope)
    _check_bound(corridor, best)
    return SlopeSolution(best, witness, BRUTEFORCE)


def _sweep_max_slope(lowers: Sequence[Point],
                     uppers: Sequence[Point]) -> Tuple[Fraction, Optional[Tuple[int, int]]]:
    """
    Largest (l.y - u.y) / (u.t - l.t) over pairs with l before u, floored at 0.

    Lower points are pushed onto an upper convex chain (Graham style, collinear
    points dropped). For each upper point the best partner is the tangent
    vertex of that chain. Only the running maximum matters, so a pointer kept
    at the chain vertex extreme in direction (best, 1) decides in O(1) whether
    an upper point can improve it; that pointer only moves right.

    Returns:
        (best slope, (lower index, upper index) of the pair attaining it or
        None when no pair overlaps)
    """
    best = Fraction(0)
    pair = None
    hull: List[int] = []
    ptr = 0
    i = 0
    for j, (ut, uy) in enumerate(uppers):
        while i < len(lowers) and lowers[i][0] < ut:
            while len(hull) >= 2 and _cross(lowers[hull[-2]], lowers[hull[-1]], lowers[i]) >= 0:
                hull.pop()
            if ptr > len(hull) - 1:
                ptr = max(len(hull) - 1, 0)
            hull.append(i)
            i += 1
        if not hull:
            continue
        while ptr + 1 < len(hull):
            (at, ay), (bt, by) = lowers[hull[ptr]], lowers[hull[ptr + 1]]
            if by + best * bt <= ay + best * at:
                break
            ptr += 1
        vt, vy = lowers[hull[ptr]]
        if vy + best * vt <= uy + best * ut:
            continue
        # u improves the maximum: walk to its tangent vertex
        ratio = (vy - uy) / (ut - vt)
        while ptr + 1 < len(hull):
            nt, ny = lowers[hull[ptr + 1]]
            nxt = (ny - uy) / (ut - nt)
            if nxt <= ratio:
                break
            ptr += 1
            ratio = nxt
        best, pair = ratio, (hull[ptr], j)
    return best, pair


def _resolve_witness(corridor: Corridor, beta: Fraction) -> PairSlope:
    """
    Find the overlapping pair with slope exactly beta (the maximum) that has
    the smallest (lower.t, upper.t).

    Because beta is the maximum, a lower point l pairs at slope beta with some
    upper point to its right iff l.y + beta*l.t equals the suffix minimum of
    u.y + beta*u.t, and with one to its left iff l.y - beta*l.t equals the
    prefix minimum of u.y - beta*u.t.
    """
    uppers = corridor.upper_reflex
    m = len(uppers)
    uts = [u.t for u in uppers]

    pre_val: List[Optional[Fraction]] = [None] * (m + 1)
    pre_idx = [0] * (m + 1)
    for k, u in enumerate(uppers):
        val = u.y - beta * u.t
        if pre_val[k] is None or val < pre_val[k]:
            pre_val[k + 1], pre_idx[k + 1] = val, k
        else:
            pre_val[k + 1], pre_idx[k + 1] = pre_val[k], pre_idx[k]

    suf_val: List[Optional[Fraction]] = [None] * (m + 1)
    suf_idx = [0] * (m + 1)
    for k in range(m - 1, -1, -1):
        val = uppers[k].y + beta * uppers[k].t
        if suf_val[k + 1] is None or val <= suf_val[k + 1]:
            suf_val[k], suf_idx[k] = val, k
        else:
            suf_val[k], suf_idx[k] = suf_val[k + 1], suf_idx[k + 1]

    for l in corridor.lower_reflex:
        k = bisect_left(uts, l.t)
        if k > 0 and pre_val[k] == l.y - beta * l.t:
            return PairSlope(l, uppers[pre_idx[k]], beta)
        if k < m and suf_val[k] == l.y + beta * l.t:
            return PairSlope(l, uppers[suf_idx[k]], beta)
    raise AssertionError(f"No overlapping pair attains slope {beta}")


def min_slope_linear(corridor: Corridor) -> SlopeSolution:
    """
    Linear-time min-slope solver.

    beta* is the steepest candidate over the forward and backward MCCs; the
    witness is then resolved with the shared tie-break.

    Args:
        corridor (Corridor): The corridor

    Returns:
        SlopeSolution: Same value and witness as the brute-force scan
    """
    candidates = mcc_candidates(corridor)
    best = max((pair.slope for pair in candidates), default=Fraction(0))
    logger.debug("%d chain candidates, steepest %s", len(candidates), best)
    _check_bound(corridor, best)
    if best == 0:
        return SlopeSolution(best, None, LINEAR)
    return SlopeSolution(best, _resolve_witness(corridor, best), LINEAR)


def _check_bound(corridor: Corridor, beta: Fraction) -> None:
    assert 0 <= beta < corridor.alpha, f"beta*={beta} outside [0, {corridor.alpha})"


def _signed_slope(a: ReflexPoint, b: ReflexPoint) -> Fraction:
    return (b.y - a.y) / (b.t - a.t)


def _grow_chains(corridor: Corridor) -> List[Tuple[int, List[int], Dict[int, ReflexPoint]]]:
    """
    Left-to-right MCC decomposition of one corridor frame.

    Each chain is an upper convex chain grown point by point. After the
    convexity pops, the edge from the chain top v to the new point is
    rejected when it passes strictly above v's U-table entry: the upper
    reflex point of lowest signed slope from v among those seen while v was
    the top. The next chain then starts at the rejected point.

    Every upper reflex point is read once, in the gap before the lower point
    that follows it, and popped vertices are only restored when their chain
    ends, so the decomposition is linear.
    """
    lowers = corridor.lower_reflex
    uppers = corridor.upper_reflex
    chains = []
    k = 0
    i = 0
    while i < len(lowers):
        stack = [i]
        u_table: Dict[int, ReflexPoint] = {}
        while k < len(uppers) and uppers[k].t < lowers[i].t:
            k += 1
        j = i + 1
        while j < len(lowers):
            cand = lowers[j]
            gap = k
            while k < len(uppers) and uppers[k].t < cand.t:
                k += 1
            popped = []
            while len(stack) >= 2 and _cross(lowers[stack[-2]].point, lowers[stack[-1]].point,
                                             cand.point) >= 0:
                popped.append(stack.pop())
            top = stack[-1]
            v = lowers[top]
            blocker = u_table.get(top)
            for u in uppers[gap:k]:
                if blocker is None or _signed_slope(v, u) < _signed_slope(v, blocker):
                    blocker = u
            if blocker is not None and _signed_slope(v, cand) > _signed_slope(v, blocker):
                stack.extend(reversed(popped))
                logger.debug("Chain from l[%d] blocked at l[%d] by upper point %s",
                             i, j, blocker.point)
                break
            if blocker is not None:
                u_table[top] = blocker
            stack.append(j)
            j += 1
        chains.append((i, stack, u_table))
        i = j
    return chains


def build_mccs(corridor: Corridor, direction: str = FORWARD) -> List[Mcc]:
    """
    Decompose the lower reflex points into Maximum Convex Chains.

    Args:
        corridor (Corridor): The corridor
        direction (str): 'forward' (left to right) or 'backward' (computed on
            the time mirror and mapped back)

    Returns:
        List[Mcc]: Chains in sweep order
    """
    if direction == FORWARD:
        return [Mcc(anchor, tuple(corridor.lower_reflex[k] for k in stack), stack[-1],
                    dict(u_table), FORWARD)
                for anchor, stack, u_table in _grow_chains(corridor)]
    if direction != BACKWARD:
        raise ValueError(f"Unknown direction: {direction}")

    mirrored = mirror_corridor(corridor)
    last_vertex = corridor.n
    last_lower = len(corridor.lower_reflex) - 1
    mccs = []
    for anchor, stack, u_table in _grow_chains(mirrored):
        vertices = tuple(mirror_reflex(mirrored.lower_reflex[k], last_vertex) for k in stack)
        table = {last_lower - k: mirror_reflex(u, last_vertex) for k, u in u_table.items()}
        mccs.append(Mcc(last_lower - anchor, vertices, last_lower - stack[-1], table, BACKWARD))
    return mccs


def _chain_pair(corridor: Corridor, mcc: Mcc, uts: Sequence[Fraction]) -> Optional[PairSlope]:
    lowers = corridor.lower_reflex
    uppers = corridor.upper_reflex
    if mcc.direction == FORWARD:
        first, last = mcc.anchor_index, mcc.end_index
        hi_k = bisect_left(uts, lowers[last + 1].t) if last + 1 < len(lowers) else len(uppers)
        region_l = lowers[first:last + 1]
        region_u = uppers[bisect_right(uts, lowers[first].t):hi_k]
        found = _sweep_max_slope([p.point for p in region_l], [u.point for u in region_u])[1]
    else:
        first, last = mcc.end_index, mcc.anchor_index
        lo_k = bisect_right(uts, lowers[first - 1].t) if first > 0 else 0
        region_l = lowers[first:last + 1][::-1]
        region_u = uppers[lo_k:bisect_left(uts, lowers[last].t)][::-1]
        found = _sweep_max_slope([(-p.t, p.y) for p in region_l],
                                 [(-u.t, u.y) for u in region_u])[1]
    if found is None:
        return None
    return make_pair(region_l[found[0]], region_u[found[1]])


def mcc_min_slope(corridor: Corridor, mcc: Mcc) -> Optional[PairSlope]:
    """
    Steepest overlapping pair supported by one chain.

    The chain's region runs from its anchor to the next chain's anchor in
    sweep direction. Its lower reflex points are pushed onto a convex chain
    in sweep order, and every upper reflex point of the region is paired with
    its tangent vertex on the chain built so far. Lower points left behind by
    a reset cannot see any upper point past it, so the regions together hold
    the steepest pair of the corridor.

    Returns:
        Optional[PairSlope]: The pair, or None when nothing in the region
        overlaps
    """
    return _chain_pair(corridor, mcc, [u.t for u in corridor.upper_reflex])


def mcc_candidates(corridor: Corridor) -> List[PairSlope]:
    """Candidate pairs of every forward and backward chain."""
    uts = [u.t for u in corridor.upper_reflex]
    out = []
    for direction in (FORWARD, BACKWARD):
        for mcc in build_mccs(corridor, direction):
            pair = _chain_pair(corridor, mcc, uts)
            if pair is not None:
                out.append(pair)
    return out
