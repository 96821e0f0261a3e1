"""
Minimum Link Module
Builds the minimum-link beta*-path with the Greedy Construction, steepens
paths to larger slopes, and measures them.

A beta-path alternates between slopes +beta and -beta. Its length depends
only on beta and the time span, so the greedy beta*-path is also the
shortest feasible constant-slope path.
"""

import logging
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .errors import InfeasibleSlope, SlopeOutOfRange
from .exact import sqrt_decimal
from .model import Corridor, Point, ReflexPoint, interpolate
from .minslope import SlopeSolution

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BetaPath:
    """A ground path with slopes +beta/-beta between consecutive vertices."""

    beta: Fraction
    start: Point
    turns: Tuple[Point, ...]
    end: Point

    @property
    def vertices(self) -> List[Point]:
        return [self.start, *self.turns, self.end]

    @property
    def links(self) -> int:
        return len(self.turns) + 1

    @property
    def segments(self) -> List[Tuple[Point, Point]]:
        points = self.vertices
        return list(zip(points, points[1:]))

    @property
    def sign_sequence(self) -> Tuple[int, ...]:
        """+1 / -1 per segment, derived from the geometry; empty when beta = 0."""
        if self.beta == 0:
            return ()
        return tuple(1 if b[1] > a[1] else -1 for a, b in self.segments)

    def y_at(self, t: Fraction) -> Fraction:
        """Height of the path at time t."""
        points = self.vertices
        if t < points[0][0] or t > points[-1][0]:
            raise ValueError(f"t={t} outside the path span")
        ts = [p[0] for p in points]
        k = bisect_right(ts, t)
        if k >= len(points):
            return points[-1][1]
        (t0, y0), (t1, y1) = points[k - 1], points[k]
        return y0 + (y1 - y0) * (t - t0) / (t1 - t0)


@dataclass(frozen=True)
class PathMetrics:
    """Link count and exact squared length of a path."""

    links: int
    turns: int
    length_squared: Fraction
    length_decimal: str


def path_metrics(path: BetaPath) -> PathMetrics:
    """
    Measure a beta-path.

    Args:
        path (BetaPath): The path

    Returns:
        PathMetrics: links, turns and (t_n - t_0)^2 * (1 + beta^2)
    """
    span = path.end[0] - path.start[0]
    squared = span * span * (1 + path.beta * path.beta)
    return PathMetrics(path.links, path.links - 1, squared, sqrt_decimal(squared))


def check_path_shape(path: BetaPath, t_start: Optional[Fraction] = None,
                     t_end: Optional[Fraction] = None) -> List[str]:
    """
    List the ways a path breaks the BetaPath invariants.

    Args:
        path: The path to inspect
        t_start, t_end: Expected span, when known

    Returns:
        List[str]: Human-readable violations, empty for a valid path
    """
    problems = []
    if path.beta < 0:
        problems.append(f"negative slope magnitude {path.beta}")
    if t_start is not None and path.start[0] != t_start:
        problems.append(f"path starts at t={path.start[0]}, expected {t_start}")
    if t_end is not None and path.end[0] != t_end:
        problems.append(f"path ends at t={path.end[0]}, expected {t_end}")
    previous = 0
    for i, ((ta, ya), (tb, yb)) in enumerate(path.segments):
        if tb <= ta:
            problems.append(f"segment {i} does not advance in time")
            continue
        slope = (yb - ya) / (tb - ta)
        if abs(slope) != path.beta:
            problems.append(f"segment {i} has slope {slope}, expected +/-{path.beta}")
            continue
        sign = (slope > 0) - (slope < 0)
        if sign != 0 and sign == previous:
            problems.append(f"segments {i - 1} and {i} do not alternate")
        previous = sign
    if path.beta == 0 and path.turns:
        problems.append("a horizontal path has no turns")
    return problems


def passes_through(path: BetaPath, point: Point) -> bool:
    """Check whether a (t, y) point lies on the path."""
    t, y = point
    if t < path.start[0] or t > path.end[0]:
        return False
    return path.y_at(t) == y


def segment_supports(corridor: Corridor, path: BetaPath) -> List[bool]:
    """
    Support test per segment.

    An up-segment is supported when it contains a lower reflex point, a
    down-segment when it contains an upper reflex point. Horizontal segments
    count as supported.
    """
    lower_ts = [p.t for p in corridor.lower_reflex]
    upper_ts = [p.t for p in corridor.upper_reflex]
    out = []
    for (ta, ya), (tb, yb) in path.segments:
        if ya == yb:
            out.append(True)
            continue
        if yb > ya:
            candidates, times = corridor.lower_reflex, lower_ts
        else:
            candidates, times = corridor.upper_reflex, upper_ts
        slope = (yb - ya) / (tb - ta)
        window = candidates[bisect_left(times, ta):bisect_right(times, tb)]
        out.append(any(ya + slope * (p.t - ta) == p.y for p in window))
    return out


def _exit_time(ts, lo, hi, flip: int, beta: Fraction, d: Fraction,
               t_a: Fraction) -> Tuple[Optional[Fraction], int]:
    """
    Follow the falling line y = d - beta*t from t_a.

    ``lo``/``hi`` are read as ``flip * lo[k]`` and ``flip * hi[k]``.

    Returns:
        (time the line drops below the lower chain, index of the first vertex
        after it), or (None, len(ts)) when it reaches the end of the corridor
    """
    for k in range(bisect_right(ts, t_a), len(ts)):
        y = d - beta * ts[k]
        if y > flip * hi[k]:
            raise InfeasibleSlope(f"Falling line leaves through the upper chain before t={ts[k]}")
        if y < flip * lo[k]:
            t0 = max(t_a, ts[k - 1])
            f0 = d - beta * t0 - flip * interpolate(ts[k - 1:k + 1], lo[k - 1:k + 1], t0)
            f1 = y - flip * lo[k]
            return t0 + f0 * (ts[k] - t0) / (f0 - f1), k
    return None, len(ts)


def _greedy_extend(ts: Sequence[Fraction], lower: Sequence[Fraction], upper: Sequence[Fraction],
                   beta: Fraction, sign: int, intercept: Fraction,
                   t_a: Fraction) -> Tuple[List[Point], Fraction]:
    """
    Extend the line y = sign*beta*t + intercept from t_a to the end.

    Work is done in a frame where the current segment falls (y is negated
    while following a rising segment, which also swaps the chains). When the
    falling line would leave through the lower chain at t_e, the next segment
    is the lowest rising line that clears every lower vertex from t_e until
    it meets the upper chain; the turn sits where the two lines cross.

    The rising line stays inside the corridor from the turn up to the
    crossing with the upper chain, and that crossing is where it leaves in
    the next frame, so every vertex is scanned a bounded number of times.

    Returns:
        (turn points, height at the last corridor time)
    """
    n = len(ts)
    flip = 1 if sign < 0 else -1
    lo, hi = (lower, upper) if flip > 0 else (upper, lower)
    d = flip * intercept
    t_e, k = _exit_time(ts, lo, hi, flip, beta, d, t_a)
    if t_e is None:
        return [], flip * (d - beta * ts[-1])

    turns: List[Point] = []
    for _ in range(2 * n + 4):
        c = d - 2 * beta * t_e
        j = k
        while j < n and beta * ts[j] + c <= flip * hi[j]:
            c = max(c, flip * lo[j] - beta * ts[j])
            j += 1
        t_x = (d - c) / (2 * beta)
        if t_x < t_a:
            raise InfeasibleSlope(f"No turn point after t={t_a} keeps the path inside")
        point = (t_x, flip * (d - beta * t_x))
        if turns and turns[-1] == point:
            turns.pop()
        else:
            turns.append(point)
        logger.debug("Turn at %s, next line exits the falling frame at %s", point, t_e)
        if j == n:
            return turns, flip * (c + beta * ts[-1])

        p = max(t_e, ts[j - 1])
        g0 = beta * p + c - flip * interpolate(ts[j - 1:j + 1], hi[j - 1:j + 1], p)
        g1 = beta * ts[j] + c - flip * hi[j]
        t_e = p - g0 * (ts[j] - p) / (g1 - g0)
        flip, lo, hi, d, t_a, k = -flip, hi, lo, -c, t_x, j
    raise InfeasibleSlope("Greedy construction did not reach the end of the corridor")


def _mirrored(points: Sequence[Point]) -> List[Point]:
    return [(-t, y) for t, y in reversed(points)]


def _settle(corridor: Corridor, path: BetaPath) -> BetaPath:
    """
    Slide every segment toward its support chain until a vertex lands on it.

    Lowering a rising segment (or raising a falling one) moves both of its
    turns right by the same delta: the previous segment grows and keeps its
    contact, the next one shrinks and is settled after it. Taking the
    smallest delta at which a chain vertex touches the moved segment keeps
    the path inside the corridor. Segments are visited left to right and
    each scan stops at the end of the next segment.
    """
    beta, ts = path.beta, corridor.ts
    points = path.vertices
    signs = path.sign_sequence
    intercepts = [y - s * beta * t for s, (t, y) in zip(signs, points)]
    lefts = [p[0] for p in points[:-1]]
    rights = [p[0] for p in points[1:]]
    last = len(signs) - 1

    for i, s in enumerate(signs):
        left, right = lefts[i], rights[i]
        if left == right:
            continue
        chain = corridor.lower if s > 0 else corridor.upper
        level = s * intercepts[i]
        room = None if i == last else rights[i + 1] - right
        bound = ts[-1] if room is None else right + room
        best = None
        k = bisect_left(ts, left)
        while k < len(ts) and ts[k] <= bound:
            delta = (level - s * chain[k] + beta * ts[k]) / (2 * beta)
            if (delta >= 0 and (room is None or delta <= room)
                    and (best is None or delta < best)
                    and (i == 0 or left + delta <= ts[k])
                    and (i == last or ts[k] <= right + delta)):
                best = delta
            k += 1
        if best is None:
            logger.debug("Segment %d has no contact within reach", i)
            continue
        if best == 0:
            continue
        intercepts[i] = s * (level - 2 * beta * best)
        if i > 0:
            lefts[i] = rights[i - 1] = left + best
        if i < last:
            rights[i] = lefts[i + 1] = right + best

    start = (ts[0], signs[0] * beta * ts[0] + intercepts[0])
    end = (ts[-1], signs[-1] * beta * ts[-1] + intercepts[-1])
    turns = []
    for i in range(last):
        t = (intercepts[i + 1] - intercepts[i]) / (2 * signs[i] * beta)
        turns.append((t, signs[i] * beta * t + intercepts[i]))
    points = _merge_collinear([start, *turns, end])
    return BetaPath(beta, points[0], tuple(points[1:-1]), points[-1])


def build_min_link_path(corridor: Corridor, solution: SlopeSolution) -> BetaPath:
    """
    Greedy Construction of the minimum-link beta*-path.

    Starts on the line through the witness pair, extends it greedily to the
    right, and extends it to the left by running the same construction on
    the time-mirrored corridor. The mirrored half touches the opposite
    chains, so a final settle pass slides each segment onto its own support
    chain without changing the link count.

    Args:
        corridor (Corridor): The corridor
        solution (SlopeSolution): beta* and its witness pair

    Returns:
        BetaPath: A feasible path with the fewest links
    """
    beta = solution.beta_star
    if beta == 0:
        y = (max(corridor.lower) + min(corridor.upper)) / 2
        return BetaPath(beta, (corridor.t_start, y), (), (corridor.t_end, y))
    if solution.witness is None:
        raise InfeasibleSlope("A positive slope needs a witness pair")

    l, u = solution.witness.lower, solution.witness.upper
    sign = -1 if l.t < u.t else 1
    intercept = l.y - sign * beta * l.t

    forward, end_y = _greedy_extend(corridor.ts, corridor.lower, corridor.upper,
                                    beta, sign, intercept, max(l.t, u.t))
    mirror_ts = [-t for t in reversed(corridor.ts)]
    backward, start_y = _greedy_extend(mirror_ts, corridor.lower[::-1], corridor.upper[::-1],
                                       beta, -sign, intercept, -min(l.t, u.t))
    turns = _mirrored(backward) + forward
    path = BetaPath(beta, (corridor.t_start, start_y), tuple(turns), (corridor.t_end, end_y))
    path = _settle(corridor, path)
    logger.debug("Greedy path with %d links for beta=%s", path.links, beta)
    return path


def _merge_collinear(points: List[Point]) -> List[Point]:
    """Drop zero-length segments and join consecutive segments of equal slope."""
    out: List[Point] = []
    for p in points:
        if out and out[-1][0] == p[0]:
            continue
        if len(out) >= 2:
            (t0, y0), (t1, y1) = out[-2], out[-1]
            if (y1 - y0) * (p[0] - t1) == (p[1] - y1) * (t1 - t0):
                out[-1] = p
                continue
        out.append(p)
    return out


def steepen_path(corridor: Corridor, path: BetaPath, beta: Fraction) -> BetaPath:
    """
    Turn a feasible path into a feasible path with the larger slope beta.

    Every segment is cut at the projections of the reflex points strictly
    inside its time range, and consecutive cut points are joined by a rise
    followed by a fall at slope beta.

    Raises:
        SlopeOutOfRange: beta is below the path's slope or above alpha
    """
    beta = Fraction(beta)
    if beta < path.beta or beta > corridor.alpha:
        raise SlopeOutOfRange(f"beta={beta} outside [{path.beta}, {corridor.alpha}]")
    if beta == path.beta:
        return path

    reflex: List[ReflexPoint] = sorted(corridor.lower_reflex + corridor.upper_reflex,
                                       key=lambda p: p.t)
    cuts: List[Point] = [path.start]
    for (ta, ya), (tb, yb) in path.segments:
        slope = (yb - ya) / (tb - ta)
        for t in sorted({p.t for p in reflex if ta < p.t < tb}):
            cuts.append((t, ya + slope * (t - ta)))
        cuts.append((tb, yb))

    points: List[Point] = [cuts[0]]
    for (ta, ya), (tb, yb) in zip(cuts, cuts[1:]):
        apex = (yb - ya + beta * (ta + tb)) / (2 * beta)
        points.append((apex, ya + beta * (apex - ta)))
        points.append((tb, yb))
    points = _merge_collinear(points)
    return BetaPath(beta, points[0], tuple(points[1:-1]), points[-1])
