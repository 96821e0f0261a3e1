"""
Generator Module
Seeded random instances on an integer time grid.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

import numpy as np

from . import config
from .errors import InvalidConfig
from .exact import to_fraction
from .model import Instance, TurnPoint, validate_instance

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GenConfig:
    """Parameters of a random instance; validated on construction."""

    n_segments: int
    alpha: Fraction = Fraction(1)
    vertical_budget: Fraction = Fraction(1)
    seed: int = 0
    duration_range: Tuple[Fraction, Fraction] = config.DEFAULT_DURATION_RANGE

    def __post_init__(self):
        object.__setattr__(self, 'alpha', to_fraction(self.alpha))
        object.__setattr__(self, 'vertical_budget', to_fraction(self.vertical_budget))
        low, high = (to_fraction(v) for v in self.duration_range)
        object.__setattr__(self, 'duration_range', (low, high))
        if not isinstance(self.n_segments, int) or self.n_segments < 1:
            raise InvalidConfig(f"n_segments must be a positive integer, got {self.n_segments}")
        if self.alpha <= 0:
            raise InvalidConfig(f"alpha must be positive, got {self.alpha}")
        if self.vertical_budget <= 0:
            raise InvalidConfig(f"vertical_budget must be positive, got {self.vertical_budget}")
        if not 0 <= self.seed < 2 ** 64:
            raise InvalidConfig(f"seed must be a 64-bit unsigned integer, got {self.seed}")
        if low <= 0 or math.ceil(low) > math.floor(high):
            raise InvalidConfig(f"duration_range {low}..{high} holds no positive integer")


def gen_instance(cfg: GenConfig) -> Instance:
    """
    Draw a zig-zag drone path.

    Segment durations are integers from ``duration_range`` and directions
    alternate starting from a seeded sign, so every coordinate is exact.

    Args:
        cfg (GenConfig): Generator parameters

    Returns:
        Instance: A valid instance starting at (0, 0)
    """
    rng = np.random.default_rng(cfg.seed)
    low, high = cfg.duration_range
    durations = rng.integers(math.ceil(low), math.floor(high), size=cfg.n_segments,
                             endpoint=True)
    sign = 1 if rng.integers(0, 2) else -1

    t, h = Fraction(0), Fraction(0)
    turns = [TurnPoint(t, h)]
    for duration in durations.tolist():
        t += duration
        h += sign * cfg.alpha * duration
        turns.append(TurnPoint(t, h))
        sign = -sign
    instance = Instance(cfg.alpha, cfg.vertical_budget, tuple(turns))
    validate_instance(instance)
    logger.debug("Generated %d segments with seed %d", cfg.n_segments, cfg.seed)
    return instance
