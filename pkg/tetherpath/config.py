"""
Configuration Module
Defaults for the planner, environment overrides and logging setup.
"""

import logging
import os
import sys
from fractions import Fraction

# Benches run the quadratic solver only up to this size
BRUTEFORCE_MAX_SIZE = 5000

# Oracles are correctness references for small corridors
ORACLE_MAX_SEGMENTS = 50

# Irrational budgets are rounded down to this grid before building a corridor
BUDGET_DENOMINATOR = 10 ** 12

# Inclusive range of integer segment durations drawn by the generator
DEFAULT_DURATION_RANGE = (Fraction(1), Fraction(4))

# SVG viewport
SVG_WIDTH = 800
SVG_HEIGHT = 400
SVG_MARGIN = 24

LOG_FORMAT = '%(asctime)s %(levelname)s %(name)s: %(message)s'


def bench_workers() -> int:
    """Number of worker processes used by benches (TETHERPATH_BENCH_WORKERS)."""
    try:
        return max(1, int(os.environ.get('TETHERPATH_BENCH_WORKERS', '1')))
    except ValueError:
        return 1


def configure_logging(verbose: bool = False) -> logging.Logger:
    """
    Attach a stream handler to the package logger.

    Args:
        verbose (bool): Force DEBUG output

    Returns:
        logging.Logger: The configured ``tetherpath`` logger
    """
    logger = logging.getLogger('tetherpath')
    level_name = 'DEBUG' if verbose else os.environ.get('TETHERPATH_LOG_LEVEL', 'WARNING')
    logger.setLevel(getattr(logging, level_name.upper(), logging.WARNING))
    if not logger.handlers:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        logger.addHandler(handler)
    return logger
