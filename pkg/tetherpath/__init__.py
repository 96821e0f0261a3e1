"""
Tethered path planner.

Ground paths for a robot tethered to a drone that zig-zags along a parallel
line: the minimum slope that keeps the tether taut enough, and the path with
the fewest turns (and shortest length) at that slope.
"""

from .data_loader import DataLoader
from .errors import PlannerError
from .minlink import BetaPath, PathMetrics, build_min_link_path, path_metrics, steepen_path
from .minslope import SlopeSolution, min_slope_bruteforce, min_slope_linear
from .model import Corridor, Instance, ReflexPoint, TurnPoint, build_corridor
from .solver import PathPlanner

__version__ = '1.0.0'

__all__ = [
    'BetaPath', 'Corridor', 'DataLoader', 'Instance', 'PathMetrics', 'PathPlanner',
    'PlannerError', 'ReflexPoint',
    'SlopeSolution', 'TurnPoint', 'build_corridor', 'build_min_link_path',
    'min_slope_bruteforce', 'min_slope_linear', 'path_metrics', 'steepen_path',
]
