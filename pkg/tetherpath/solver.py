"""
Solver Module
Solve pipeline: corridor, minimum slope, greedy path and self-verification.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Optional, Tuple

from .data_loader import DataLoader, PathLike, path_to_dict
from .errors import SelfCheckFailed
from .exact import decimal_string, format_exact, format_ratio
from .minlink import BetaPath, PathMetrics, build_min_link_path, check_path_shape, path_metrics
from .minslope import BRUTEFORCE, LINEAR, SlopeSolution, min_slope_bruteforce, min_slope_linear
from .model import Corridor, Instance, build_corridor
from .oracle import check_distance, check_feasible
from .predicates import PairSlope

logger = logging.getLogger(__name__)

SOLVERS = {
    LINEAR: min_slope_linear,
    BRUTEFORCE: min_slope_bruteforce,
}


@dataclass(frozen=True)
class SolutionRecord:
    """Everything ``solve`` reports about one instance."""

    beta_star: Fraction
    witness: Optional[PairSlope]
    path: BetaPath
    metrics: PathMetrics
    method: str
    instance_digest: str

    def to_dict(self) -> Dict[str, Any]:
        witness = None
        if self.witness is not None:
            witness = {
                'lower': [format_exact(v) for v in self.witness.lower.point],
                'upper': [format_exact(v) for v in self.witness.upper.point],
            }
        return {
            'beta_star': format_ratio(self.beta_star),
            'beta_star_decimal': decimal_string(self.beta_star),
            'witness': witness,
            'path': path_to_dict(self.path),
            'links': self.metrics.links,
            'turns': self.metrics.turns,
            'length_squared': format_ratio(self.metrics.length_squared),
            'length_decimal': self.metrics.length_decimal,
            'method': self.method,
            'instance_digest': self.instance_digest,
        }


class PathPlanner:
    """Solves instances with one min-slope solver and self-checks every answer."""

    def __init__(self, mode: str = LINEAR, loader: Optional[DataLoader] = None):
        """Initialize the planner with a solver mode and a file loader."""
        if mode not in SOLVERS:
            raise ValueError(f"Unknown mode: {mode}")
        self.mode = mode
        self.loader = loader or DataLoader()

    def solve_corridor(self, corridor: Corridor) -> Tuple[SlopeSolution, BetaPath]:
        """
        Compute beta* and the greedy beta*-path of a corridor.

        Returns:
            (slope solution, minimum-link path)
        """
        solution = SOLVERS[self.mode](corridor)
        return solution, build_min_link_path(corridor, solution)

    def solve(self, instance: Instance, digest: str = '') -> SolutionRecord:
        """
        Solve an instance and verify the result before returning it.

        Raises:
            SelfCheckFailed: The path is malformed or leaves the corridor
        """
        corridor = build_corridor(instance)
        solution, path = self.solve_corridor(corridor)
        problems = check_path_shape(path, corridor.t_start, corridor.t_end)
        if problems:
            raise SelfCheckFailed("; ".join(problems))
        if not check_feasible(corridor, path):
            raise SelfCheckFailed("path leaves the corridor")
        if not check_distance(instance, path):
            raise SelfCheckFailed("path breaks the tether constraint")
        metrics = path_metrics(path)
        logger.info("beta*=%s with %d links (%s)", solution.beta_star, metrics.links, self.mode)
        return SolutionRecord(solution.beta_star, solution.witness, path, metrics, self.mode,
                              digest)

    def solve_file(self, instance_file: PathLike) -> SolutionRecord:
        """Load an instance file and solve it."""
        instance, digest = self.loader.load_instance(instance_file)
        return self.solve(instance, digest)


def run_solve(instance_file: PathLike, mode: str = LINEAR) -> SolutionRecord:
    """Load an instance file and solve it."""
    return PathPlanner(mode).solve_file(instance_file)
