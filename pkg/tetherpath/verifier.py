"""
Verifier Module
Re-checks a solution file against its instance.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from . import config
from .data_loader import DataLoader, PathLike, parse_path
from .errors import PlannerError
from .exact import to_fraction
from .minlink import check_path_shape, path_metrics
from .model import build_corridor
from .oracle import check_distance, check_feasible, min_link_oracle, min_slope_oracle
from .solver import PathPlanner

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ''


@dataclass
class VerifyReport:
    """Outcome of every check run on one solution."""

    checks: List[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> List[Check]:
        return [c for c in self.checks if not c.passed]

    def add(self, name: str, passed: bool, detail: str = '') -> None:
        self.checks.append(Check(name, bool(passed), detail))
        if not passed:
            logger.info("Check %s failed: %s", name, detail)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'passed': self.passed,
            'checks': [{'name': c.name, 'passed': c.passed, 'detail': c.detail}
                       for c in self.checks],
        }


def run_verify(instance_file: PathLike, solution_file: PathLike, use_oracle: bool = False,
               loader: Optional[DataLoader] = None) -> VerifyReport:
    """
    Verify a solution file.

    Checks the instance digest, the path shape, feasibility in the corridor
    and against the tether, the reported metrics, and that beta* and the
    link count are minimal. With ``use_oracle`` the last two are also
    compared against the oracles (small instances only).

    Args:
        instance_file: Instance JSON
        solution_file: SolutionRecord JSON
        use_oracle (bool): Also run the brute-force oracles
        loader (DataLoader): File loader, defaults to the working directory

    Returns:
        VerifyReport: One entry per check
    """
    loader = loader or DataLoader()
    instance, digest = loader.load_instance(instance_file)
    document = loader.load_document(solution_file)
    corridor = build_corridor(instance)
    report = VerifyReport()

    report.add('digest', document.get('instance_digest') == digest,
               f"solution records {document.get('instance_digest')}, file is {digest}")
    try:
        beta = to_fraction(document['beta_star'])
        path = parse_path(document['path'], beta)
        links = int(document['links'])
        turns = int(document['turns'])
        length_squared = to_fraction(document['length_squared'])
    except (KeyError, TypeError, ValueError) as e:
        report.add('format', False, f"unreadable solution: {e}")
        return report

    problems = check_path_shape(path, corridor.t_start, corridor.t_end)
    report.add('shape', not problems, "; ".join(problems))
    if problems:
        return report

    try:
        report.add('feasible', check_feasible(corridor, path), "path leaves the corridor")
        report.add('distance', check_distance(instance, path), "tether constraint broken")
    except PlannerError as e:
        report.add('feasible', False, str(e))
        return report

    metrics = path_metrics(path)
    report.add('metrics',
               (links, turns, length_squared) == (metrics.links, metrics.turns,
                                                  metrics.length_squared)
               and document.get('length_decimal') == metrics.length_decimal,
               f"recorded links={links} turns={turns}, path has {metrics.links} links")

    solution, best_path = PathPlanner(loader=loader).solve_corridor(corridor)
    report.add('beta_star', beta == solution.beta_star,
               f"recorded {beta}, minimum is {solution.beta_star}")
    report.add('min_links', links == best_path.links,
               f"recorded {links} links, minimum is {best_path.links}")

    if use_oracle:
        if corridor.n > config.ORACLE_MAX_SEGMENTS:
            logger.warning("Oracle checks on %d segments may be slow", corridor.n)
        oracle_beta = min_slope_oracle(corridor)
        report.add('oracle_beta_star', beta == oracle_beta,
                   f"recorded {beta}, oracle gives {oracle_beta}")
        oracle_links = min_link_oracle(corridor, oracle_beta)
        report.add('oracle_links', links == oracle_links,
                   f"recorded {links} links, oracle gives {oracle_links}")
    return report
