"""
Bench Module
Wall-clock scaling of the solve pipeline on seeded random instances.
"""

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from typing import List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

from . import config
from .errors import SelfCheckFailed
from .generator import GenConfig, gen_instance
from .minlink import build_min_link_path
from .minslope import BRUTEFORCE, LINEAR, min_slope_bruteforce, min_slope_linear
from .model import build_corridor

logger = logging.getLogger(__name__)

COLUMNS = ['size', 'method', 'median_ns']

Sample = Tuple[int, int, str, int, str]


def instance_seed(seed: int, size: int, repetition: int) -> int:
    """Seed of one benchmark instance, independent of scheduling."""
    state = np.random.SeedSequence([seed, size, repetition]).generate_state(1, dtype=np.uint64)
    return int(state[0])


def _time_one(task: Tuple[int, int, int]) -> List[Sample]:
    size, repetition, seed = task
    instance = gen_instance(GenConfig(size, seed=instance_seed(seed, size, repetition)))
    corridor = build_corridor(instance)

    samples = []
    start = time.perf_counter_ns()
    solution = min_slope_linear(corridor)
    build_min_link_path(corridor, solution)
    elapsed = time.perf_counter_ns() - start
    samples.append((size, repetition, LINEAR, elapsed, str(solution.beta_star)))

    if size <= config.BRUTEFORCE_MAX_SIZE:
        start = time.perf_counter_ns()
        reference = min_slope_bruteforce(corridor)
        elapsed = time.perf_counter_ns() - start
        if reference.beta_star != solution.beta_star:
            raise SelfCheckFailed(
                f"size {size} rep {repetition}: linear {solution.beta_star} "
                f"!= bruteforce {reference.beta_star}")
        samples.append((size, repetition, BRUTEFORCE, elapsed, str(reference.beta_star)))
    return samples


def run_bench(sizes: Sequence[int], repeats: int, seed: int = 0,
              workers: Optional[int] = None) -> pd.DataFrame:
    """
    Time the linear pipeline (and the brute-force solver on small sizes).

    Args:
        sizes: Segment counts to benchmark
        repeats (int): Instances per size
        seed (int): Seed of the instance stream
        workers (int): Worker processes, defaults to TETHERPATH_BENCH_WORKERS

    Returns:
        pd.DataFrame: Columns size, method, median_ns ordered by size then method
    """
    if any(size < 1 for size in sizes):
        raise ValueError(f"Bench sizes must be positive: {list(sizes)}")
    tasks = [(size, rep, seed) for size in sizes for rep in range(repeats)]
    if not tasks:
        return pd.DataFrame(columns=COLUMNS)

    workers = workers or config.bench_workers()
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_time_one, tasks))
    else:
        results = [_time_one(task) for task in tasks]

    samples = pd.DataFrame([s for batch in results for s in batch],
                           columns=['size', 'repetition', 'method', 'ns', 'beta_star'])
    samples = samples.sort_values(['size', 'repetition'], kind='stable')
    rows = []
    for (size, method), group in samples.groupby(['size', 'method'], sort=True):
        rows.append((int(size), method, int(np.median(group['ns'].to_numpy()))))
        logger.info("size=%d method=%s median=%d ns", size, method, rows[-1][2])
    return pd.DataFrame(rows, columns=COLUMNS)


def write_report(report: pd.DataFrame, path) -> None:
    """Write the bench report as CSV with header size,method,median_ns."""
    report.to_csv(path, index=False, columns=COLUMNS)
