"""
Main CLI Interface for the Tethered Path Planner.
Handles command-line arguments and orchestrates generation, solving,
verification, benchmarking and plotting.
"""

import argparse
import json
import os
import sys
from typing import List, Optional

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from tetherpath import config
from tetherpath.bench import run_bench, write_report
from tetherpath.data_loader import DataLoader, dumps, instance_to_dict
from tetherpath.errors import PlannerError, SelfCheckFailed
from tetherpath.exact import to_fraction
from tetherpath.generator import GenConfig, gen_instance
from tetherpath.minslope import BRUTEFORCE, FORWARD, LINEAR, build_mccs
from tetherpath.model import build_corridor
from tetherpath.plot import render_svg, write_svg
from tetherpath.solver import PathPlanner
from tetherpath.verifier import run_verify

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INPUT_ERROR = 2


def create_parser() -> argparse.ArgumentParser:
    """Create and configure argument parser."""
    parser = argparse.ArgumentParser(
        description='Min-link / min-length ground paths for a tethered robot following a drone',
        formatter_class=argparse.RawDescriptionHelpFormatter
    )

    parser.add_argument(
        'command',
        choices=['gen', 'solve', 'verify', 'bench', 'plot'],
        help='Command to execute'
    )

    parser.add_argument('--in', dest='input', type=str, default=None,
                        help='Instance JSON file')
    parser.add_argument('--out', type=str, default=None,
                        help='Output file (JSON, CSV or SVG depending on the command)')
    parser.add_argument('--solution', type=str, default=None,
                        help='Solution JSON file')
    parser.add_argument('--mode', choices=[LINEAR, BRUTEFORCE], default=LINEAR,
                        help='Min-slope solver used by solve')
    parser.add_argument('--oracle', action='store_true',
                        help='Also compare against the brute-force oracles (small instances)')

    parser.add_argument('--n', type=int, default=None, help='Number of drone segments')
    parser.add_argument('--alpha', type=str, default='1', help='Drone speed')
    parser.add_argument('--budget', type=str, default='1', help='Vertical budget L')
    parser.add_argument('--seed', type=int, default=0, help='Random seed')

    parser.add_argument('--sizes', type=str, default='10000,100000,1000000',
                        help='Comma-separated segment counts for bench')
    parser.add_argument('--repeats', type=int, default=3, help='Instances per bench size')

    parser.add_argument('--verbose', action='store_true', help='Debug logging')
    return parser


def status(message: str) -> None:
    print(message, file=sys.stderr)


def emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, 'w', encoding='utf-8') as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def _require(args, *names: str) -> None:
    missing = [name for name in names if getattr(args, name) is None]
    if missing:
        flags = ', '.join('--' + ('in' if name == 'input' else name) for name in missing)
        raise PlannerError(f"{args.command} needs {flags}")


def run_gen(args) -> int:
    """Generate a random instance."""
    _require(args, 'n')
    status(f"🎲 Generating {args.n} segments (seed {args.seed})...")
    cfg = GenConfig(args.n, to_fraction(args.alpha), to_fraction(args.budget), args.seed)
    emit(dumps(instance_to_dict(gen_instance(cfg))), args.out)
    status("✅ Instance written")
    return EXIT_OK


def run_solve_command(args) -> int:
    """Solve an instance file."""
    _require(args, 'input')
    status(f"🔄 Solving {args.input} ({args.mode})...")
    record = PathPlanner(args.mode, DataLoader()).solve_file(args.input)
    emit(dumps(record.to_dict()), args.out)
    status(f"✅ beta* = {record.beta_star}, {record.metrics.links} links")
    return EXIT_OK


def run_verify_command(args) -> int:
    """Verify a solution file against its instance."""
    _require(args, 'input', 'solution')
    status(f"🔍 Verifying {args.solution}...")
    report = run_verify(args.input, args.solution, use_oracle=args.oracle, loader=DataLoader())
    emit(json.dumps(report.to_dict(), indent=2) + '\n', args.out)
    if report.passed:
        status(f"✅ All {len(report.checks)} checks passed")
        return EXIT_OK
    for check in report.failures:
        status(f"❌ {check.name}: {check.detail}")
    return EXIT_VERIFY_FAILED


def run_bench_command(args) -> int:
    """Benchmark the solvers."""
    try:
        sizes = [int(s) for s in args.sizes.split(',') if s.strip()]
    except ValueError:
        raise PlannerError(f"Bad --sizes value: {args.sizes}")
    status(f"⏱️  Benchmarking sizes {sizes} x {args.repeats}...")
    report = run_bench(sizes, args.repeats, args.seed)
    if args.out:
        write_report(report, args.out)
    else:
        sys.stdout.write(report.to_csv(index=False))
    status(f"📊 {len(report)} rows")
    return EXIT_OK


def run_plot(args) -> int:
    """Draw an instance and optionally its solution."""
    _require(args, 'input', 'out')
    loader = DataLoader()
    instance, _ = loader.load_instance(args.input)
    corridor = build_corridor(instance)
    path = None
    if args.solution:
        _, path = loader.load_solution(args.solution)
    write_svg(args.out, render_svg(corridor, path, build_mccs(corridor, FORWARD)))
    status(f"🖼️  Plot written to {args.out}")
    return EXIT_OK


COMMANDS = {
    'gen': run_gen,
    'solve': run_solve_command,
    'verify': run_verify_command,
    'bench': run_bench_command,
    'plot': run_plot,
}


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point; returns the process exit code."""
    parser = create_parser()
    args = parser.parse_args(argv)
    config.configure_logging(args.verbose)

    try:
        return COMMANDS[args.command](args)
    except SelfCheckFailed as e:
        print(json.dumps(e.to_dict()))
        return EXIT_VERIFY_FAILED
    except PlannerError as e:
        print(json.dumps(e.to_dict()))
        return EXIT_INPUT_ERROR
    except (OSError, KeyError) as e:
        print(json.dumps({'error': 'io_error', 'message': str(e)}))
        return EXIT_INPUT_ERROR


if __name__ == '__main__':
    sys.exit(main())
