"""
verify: run the seeded verification suites and report a table.
"""

import argparse
import logging

from src.cli.commands.common import EXIT_FAILURE, EXIT_OK
from src.core.config import get_settings
from src.oracles.suites import DEFAULT_MAX_SIZE, SUITES, results_table, run_suites

logger = logging.getLogger(__name__)


def register(subparsers) -> None:
    parser = subparsers.add_parser("verify", help="Run randomized exact-equality checks")
    parser.add_argument(
        "--suite",
        action="append",
        choices=list(SUITES),
        default=None,
        help="Suite to run (repeatable; default: all)",
    )
    parser.add_argument("--seed", type=int, default=None, help="Random seed (default: VERIFY_SEED)")
    parser.add_argument("--trials", type=int, default=None, help="Trials per suite (default: VERIFY_TRIALS)")
    parser.add_argument(
        "--max-size",
        type=int,
        default=DEFAULT_MAX_SIZE,
        help="Largest game size and l1 function count drawn",
    )
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    settings = get_settings()
    seed = settings.verify_seed if args.seed is None else args.seed
    trials = settings.verify_trials if args.trials is None else args.trials

    results = run_suites(args.suite, seed=seed, trials=trials, max_size=args.max_size)
    print(results_table(results).to_string(index=False))

    failed = [r for r in results if not r.passed]
    for result in failed:
        for detail in result.failures:
            print(f"FAIL [{result.name}] {detail}")
    if failed:
        logger.error(f"{len(failed)} of {len(results)} suites failed")
        return EXIT_FAILURE
    return EXIT_OK
