"""
Command-line entry point.

Provides:
- convert: apply a reduction and emit the target problem with its certificate
- solve: exact solutions, optionally pulled back through a certificate
- verify: seeded randomized exact-equality suites
- bench: size table of the two l1 -> Chebyshev reductions
- counterexample: dossier on the literal game -> Chebyshev system

Usage: lp-cheb <command> [options]   (or python -m src.cli.main)
Exit codes: 0 success, 1 verification or pullback failure, 2 usage or input error.
"""

import argparse
import logging
import sys
from typing import List, Optional

from src.cli.commands import bench, convert, counterexample, solve, verify
from src.cli.commands.common import EXIT_FAILURE, EXIT_USAGE, UsageError
from src.cli.serialization import ParseError
from src.core.config import get_settings
from src.core.models import DimensionError, InvariantViolation
from src.oracles.vertex_enum import LimitExceededError
from src.reductions.errors import ChainPullbackError, NotAStrategyError, ReductionError

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lp-cheb",
        description="Exact reductions between linear programs, symmetric games and Chebyshev/l1 approximation",
    )
    parser.add_argument("--log-level", default=None, help="Logging level (default: LOG_LEVEL or INFO)")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in (convert, solve, verify, bench, counterexample):
        command.register(subparsers)
    return parser


def configure_logging(level: Optional[str] = None) -> None:
    """Log to stderr; stdout carries documents and reports."""
    logging.basicConfig(
        level=(level or get_settings().log_level).upper(),
        format=LOG_FORMAT,
        stream=sys.stderr,
    )


def main(argv: Optional[List[str]] = None) -> int:
    """
    Run one command.

    Args:
        argv: Arguments without the program name (default: sys.argv[1:])

    Returns:
        Process exit code
    """
    args = build_parser().parse_args(argv)
    configure_logging(args.log_level)

    try:
        return args.handler(args)
    except (ChainPullbackError, NotAStrategyError) as e:
        logger.error(f"Pullback failed: {e}")
        return EXIT_FAILURE
    except ParseError as e:
        logger.error(str(e))
        return EXIT_USAGE
    except InvariantViolation as e:
        logger.error(f"Invariant violation: {e} (indices: {e.indices})")
        return EXIT_USAGE
    except (UsageError, DimensionError, ReductionError, LimitExceededError) as e:
        logger.error(f"{type(e).__name__}: {e}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
