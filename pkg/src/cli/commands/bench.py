"""
bench: compare the sizes of the linear-size and direct l1 -> Chebyshev reductions.
"""

import argparse
import logging
from typing import List, Optional

import numpy as np
import pandas as pd

from src.cli.commands.common import EXIT_OK
from src.core.config import get_settings
from src.oracles.sampling import random_l1_problem
from src.reductions.chains import l1_to_cheb_direct, l1_to_cheb_linear

logger = logging.getLogger(__name__)


def parse_range(text: str) -> List[int]:
    """"a..b" (inclusive), "a,b,c" or a single integer, all >= 1."""
    try:
        if ".." in text:
            low, high = (int(part) for part in text.split("..", 1))
            values = list(range(low, high + 1))
        else:
            values = [int(part) for part in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"Invalid range {text!r}; use a..b, a,b,c or a single integer")
    if not values or min(values) < 1:
        raise argparse.ArgumentTypeError(f"Range {text!r} must be nonempty with values >= 1")
    return values


def register(subparsers) -> None:
    parser = subparsers.add_parser("bench", help="Tabulate reduction sizes")
    parser.add_argument("--m", type=parse_range, default=parse_range("2..10"), help="Function counts, e.g. 2..10")
    parser.add_argument("--n", type=parse_range, default=parse_range("1"), help="Variable counts, e.g. 1..3")
    parser.add_argument("--cap", type=int, default=None, help="Largest m for which the direct reduction is built")
    parser.add_argument("--seed", type=int, default=0, help="Seed of the random l1 instances")
    parser.set_defaults(handler=run)


def size_table(ms: List[int], ns: List[int], cap: Optional[int] = None, seed: int = 0) -> pd.DataFrame:
    """
    Build both reductions of a random l1 instance per (m, n) and record their sizes.

    Above the cap the direct size is the count 2^(m-1) without building it.

    Returns:
        DataFrame with columns m, n, linear_functions, linear_variables,
        direct_functions, direct_built
    """
    if cap is None:
        cap = get_settings().direct_reduction_cap
    rng = np.random.default_rng(seed)

    rows = []
    for m in ms:
        for n in ns:
            p = random_l1_problem(rng, m, n)
            linear, _ = l1_to_cheb_linear(p)
            built = m <= cap
            direct = l1_to_cheb_direct(p, cap).size if built else 2 ** (m - 1)
            rows.append({
                "m": m,
                "n": n,
                "linear_functions": linear.size,
                "linear_variables": linear.arity,
                "direct_functions": direct,
                "direct_built": built,
            })
    return pd.DataFrame(rows)


def run(args: argparse.Namespace) -> int:
    table = size_table(args.m, args.n, args.cap, args.seed)
    print(table.to_string(index=False))
    logger.debug(f"bench: {len(table)} rows")
    return EXIT_OK
