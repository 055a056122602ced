"""Command-line entry point: cluster-lambda <command> [options]."""

from __future__ import annotations

import logging
import sys

from ..errors import ClusterLambdaError, ConfigError
from .commands import dispatch
from .parser import build_parser

logger = logging.getLogger(__name__)


def main(argv: list[str] | None = None) -> int:
    """Parse arguments, run the command and return its exit status.

    Exit status is 0 on success, 1 when a check failed and 2 for bad input
    (unreadable config, unknown profile, invalid seed or triangulation).
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.quiet:
        logging.getLogger("src").setLevel(logging.WARNING)

    try:
        return dispatch(args)
    except (ConfigError, KeyError) as e:
        print(f"Error: {e}", file=sys.stderr)
        return 2
    except ClusterLambdaError as e:
        logger.error(f"{type(e).__name__}: {e}")
        print(f"Error: {e}", file=sys.stderr)
        return 2


__all__ = [
    "build_parser",
    "main",
]
