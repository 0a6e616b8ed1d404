"""
Main entry point for the dops command line.

Parses the command, configures logging, opens the artifact directory and
runs the command behind the error middleware.
"""

import argparse
import asyncio
import json
import logging
import sys
from typing import List, Optional

from artifacts.store import close_store, init_store
from config.settings import settings
from handlers import cmd_generate, cmd_transform, cmd_verify
from middlewares.errors import ErrorMiddleware

logger = logging.getLogger(__name__)


def configure_logging() -> None:
    """Log to stdout and, when configured, to a file; stderr stays free for diagnostics."""
    handlers: List[logging.Handler] = [logging.StreamHandler(sys.stdout)]
    if settings.LOG_FILE:
        handlers.append(logging.FileHandler(settings.LOG_FILE, encoding='utf-8'))
    logging.basicConfig(
        level=getattr(logging, settings.LOG_LEVEL),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=handlers,
        force=True
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dops",
        description="Exact d-orthogonal polynomials, Geronimus transformations and bidiagonal factorizations."
    )
    commands = parser.add_subparsers(dest="command", required=True)

    generate = commands.add_parser("generate", help="Build the d-OPS of a scenario")
    transform = commands.add_parser("transform", help="Build one level of the Geronimus chain")
    verify = commands.add_parser("verify", help="Check the factorization identities")
    for sub in (generate, transform, verify):
        sub.add_argument("--scenario", required=True, help="Scenario JSON file")
        sub.add_argument("--out", default=None, help="Output directory (default: DOPS_OUTPUT_DIR)")
    transform.add_argument("--m", type=int, required=True, help="Level to build, 1..d")
    verify.add_argument("--chain", default=None, help="Check a previously written chain.json")
    return parser


async def run(args: argparse.Namespace) -> int:
    """
    Run one parsed command.

    Args:
        args: Parsed command line

    Returns:
        Process exit code
    """
    await init_store(args.out or settings.OUTPUT_DIR)
    middleware = ErrorMiddleware()
    try:
        if args.command == "generate":
            return await middleware(cmd_generate, args.scenario)
        if args.command == "transform":
            return await middleware(cmd_transform, args.scenario, args.m)
        return await middleware(cmd_verify, args.scenario, args.chain)
    finally:
        await close_store()


def main(argv: Optional[List[str]] = None) -> int:
    """Parse, configure and run; returns the exit code."""
    args = build_parser().parse_args(argv)
    try:
        settings.validate()
    except ValueError as e:
        sys.stderr.write(json.dumps({"error": "ConfigurationError", "message": str(e)}) + "\n")
        return 1
    configure_logging()
    logger.info(f"Running {args.command}")
    return asyncio.run(run(args))


if __name__ == "__main__":
    try:
        sys.exit(main())
    except KeyboardInterrupt:
        logger.info("Stopped by user")
        sys.exit(130)
