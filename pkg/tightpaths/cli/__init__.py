import logging
import sys
from typing import List, Optional

from tightpaths import __version__
from tightpaths.cli.bench import add_bench_parser
from tightpaths.cli.common import ArgumentParser, configure_logging, exit_code_for
from tightpaths.cli.gen import add_gen_parser
from tightpaths.cli.run import add_run_parsers
from tightpaths.cli.verify import add_verify_parser
from tightpaths.exceptions import TightPathsException

logger = logging.getLogger(__name__)


def get_parser() -> ArgumentParser:
    parser = ArgumentParser(
        prog="tightpaths",
        description="Tight paths and tight pairs in weighted graphs.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    subparsers = parser.add_subparsers(dest="command", required=True)
    add_run_parsers(subparsers)
    add_bench_parser(subparsers)
    add_verify_parser(subparsers)
    add_gen_parser(subparsers)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = get_parser().parse_args(argv)
    configure_logging(args.verbose)
    try:
        return args.func(args)
    except (TightPathsException, OSError) as e:
        logger.debug("%s failed", args.command, exc_info=True)
        sys.stderr.write(f"tightpaths {args.command}: error: {e}\n")
        return exit_code_for(e)
