import argparse
import logging
import math
import sys
from pathlib import Path
from typing import List, NoReturn, Optional, Tuple

from tightpaths.config import get_settings
from tightpaths.exceptions import (
    BenchmarkError,
    GraphError,
    PathCapExceeded,
    TightPathsException,
)
from tightpaths.graph.base import VertexWeightedDag, WeightedDigraph
from tightpaths.graph.io import load_graph

GammaRange = Tuple[float, float, Optional[int]]


class ExitCode:
    SUCCESS = 0
    USAGE = 1
    VALIDATION = 2
    MISMATCH = 3
    ORACLE_CAP = 4


class UsageError(TightPathsException):
    pass


class ArgumentParser(argparse.ArgumentParser):
    """Argument parser exiting with `ExitCode.USAGE` on bad command lines."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(ExitCode.USAGE, f"{self.prog}: error: {message}\n")


def exit_code_for(error: Exception) -> int:
    if isinstance(error, UsageError):
        return ExitCode.USAGE
    if isinstance(error, PathCapExceeded):
        return ExitCode.ORACLE_CAP
    return ExitCode.VALIDATION


def nonnegative_float(value: str) -> float:
    try:
        number = float(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{value!r} is not a number")
    if not number >= 0:
        raise argparse.ArgumentTypeError(f"{value!r} must be nonnegative")
    if math.isinf(number):
        raise argparse.ArgumentTypeError(f"{value!r} must be finite")
    return number


def positive_int(value: str) -> int:
    try:
        number = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{value!r} is not an integer")
    if number < 1:
        raise argparse.ArgumentTypeError(f"{value!r} must be at least 1")
    return number


def parse_gamma_range(value: str) -> GammaRange:
    """Read `LO:HI` or `LO:HI:N`; a missing `N` means the configured default."""
    parts = value.split(":")
    if len(parts) not in (2, 3):
        raise argparse.ArgumentTypeError(f"{value!r} is not LO:HI or LO:HI:N")
    low, high = nonnegative_float(parts[0]), nonnegative_float(parts[1])
    count = positive_int(parts[2]) if len(parts) == 3 else None
    return low, high, count


def gamma_values(low: float, high: float, count: Optional[int] = None) -> List[float]:
    """`count` equally spaced thresholds from `low` to `high`, both included."""
    if count is None:
        count = get_settings().bench_points
    if count < 2:
        raise BenchmarkError(f"a threshold range needs at least 2 points, got {count}")
    if not low < high:
        raise BenchmarkError(f"empty threshold range {low}:{high}")
    return [low + (high - low) * index / (count - 1) for index in range(count)]


def thresholds(args: argparse.Namespace) -> List[float]:
    if args.gamma_range is not None:
        return gamma_values(*args.gamma_range)
    if args.gamma is None:
        raise UsageError("one of --gamma or --gamma-range is required")
    return [args.gamma]


def common_options() -> ArgumentParser:
    options = ArgumentParser(add_help=False)
    options.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="Log progress (-v) or algorithm internals (-vv) to stderr.",
    )
    options.add_argument(
        "--tolerance",
        type=nonnegative_float,
        default=None,
        help="Slack added to the threshold in cost comparisons.",
    )
    options.add_argument(
        "--out", type=Path, default=None, help="Write to this file, not stdout."
    )
    return options


def threshold_options() -> ArgumentParser:
    options = ArgumentParser(add_help=False)
    group = options.add_mutually_exclusive_group()
    group.add_argument("--gamma", type=nonnegative_float, help="Cost threshold.")
    group.add_argument(
        "--gamma-range",
        type=parse_gamma_range,
        metavar="LO:HI:N",
        help="N equally spaced thresholds from LO to HI.",
    )
    return options


def configure_logging(verbosity: int) -> None:
    level = get_settings().log_level
    if verbosity == 1:
        level = "INFO"
    elif verbosity >= 2:
        level = "DEBUG"
    logging.basicConfig(
        level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s"
    )


def emit(text: str, out: Optional[Path]) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text, encoding="utf-8")


def load_edge_weighted(path: Path) -> WeightedDigraph:
    """Load a graph for path search; vertex-weighted graphs are converted."""
    graph = load_graph(path)
    if isinstance(graph, VertexWeightedDag):
        return graph.to_edge_weighted()
    return graph


def load_vertex_weighted(path: Path) -> VertexWeightedDag:
    graph = load_graph(path)
    if not isinstance(graph, VertexWeightedDag):
        raise GraphError(f"{path.name} is not a vertex-weighted acyclic graph (.vwg)")
    return graph
